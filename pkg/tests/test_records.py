import pytest

from dunwoody.classification import ManifoldClass
from dunwoody.diagram import SixTuple
from dunwoody.homology import INFINITE
from dunwoody.records import FIELDS, SweepConfig, SweepRecord, analyze, format_records, parse_range, run_sweep


def test_record_round_trips():
    for sigma in [(1, 2, 3, 4, 4, 4), (1, 0, 0, 1, 1, 0), (2, 0, 2, 1, 2, 0), (1, 0, 1, 2, 0, 0)]:
        rec = analyze(SixTuple(*sigma))
        assert SweepRecord.from_json(rec.to_json()) == rec


def test_big_integers_are_strings():
    rec = SweepRecord((0, 0, 1, 1, 0, 0), True, 1, 1, 0, 1, ManifoldClass("S3"), 2**70, "Z_big")
    data = rec.to_dict()
    assert data["h1_order"] == str(2**70)
    assert SweepRecord.from_dict(data) == rec
    assert analyze(SixTuple(1, 0, 0, 1, 1, 0)).to_dict()["h1_order"] == "infinite"
    assert SweepRecord.from_dict(analyze(SixTuple(1, 0, 0, 1, 1, 0)).to_dict()).h1_order is INFINITE


@pytest.mark.parametrize(
    "text, name, expected",
    [("3", "a", [3]), ("0..3", "b", [0, 1, 2, 3]), ("4,1,1", "c", [1, 4]), ("all", "r", "all"), ("auto", "s", "auto")],
)
def test_parse_range(text, name, expected):
    assert parse_range(text, name) == expected


@pytest.mark.parametrize("text, name", [("-1", "a"), ("0", "n"), ("all", "a"), ("auto", "r"), ("x", "b")])
def test_parse_range_rejects(text, name):
    with pytest.raises(ValueError):
        parse_range(text, name)


def test_config_file():
    config = SweepConfig.from_text(
        """
        # genus-one lens box
        a = 0..1
        b = 0
        c = 0..2
        n = 1
        r = all      # every residue
        s = 0
        filter = admissible
        format = csv
        jobs = 2
        """
    )
    assert config.c == [0, 1, 2] and config.r == "all" and config.filters == ("admissible",)
    assert (config.fmt, config.jobs) == ("csv", 2)
    for bad in ("a 1", "colour = red", "filter = tiny", "n = 0"):
        with pytest.raises(ValueError):
            SweepConfig.from_text(bad)


def test_tuples_are_lexicographic_and_unique():
    config = SweepConfig(a=[0, 1], b=[0], c=[0, 1], n=[1, 2], r=[0, 1, 2, 3], s="all")
    tuples = [t.astuple() for t in config.tuples()]
    assert tuples == sorted(set(tuples))
    assert (0, 0, 0, 1, 0, 0) not in tuples


def test_parallel_sweep_matches_serial():
    config = SweepConfig(a=[0, 1], b=[0, 1], c=[1, 2], n=[1, 2, 3])
    serial = list(run_sweep(config))
    config.jobs = 3
    assert list(run_sweep(config)) == serial


def test_p1_auto_filter_gives_sphere_quotients():
    config = SweepConfig(a=[0, 1, 2], b=[0, 1, 2], c=[0, 1, 2], n=[1, 2, 3], s="auto", filters=("admissible", "p1"))
    records = list(run_sweep(config))
    assert records
    assert {rec.quotient.tag for rec in records} == {"S3"}


def test_formats():
    records = list(run_sweep(SweepConfig(a=[0], c=[1], n=[2])))
    csv_text = format_records(records, "csv")
    assert csv_text.splitlines()[0] == ",".join(FIELDS)
    assert len(csv_text.splitlines()) == len(records) + 1
    assert format_records([], "csv") == ",".join(FIELDS) + "\n"
    assert format_records([], "json") == format_records([], "table") == ""
    assert format_records(records, "table").splitlines()[0].split() == list(FIELDS)
    with pytest.raises(ValueError):
        format_records(records, "xml")
