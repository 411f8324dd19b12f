"""Per-tuple analysis records and box enumeration used by the command line."""
from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .admissibility import is_admissible
from .classification import ManifoldClass, auto_s, classify_genus_one
from .diagram import SixTuple
from .homology import INFINITE, first_homology
from .presentation import build_presentation, exponent_sum

INT64_MAX = 2**63 - 1

FIELDS = ("a", "b", "c", "n", "r", "s", "admissible", "m", "p", "q", "eps_w", "quotient", "h1_order", "h1")


def _encode_int(x):
    if x is INFINITE:
        return "infinite"
    if x is None or abs(x) <= INT64_MAX:
        return x
    return str(x)


def _decode_int(x):
    if x == "infinite":
        return INFINITE
    if isinstance(x, str):
        return int(x)
    return x


@dataclass(frozen=True)
class SweepRecord:
    sigma: tuple[int, int, int, int, int, int]
    admissible: bool
    m: int
    p: int | None
    q: int | None
    eps_w: int | None = None
    quotient: ManifoldClass | None = None
    h1_order: object = None
    h1: str | None = field(default=None)

    def to_dict(self) -> dict:
        a, b, c, n, r, s = self.sigma
        return {
            "a": a,
            "b": b,
            "c": c,
            "n": n,
            "r": r,
            "s": s,
            "admissible": self.admissible,
            "m": self.m,
            "p": self.p,
            "q": self.q,
            "eps_w": self.eps_w,
            "quotient": self.quotient.as_dict() if self.quotient else None,
            "h1_order": _encode_int(self.h1_order),
            "h1": self.h1,
        }

    @classmethod
    def from_dict(cls, data: dict) -> SweepRecord:
        return cls(
            sigma=tuple(data[k] for k in "abcnrs"),
            admissible=data["admissible"],
            m=data["m"],
            p=data["p"],
            q=data["q"],
            eps_w=data["eps_w"],
            quotient=ManifoldClass.from_dict(data["quotient"]) if data["quotient"] else None,
            h1_order=_decode_int(data["h1_order"]),
            h1=data["h1"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> SweepRecord:
        return cls.from_dict(json.loads(text))

    def flat(self) -> dict:
        row = self.to_dict()
        row["quotient"] = str(self.quotient) if self.quotient else ""
        return {k: ("" if row[k] is None else row[k]) for k in FIELDS}


def analyze(sigma: SixTuple) -> SweepRecord:
    report = is_admissible(sigma)
    if not report.admissible:
        return SweepRecord(sigma.astuple(), False, report.m_cycles, report.p_sigma, report.q_sigma)
    word = build_presentation(sigma).base_word
    group = first_homology(sigma)
    return SweepRecord(
        sigma.astuple(),
        True,
        report.m_cycles,
        report.p_sigma,
        report.q_sigma,
        exponent_sum(word),
        classify_genus_one(sigma.quotient()),
        group.order,
        str(group),
    )


# --- boxes -----------------------------------------------------------------

ALL = "all"
AUTO = "auto"


def parse_range(text: str, name: str) -> list[int] | str:
    """``3``, ``0..4`` (inclusive), ``1,3,5``, ``all`` (r and s only) or ``auto`` (s only)."""
    text = text.strip()
    if text == ALL and name in ("r", "s"):
        return ALL
    if text == AUTO and name == "s":
        return AUTO
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        elif part:
            values.append(int(part))
    if name in ("a", "b", "c", "n") and any(v < 0 for v in values):
        raise ValueError(f"{name} range must be non-negative")
    if name == "n" and any(v == 0 for v in values):
        raise ValueError("n must be positive")
    return sorted(set(values))


@dataclass
class SweepConfig:
    a: list[int] = field(default_factory=lambda: [0])
    b: list[int] = field(default_factory=lambda: [0])
    c: list[int] = field(default_factory=lambda: [1])
    n: list[int] = field(default_factory=lambda: [1])
    r: list[int] | str = ALL
    s: list[int] | str = ALL
    filters: tuple[str, ...] = ()
    fmt: str = "table"
    jobs: int | None = None  # None: let the caller decide

    FILTERS = ("admissible", "p1", "dodd")

    def __post_init__(self):
        for f in self.filters:
            if f not in self.FILTERS:
                raise ValueError(f"unknown filter {f!r}; choose from {', '.join(self.FILTERS)}")

    def tuples(self):
        """Every tuple in the box, in lexicographic order, with duplicates after reduction removed."""
        seen = set()
        for a, b, c, n in itertools.product(self.a, self.b, self.c, self.n):
            if a + b + c == 0:
                continue
            d = 2 * a + b + c
            rs = range(d) if self.r == ALL else self.r
            for r in sorted({x % d for x in rs}):
                if self.s == AUTO:
                    try:
                        ss = [auto_s(a, b, c, r) % n]
                    except ValueError:
                        continue
                else:
                    ss = sorted({x % n for x in (range(n) if self.s == ALL else self.s)})
                for s in ss:
                    key = (a, b, c, n, r, s)
                    if key not in seen:
                        seen.add(key)
                        yield SixTuple(*key)

    def keep(self, record: SweepRecord) -> bool:
        if "admissible" in self.filters and not record.admissible:
            return False
        if "p1" in self.filters and record.p not in (1, -1):
            return False
        if "dodd" in self.filters:
            a, b, c = record.sigma[:3]
            if (2 * a + b + c) % 2 == 0:
                return False
        return True

    @classmethod
    def from_text(cls, text: str) -> SweepConfig:
        """Parse ``key = value`` lines; ``#`` starts a comment."""
        kwargs: dict = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"line {lineno}: expected key = value")
            key, value = (x.strip() for x in line.split("=", 1))
            if key in ("a", "b", "c", "n", "r", "s"):
                kwargs[key] = parse_range(value, key)
            elif key in ("filter", "filters"):
                kwargs["filters"] = tuple(v.strip() for v in value.split(",") if v.strip())
            elif key == "format":
                kwargs["fmt"] = value
            elif key == "jobs":
                kwargs["jobs"] = int(value)
            else:
                raise ValueError(f"line {lineno}: unknown key {key!r}")
        return cls(**kwargs)


def run_sweep(config: SweepConfig):
    """Yield the kept records in lexicographic order of the tuple."""
    tuples = list(config.tuples())
    jobs = config.jobs or 1
    if jobs > 1 and len(tuples) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(analyze, tuples, chunksize=max(1, len(tuples) // (8 * jobs)))
            for rec in results:
                if config.keep(rec):
                    yield rec
    else:
        for sigma in tuples:
            rec = analyze(sigma)
            if config.keep(rec):
                yield rec


def format_records(records, fmt: str) -> str:
    records = list(records)
    if fmt == "json":
        return "".join(rec.to_json() + "\n" for rec in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow(rec.flat())
        return buf.getvalue()
    if fmt == "table":
        rows = [[str(v) for v in rec.flat().values()] for rec in records]
        widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(FIELDS)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(FIELDS, widths))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
        return "\n".join(lines) + "\n" if rows else ""
    raise ValueError(f"unknown format {fmt!r}")
