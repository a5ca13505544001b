"""Run records and their JSON-lines / CSV encodings.

JSON objects carry exactly :data:`JSON_KEYS`; CSV rows carry exactly
:data:`CSV_COLUMNS`.  Fields a format does not carry are rebuilt from the
polynomial when possible (genus and ``h`` from ``poly`` and vice versa).
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field, replace
from typing import Optional

from . import __version__
from .curves import from_coefficients
from .multipoly import parse_poly

JSON_KEYS = ("prime", "poly", "level", "capped", "chain", "rank_C", "p_rank", "nilpotency", "class", "bound", "ms", "version")
CSV_COLUMNS = ("prime", "genus", "h", "level", "capped", "rank_C", "p_rank", "nilpotency", "class", "bound", "ms", "seed")


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class RunRecord:
    prime: int
    poly: str
    genus: Optional[int] = None
    h: Optional[str] = None
    level: Optional[int] = None
    capped: bool = False
    chain: tuple = ()  # tuple of tuples of generator strings, strict part of the chain
    rank_C: Optional[int] = None
    p_rank: Optional[int] = None
    nilpotency: Optional[int] = None
    classification: Optional[str] = None
    bound: Optional[int] = None
    ms: Optional[int] = None
    version: str = __version__
    seed: str = field(default="", compare=False)

    @property
    def key(self) -> tuple:
        return (self.prime, self.h if self.h is not None else self.poly)

    def sort_key(self) -> tuple:
        return (self.prime, self.genus or 0, self.h or "", self.poly)

    def check(self):
        if self.level is not None and self.bound is not None and self.level < self.bound:
            raise RecordError(f"level {self.level} below the proven bound {self.bound} for {self.poly} at p={self.prime}")


def _h_from_poly(poly: str, p: int) -> tuple:
    """Recover ``(genus, h)`` from ``y^2 z^k - h(x, z)``; (None, None) if it is not of that shape."""
    f = parse_poly(poly, p)
    if not f.is_homogeneous() or f.coefficient((0, 2, f.degree() - 2)) != 1:
        return None, None
    rest = f - parse_poly(f"y^2*z^{f.degree() - 2}", p)
    if any(e[1] for e in rest.terms):
        return None, None
    deg = f.degree()
    c = [0] * (deg + 1)
    for (a, _, _), v in rest.terms.items():
        c[a] = (-v) % p
    h = from_coefficients(c, p)
    return (h.degree() - 1) // 2, h.to_string()


def _poly_from_h(h: str, p: int, genus: int) -> str:
    from .curves import from_weierstrass, homogenize

    return homogenize(from_weierstrass(h, p, genus)).to_string()


def to_json(rec: RunRecord) -> str:
    obj = {
        "prime": rec.prime,
        "poly": rec.poly,
        "level": rec.level,
        "capped": rec.capped,
        "chain": [list(j) for j in rec.chain],
        "rank_C": rec.rank_C,
        "p_rank": rec.p_rank,
        "nilpotency": rec.nilpotency,
        "class": rec.classification,
        "bound": rec.bound,
        "ms": rec.ms,
        "version": rec.version,
    }
    return json.dumps(obj, separators=(",", ":"))


def from_json(line: str) -> RunRecord:
    obj = json.loads(line)
    keys = set(obj)
    if keys != set(JSON_KEYS):
        missing = set(JSON_KEYS) - keys
        extra = keys - set(JSON_KEYS)
        raise RecordError(f"bad record keys: missing {sorted(missing)}, unknown {sorted(extra)}")
    genus, h = _h_from_poly(obj["poly"], obj["prime"])
    return RunRecord(
        prime=obj["prime"], poly=obj["poly"], genus=genus, h=h, level=obj["level"], capped=obj["capped"],
        chain=tuple(tuple(j) for j in obj["chain"]), rank_C=obj["rank_C"], p_rank=obj["p_rank"],
        nilpotency=obj["nilpotency"], classification=obj["class"], bound=obj["bound"], ms=obj["ms"],
        version=obj["version"],
    )


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _int_or_none(s: str) -> Optional[int]:
    return int(s) if s != "" else None


def csv_header() -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(CSV_COLUMNS)
    return buf.getvalue()


def to_csv_row(rec: RunRecord) -> str:
    vals = [rec.prime, rec.genus, rec.h, rec.level, rec.capped, rec.rank_C, rec.p_rank, rec.nilpotency,
            rec.classification, rec.bound, rec.ms, rec.seed]
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow([_cell(v) for v in vals])
    return buf.getvalue()


def from_csv_row(row: dict, version: str = __version__) -> RunRecord:
    if tuple(row) != CSV_COLUMNS:
        raise RecordError(f"bad CSV columns {list(row)}")
    p = int(row["prime"])
    genus = _int_or_none(row["genus"])
    return RunRecord(
        prime=p, poly=_poly_from_h(row["h"], p, genus), genus=genus, h=row["h"], level=_int_or_none(row["level"]),
        capped=row["capped"] == "true", rank_C=_int_or_none(row["rank_C"]), p_rank=_int_or_none(row["p_rank"]),
        nilpotency=_int_or_none(row["nilpotency"]), classification=row["class"] or None,
        bound=_int_or_none(row["bound"]), ms=_int_or_none(row["ms"]), version=version, seed=row["seed"],
    )


def read_records(path) -> list:
    if not os.path.exists(path):
        return []
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if not text.strip():
        return []
    if str(path).endswith(".csv"):
        return [from_csv_row(r) for r in csv.DictReader(io.StringIO(text))]
    return [from_json(line) for line in text.splitlines() if line.strip()]


def render(records, csv_format: bool) -> str:
    records = sorted(records, key=RunRecord.sort_key)
    if csv_format:
        return csv_header() + "".join(to_csv_row(r) for r in records)
    return "".join(to_json(r) + "\n" for r in records)


def without_chain(rec: RunRecord) -> RunRecord:
    return replace(rec, chain=())
