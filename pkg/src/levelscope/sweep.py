"""Family and random-curve sweeps producing :class:`RunRecord` files."""

from __future__ import annotations

import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .cartier import SUPERSPECIAL, analyze, level_lower_bound
from .curves import CurveModel, family, homogenize, random_curve
from .fields import primes_between
from .level import DEFAULT_E_MAX, level_chain
from .records import RunRecord, read_records, render

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Task:
    family: str
    genus: int
    prime: int
    mu: Optional[int] = None
    seed: Optional[int] = None
    index: int = 0

    def curve(self) -> CurveModel:
        if self.family == "random":
            return random_curve(self.genus, self.prime, [self.seed, self.prime, self.index])
        model, _ = family(self.family, self.genus, self.mu, self.prime)
        return model

    def provenance(self) -> str:
        if self.family == "random":
            return f"random:{self.seed}:{self.index}"
        return f"{self.family}:mu={self.mu}"


def parse_range(text: str) -> tuple:
    """``"LO..HI"`` -> ``(LO, HI)``; a single number means ``LO == HI``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"empty prime range {text!r}")
    return lo, hi


def make_tasks(family_name: str, genus: int, lo: int, hi: int, mu: int = 1, count: int = 1, seed: int = 0) -> list:
    tasks = []
    for p in primes_between(lo, hi):
        if family_name == "random":
            tasks.extend(Task("random", genus, p, seed=seed, index=i) for i in range(count))
        elif mu % p:
            tasks.append(Task(family_name, genus, p, mu=mu))
    return tasks


def compute_record(model: CurveModel, e_max: int = DEFAULT_E_MAX, timings: bool = False, seed: str = "") -> RunRecord:
    """Cartier-Manin data and level for an imaginary model."""
    t0 = time.perf_counter()
    data = analyze(model)
    f = homogenize(model)
    res = level_chain(f, e_max)
    ms = round((time.perf_counter() - t0) * 1000) if timings else None
    bound = level_lower_bound(data) if model.genus >= 2 else None
    rec = RunRecord(
        prime=model.p, poly=f.to_string(), genus=model.genus, h=model.h.to_string(), level=res.level,
        capped=res.capped, chain=tuple(tuple(j.to_strings()) for j in res.strict_chain), rank_C=data.rank_C,
        p_rank=data.p_rank, nilpotency=data.nilpotency, classification=data.classification, bound=bound,
        ms=ms, seed=seed,
    )
    _flag(rec)
    return rec


def _flag(rec: RunRecord):
    if rec.level is not None and rec.bound is not None and rec.level < rec.bound:
        log.error("INCONSISTENT: level %s below proven bound %s for %s at p=%s", rec.level, rec.bound, rec.poly, rec.prime)
    if rec.classification == SUPERSPECIAL and rec.level is not None and rec.level <= 2 and (rec.genus or 0) >= 2:
        log.warning("CONJECTURE COUNTEREXAMPLE: superspecial curve %s at p=%s has level %s", rec.h, rec.prime, rec.level)


def _run_task(args) -> RunRecord:
    task, e_max, timings = args
    return compute_record(task.curve(), e_max, timings, seed=task.provenance())


def run_sweep(tasks, out_path, resume: bool = False, jobs: int = 1, e_max: int = DEFAULT_E_MAX,
              timings: bool = False) -> dict:
    """Compute every task not already in ``out_path`` and rewrite the file sorted by key.

    Returns counts ``{"computed": n, "skipped": m, "total": k}``.
    """
    csv_format = str(out_path).endswith(".csv")
    existing = read_records(out_path) if resume else []
    have = {r.key for r in existing}
    todo = []
    skipped = 0
    for t in tasks:
        m = t.curve()
        if (m.p, m.h.to_string()) in have:
            skipped += 1
        else:
            todo.append(t)
    args = [(t, e_max, timings) for t in todo]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fresh = list(pool.map(_run_task, args, chunksize=1))
    else:
        fresh = [_run_task(a) for a in args]
    merged = {r.key: r for r in existing}
    for r in fresh:
        merged.setdefault(r.key, r)
    text = render(merged.values(), csv_format)
    _atomic_write(out_path, text)
    return {"computed": len(fresh), "skipped": skipped, "total": len(merged)}


def _atomic_write(path, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sweep-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
