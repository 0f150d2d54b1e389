"""Sweep tables and their JSON / CSV renderings."""

from __future__ import annotations

import datetime as _dt
import json
from concurrent.futures import Executor
from dataclasses import dataclass, field

from . import __version__
from .bounds import AuditRecord, audit
from .enumeration import DEFAULT_CAP

CSV_COLUMNS = ("n", "delta", "p", "theorem", "closed_form", "histogram_max",
               "empirical_max", "status", "gap", "witness_graph6")

IDENTITY_NOTICE = ("degree identities use sum i*n_i = 2n+2 and sum (i-1)*n_i = n+2 "
                   "(m = n+1), not the 2n / n printed for the unicyclic case")


@dataclass
class SweepTable:
    rows: list[AuditRecord]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rows.sort(key=lambda r: (r.n, r.delta))

    def to_json(self) -> str:
        body = {"metadata": self.metadata, "rows": [r.to_json() for r in self.rows]}
        return json.dumps(body, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SweepTable":
        obj = json.loads(text)
        return cls([AuditRecord.from_json(r) for r in obj["rows"]], obj["metadata"])

    def to_csv(self) -> str:
        lines = [",".join(CSV_COLUMNS)]
        for r in self.rows:
            rec = r.to_json()
            lines.append(",".join("" if rec[c] is None else str(rec[c]) for c in CSV_COLUMNS))
        return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[dict]:
    """Inverse of ``to_csv`` for the integer/string columns (empty means null)."""
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    out = []
    for line in lines[1:]:
        rec = {}
        for name, raw in zip(header, line.split(",")):
            if raw == "":
                rec[name] = None
            elif name in ("theorem", "status", "witness_graph6"):
                rec[name] = raw
            else:
                rec[name] = int(raw)
        out.append(rec)
    return out


def sweep_pairs(n_min: int, n_max: int, delta: int | None = None) -> list[tuple[int, int]]:
    pairs = []
    for n in range(n_min, n_max + 1):
        deltas = [delta] if delta is not None else range(3, n)
        pairs.extend((n, d) for d in deltas if 3 <= d <= n - 1)
    return pairs


def run_sweep(pairs, *, cap: int = DEFAULT_CAP, jobs: int = 1, executor: Executor | None = None,
              at_most: bool = False, timings: bool = False, stamp: bool = False,
              progress=None) -> SweepTable:
    rows = []
    for n, delta in pairs:
        rec = audit(n, delta, cap, jobs=jobs, executor=executor, at_most=at_most)
        if not timings:
            rec.runtime_ms = {"closed": 0, "histogram": 0, "enumeration": 0}
        if progress is not None:
            progress(rec)
        rows.append(rec)
    meta = {
        "tool": "findex",
        "version": __version__,
        "enumeration_cap": cap,
        "bicyclic": "connected, m = n + 1",
        "max_degree_filter": "at_most" if at_most else "exact",
        "identities": IDENTITY_NOTICE,
        "timings": "recorded" if timings else "suppressed",
    }
    if stamp:
        meta["date"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return SweepTable(rows, meta)
