"""Verification reports: assembling records into a document, JSON/CSV output."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__
from .identities import (
    Adjudication,
    ConventionSet,
    VerificationRecord,
    adjudicate,
    sweep,
)

CSV_COLUMNS = ("q", "chi_index", "s", "identity", "convention", "re", "im",
               "oracle_re", "oracle_im", "abs_dev", "rel_dev")

# small grid used to pick conventions when a verify run does not pin them
CALIBRATION_GRID = {"q_max": 8, "s_max": 6}


def fmt_float(x: float) -> str:
    return format(x, ".17g")


@dataclass
class VerifyConfig:
    q_min: int
    q_max: int
    s_max: int
    tol: float = 1e-7
    conventions: dict[str, str] | None = None  # resolved set; None means adjudicate
    overrides: dict[str, str] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"q_min": self.q_min, "q_max": self.q_max, "s_max": self.s_max,
                "tol": self.tol, "conventions": self.conventions, "overrides": self.overrides}

    @classmethod
    def from_dict(cls, data: dict) -> VerifyConfig:
        return cls(int(data["q_min"]), int(data["q_max"]), int(data["s_max"]),
                   float(data.get("tol", 1e-7)), data.get("conventions"),
                   dict(data.get("overrides") or {}))


@dataclass
class ReportDocument:
    version: str
    config: VerifyConfig
    records: list[VerificationRecord]
    adjudication: Adjudication | None = None

    @property
    def summary(self) -> dict[str, dict]:
        out: dict[str, dict] = {}
        for r in self.records:
            entry = out.setdefault(r.identity, {"count": 0, "max_abs_dev": 0.0, "violations": 0})
            entry["count"] += 1
            entry["max_abs_dev"] = max(entry["max_abs_dev"], r.abs_dev)
            if r.abs_dev > self.config.tol:
                entry["violations"] += 1
        return dict(sorted(out.items()))

    @property
    def violations(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.abs_dev > self.config.tol]

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        doc = {
            "tool": "dirichlet-lab",
            "version": self.version,
            "config": self.config.as_dict(),
            "passed": self.passed,
            "summary": self.summary,
            "records": [r.as_dict() for r in self.records],
        }
        if self.adjudication is not None:
            doc["adjudication"] = {k: v.as_dict() for k, v in self.adjudication.sites.items()}
        return doc

    def to_json(self) -> str:
        return dumps(self.as_dict())

    def to_csv(self) -> str:
        return records_csv(self.records)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def records_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        d = r.as_dict()
        writer.writerow([_cell(d[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def _cell(value) -> str:
    if isinstance(value, float):
        return fmt_float(value)
    return "" if value is None else str(value)


def rows_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buf.getvalue()


def resolve_conventions(config: VerifyConfig) -> tuple[ConventionSet, Adjudication | None]:
    if config.conventions:
        return ConventionSet(**config.conventions).with_overrides(config.overrides), None
    adj = adjudicate(**CALIBRATION_GRID)
    return adj.conventions().with_overrides(config.overrides), adj


def run_verify(config: VerifyConfig) -> ReportDocument:
    """Sweep the grid; the resolved conventions are written back into the config."""
    conventions, adj = resolve_conventions(config)
    records = sweep(config.q_min, config.q_max, config.s_max, conventions)
    resolved = VerifyConfig(config.q_min, config.q_max, config.s_max, config.tol,
                            conventions.as_dict(), dict(config.overrides))
    return ReportDocument(__version__, resolved, records, adj)


def errata_text(adj: Adjudication) -> str:
    lines = [f"Convention adjudication (3 <= q <= {adj.q_max}, 1 <= s <= {adj.s_max}, "
             f"tol {adj.tol:g})", ""]
    for site, v in adj.sites.items():
        lines.append(f"[{site}] {v.verdict}")
        for option, dev in v.max_dev.items():
            mark = "pass" if option in v.passing else "FAIL"
            tag = " (printed)" if option == v.printed else ""
            lines.append(f"    {option:<16}{tag:<10} max deviation {dev:.3e}  {mark}")
        if not v.separable:
            lines.append("    both options agree on every grid point")
        lines.append("")
    lines.append("Derived errata")
    for e in adj.errata:
        lines.append(f"  - {e['id']}: {e['claim']}")
        lines.append(f"      -> {e['derived']}")
    return "\n".join(lines) + "\n"
