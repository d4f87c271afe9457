"""Verification report records and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Record:
    n: int
    lhs: str
    rhs: str
    route: str
    passed: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "lhs": self.lhs, "rhs": self.rhs, "route": self.route, "pass": self.passed}


@dataclass
class VerificationReport:
    identity: str
    records: list[Record] = field(default_factory=list)
    # (n, route, reason) for evaluations refused by a route's size cap
    skipped: list[tuple[int, str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    forced_fail: bool = False
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.forced_fail and all(r.passed for r in self.records)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "records": [r.to_dict() for r in self.records],
            "pass": self.passed,
        }
        if self.skipped:
            out["skipped"] = [{"n": n, "route": r, "reason": why} for n, r, why in self.skipped]
        if self.notes:
            out["notes"] = list(self.notes)
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        routes = sorted({r.route for r in self.records})
        ns = [r.n for r in self.records]
        span = f"n={min(ns)}..{max(ns)}" if ns else "no records"
        return f"{status} {self.identity} [{', '.join(routes)}] {span} ({len(self.records)} checks)"


def reports_to_json(reports: list[VerificationReport], timing: bool = False) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2)
