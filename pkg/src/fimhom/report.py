"""Verification reports: named cases with a status and a details table."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("PASS", "FAIL", "UNKNOWN", "RECORDED")


def _plain(x):
    """JSON-friendly copy: tuples become lists, dict keys become strings."""
    if isinstance(x, dict):
        return {_key(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def _key(k) -> str:
    if isinstance(k, tuple):
        return "(" + ",".join(str(a) for a in k) + ")"
    return str(k)


@dataclass
class Case:
    name: str
    status: str
    details: dict = field(default_factory=dict)


@dataclass
class Report:
    suite: str
    config: dict
    cases: list = field(default_factory=list)

    def add(self, name: str, status: str, **details) -> Case:
        if status not in STATUSES:
            raise ValueError(f"unknown status {status}")
        case = Case(name, status, details)
        self.cases.append(case)
        return case

    def check(self, name: str, ok: bool, **details) -> Case:
        return self.add(name, "PASS" if ok else "FAIL", **details)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.cases:
            self.cases.append(Case(prefix + c.name, c.status, c.details))

    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for c in self.cases:
            counts[c.status] += 1
        return counts

    @property
    def failed(self) -> bool:
        return any(c.status == "FAIL" for c in self.cases)

    def to_dict(self) -> dict:
        cases = sorted(self.cases, key=lambda c: c.name)
        return {
            "suite": self.suite,
            "config": _plain(self.config),
            "cases": [{"name": c.name, "status": c.status, "details": _plain(c.details)} for c in cases],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True, ensure_ascii=False) + "\n"

    def text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in sorted(self.cases, key=lambda c: c.name):
            lines.append(f"  {c.status:<8} {c.name}")
        s = self.summary()
        lines.append("  " + "  ".join(f"{k}={v}" for k, v in s.items()))
        return "\n".join(lines)
