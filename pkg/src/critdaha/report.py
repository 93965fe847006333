"""Verification records and their text / JSON renderings."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, VACUOUS, NOT_APPLICABLE = "pass", "fail", "vacuous", "n/a"
OK_STATUSES = (PASS, VACUOUS, NOT_APPLICABLE)


@dataclass
class CaseRecord:
    relation: str
    params: dict[str, Any]
    status: str
    witness: str | None = None
    id: str = ""
    note: str | None = None

    @property
    def ok(self) -> bool:
        return self.status in OK_STATUSES

    def to_dict(self) -> dict:
        d = {"id": self.id, "relation": self.relation,
             "params": {k: _jsonable(v) for k, v in self.params.items()},
             "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note is not None:
            d["note"] = self.note
        return d


def _jsonable(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def check(relation: str, params: dict, residue_zero: bool, witness=None, note=None) -> CaseRecord:
    """Case record from a boolean outcome; the witness renderer is only called on failure."""
    if residue_zero:
        return CaseRecord(relation, params, PASS, note=note)
    w = witness() if callable(witness) else witness
    return CaseRecord(relation, params, FAIL, w if w is not None else "(no witness)", note=note)


@dataclass
class VerificationReport:
    suite: str
    spec: dict
    seed: int | None = None
    cases: list[CaseRecord] = field(default_factory=list)
    timing_ms: float | None = None
    extra: dict = field(default_factory=dict)

    def add(self, case: CaseRecord) -> CaseRecord:
        self.cases.append(case)
        return case

    def extend(self, cases) -> None:
        for c in cases:
            self.add(c)

    def finalize(self) -> "VerificationReport":
        """Assign deterministic case ids in insertion order."""
        width = max(3, len(str(len(self.cases))))
        for i, c in enumerate(self.cases):
            c.id = f"{self.suite}-{i:0{width}d}"
        return self

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def failures(self) -> list[CaseRecord]:
        return [c for c in self.cases if not c.ok]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.cases:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def to_dict(self) -> dict:
        d = {"suite": self.suite, "spec": self.spec, "seed": self.seed,
             "cases": [c.to_dict() for c in self.cases],
             "timing_ms": None if self.timing_ms is None else round(self.timing_ms, 3)}
        if self.extra:
            d["extra"] = _jsonable(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, ensure_ascii=False)

    def render_text(self) -> str:
        spec = self.spec
        head = (f"suite {self.suite}  {spec['family']}{spec['rank']} ({spec['twist']})"
                f"  seed={self.seed}")
        lines = [head]
        for c in self.cases:
            params = ", ".join(f"{k}={_jsonable(v)}" for k, v in c.params.items())
            line = f"  [{c.status:>7}] {c.id} {c.relation}({params})"
            if c.note:
                line += f"  # {c.note}"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"           witness: {c.witness}")
        summary = ", ".join(f"{k}={v}" for k, v in sorted(self.counts().items()))
        t = "" if self.timing_ms is None else f"  {self.timing_ms:.0f} ms"
        lines.append(f"  => {'PASS' if self.passed else 'FAIL'} ({summary}){t}")
        return "\n".join(lines)
