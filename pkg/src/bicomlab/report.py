from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification claim; serialises to the report JSON form."""

    claim: str
    degree: int | None
    passed: bool
    dims: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"claim": self.claim, "degree": self.degree, "pass": self.passed, "dims": self.dims}
        if self.notes:
            out["notes"] = self.notes
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        deg = "" if self.degree is None else f" n={self.degree}"
        dims = " ".join(f"{k}={v}" for k, v in self.dims.items())
        text = f"{status} {self.claim}{deg}"
        if dims:
            text += f" [{dims}]"
        for note in self.notes:
            text += f"\n  {note}"
        return text
