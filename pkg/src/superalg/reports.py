"""Check reports with deterministic JSON rendering.

The JSON body is a pure function of inputs and seed: timings are shown in
the text rendering only, so identical runs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckEntry:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    elapsed_s: float = 0.0


@dataclass
class Report:
    command: str
    algebra: str | None = None
    variant: str | None = None
    seed: int | None = None
    checks: list[CheckEntry] = field(default_factory=list)
    output: str | None = None  # expression results for non-check commands

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> str:
        body = {
            "schema": 1,
            "command": self.command,
            "algebra": self.algebra,
            "variant": self.variant,
            "seed": self.seed,
            "status": "pass" if self.passed else "fail",
            "output": self.output,
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.passed else "fail",
                    "details": c.details,
                    "failures": c.failures,
                }
                for c in self.checks
            ],
        }
        return json.dumps(body, sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = []
        if self.output is not None:
            lines.append(self.output)
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            detail = " ".join(f"{k}={v}" for k, v in sorted(c.details.items()))
            line = f"{status} {c.name}"
            if detail:
                line += f" ({detail})"
            line += f" [{c.elapsed_s:.2f}s]"
            lines.append(line)
            for f in c.failures[:10]:
                lines.append(f"  failure: {f}")
            if len(c.failures) > 10:
                lines.append(f"  ... and {len(c.failures) - 10} more")
        if self.checks:
            lines.append("overall: " + ("pass" if self.passed else "fail"))
        return "\n".join(lines)
