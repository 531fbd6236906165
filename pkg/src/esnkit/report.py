"""Check reports shared by every checker, the CLI and the tests."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


def _jsonable(value: Any) -> Any:
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {_key(k): _jsonable(v) for k, v in value.items()}
    return value


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


@dataclass
class Report:
    """Verdict plus a list of ``(axiom_tag, witness)`` pairs.

    The verdict is true exactly when there are no witnesses.  ``data`` holds
    derived sections (orders, projection sets, lookup tables) and ``notes``
    free-form remarks such as "conditional on ec4".
    """

    subject: str
    violations: list[tuple[str, tuple]] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not self.violations

    def add(self, tag: str, *witness: Any) -> None:
        self.violations.append((tag, tuple(witness)))

    def merge(self, other: "Report", prefix: str = "") -> None:
        for tag, wit in other.violations:
            self.violations.append((prefix + tag, wit))
        self.notes.extend(other.notes)

    def tags(self) -> set[str]:
        return {tag for tag, _ in self.violations}

    def witnesses(self, tag: str) -> list[tuple]:
        return [w for t, w in self.violations if t == tag]

    def summary(self) -> str:
        if self.verdict:
            return f"{self.subject}: PASS"
        counts: dict[str, int] = {}
        for tag, _ in self.violations:
            counts[tag] = counts.get(tag, 0) + 1
        parts = ", ".join(f"{t} x{c}" for t, c in sorted(counts.items()))
        return f"{self.subject}: FAIL ({parts})"

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "violations": [{"axiom": t, "witness": _jsonable(w)} for t, w in self.violations],
            "data": _jsonable({k: v for k, v in self.data.items() if not str(k).startswith("_")}),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def render(self, max_witnesses: int = 20) -> str:
        lines = [self.summary()]
        for tag, wit in self.violations[:max_witnesses]:
            lines.append(f"  {tag}: {_fmt(wit)}")
        if len(self.violations) > max_witnesses:
            lines.append(f"  ... {len(self.violations) - max_witnesses} more")
        for note in self.notes:
            lines.append(f"  note: {note}")
        for key, value in self.data.items():
            if str(key).startswith("_"):
                continue
            lines.append(f"  {key}: {_fmt(value)}")
        return "\n".join(lines)


def _fmt(value: Any) -> str:
    if isinstance(value, (frozenset, set)):
        return "{" + ", ".join(str(v) for v in sorted(value)) + "}"
    if isinstance(value, dict) and len(value) > 12:
        return f"<{len(value)} entries>"
    return str(value)
