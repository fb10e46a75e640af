from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    """Named pass/fail lines produced by the verification suites."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "SuiteReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json_obj(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }

    def table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=4)
        lines = [self.title]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  {c.name:<{width}}  {mark}  {c.detail}".rstrip())
        lines.append(f"  => {'all passed' if self.ok else f'{len(self.failures())} failed'}")
        return "\n".join(lines)
