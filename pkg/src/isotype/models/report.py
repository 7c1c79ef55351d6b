"""Pydantic models for verification reports."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class Status(str, Enum):
    """Outcome of a verification task."""

    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


class CheckResult(BaseModel):
    """One named identity or property inside a report."""

    name: str
    passed: bool
    checked: int = 0
    violations: int = 0
    witness: Optional[list[str]] = None  # labels of the smallest failing tuple
    informational: bool = False  # recorded but does not affect the task status
    note: Optional[str] = None


class VerificationReport(BaseModel):
    """Machine-readable outcome of one task."""

    model_config = ConfigDict(use_enum_values=True)

    task: str
    status: Status
    dims: dict[str, int] = Field(default_factory=dict)
    checked: int = 0
    violations: int = 0
    witness: Optional[list[str]] = None
    checks: list[CheckResult] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    error: Optional[str] = None
    millis: Optional[int] = None

    @classmethod
    def from_checks(
        cls,
        task: str,
        checks: list[CheckResult],
        dims: dict[str, int] | None = None,
        notes: list[str] | None = None,
    ) -> "VerificationReport":
        """
        Aggregate check results into a report.

        Informational checks are kept in ``checks`` but ignored for the status, the counters and
        the witness.

        Args:
            task: Task identifier
            checks: Individual results in evaluation order
            dims: Dimension table
            notes: Free-form remarks

        Returns:
            Report with status pass iff every normative check passed
        """
        normative = [c for c in checks if not c.informational]
        failing = [c for c in normative if not c.passed]
        return cls(
            task=task,
            status=Status.FAIL if failing else Status.PASS,
            dims=dict(dims or {}),
            checked=sum(c.checked for c in normative),
            violations=sum(c.violations for c in normative) or len(failing),
            witness=next((c.witness for c in failing if c.witness), None),
            checks=list(checks),
            notes=list(notes or []),
        )

    @classmethod
    def from_error(cls, task: str, exc: BaseException) -> "VerificationReport":
        """Report for a task that could not run."""
        return cls(task=task, status=Status.ERROR, error=f"{type(exc).__name__}: {exc}")

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS.value

    def check(self, name: str) -> CheckResult:
        """Look up a check by name."""
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(f"report {self.task!r} has no check {name!r}")

    def failed_checks(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed and not c.informational]
