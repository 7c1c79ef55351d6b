"""Pydantic models for reports and algebra-spec files."""

from isotype.models.report import CheckResult, Status, VerificationReport
from isotype.models.spec import (
    AlgebraKind,
    AlgebraSpec,
    AlgSpec,
    Builder,
    Command,
    ConstructionSpec,
    ElementSpec,
    EntrySpec,
    JTernarySpec,
    MapSpec,
    SpaceSpec,
    SpecReferenceError,
    TaskSpec,
    dump_spec,
)

__all__ = [
    # Report models
    "Status",
    "CheckResult",
    "VerificationReport",
    # Spec models
    "AlgSpec",
    "AlgebraKind",
    "AlgebraSpec",
    "Builder",
    "Command",
    "ConstructionSpec",
    "ElementSpec",
    "EntrySpec",
    "JTernarySpec",
    "MapSpec",
    "SpaceSpec",
    "SpecReferenceError",
    "TaskSpec",
    "dump_spec",
]
