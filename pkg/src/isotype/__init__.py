"""Exact-arithmetic engine for J-ternary algebras and their short SL2 Lie algebras."""

from isotype.catalog import classical_example, exceptional_series, kantor
from isotype.exactlinalg.scalars import QQ_FIELD, Field
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.lieforge.assemble import assemble_L
from isotype.models.report import CheckResult, VerificationReport
from isotype.sweep import EXHAUSTIVE, SweepOptions

__version__ = "0.1.0"

__all__ = [
    "EXHAUSTIVE",
    "QQ_FIELD",
    "CheckResult",
    "Field",
    "JTernaryAlgebra",
    "SweepOptions",
    "VerificationReport",
    "assemble_L",
    "classical_example",
    "exceptional_series",
    "kantor",
]
