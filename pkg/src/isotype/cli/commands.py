"""Task execution for the build, verify, decompose and catalog commands."""

import logging
import time
from collections.abc import Callable, Iterator
from typing import Any

from isotype.catalog import (
    ClassicalExample,
    CompositionAlgebra,
    ExceptionalSeries,
    KantorAlgebra,
    check_against_5grading,
    check_composition,
    check_full_algebra,
    check_hermitian,
    check_involution,
    check_phi_identities,
    check_structurable,
    instrl,
    kantor,
    sl2_candidate,
    verify_quadratic_factor,
)
from isotype.catalog.structurable import StructurableAlgebra
from isotype.cli.resolve import (
    SpecContext,
    as_classical,
    as_composition,
    as_exceptional,
    as_involutive,
    as_jordan,
    as_jternary,
    as_lie,
    as_structurable_algebra,
    default_idempotent,
)
from isotype.errors import IsotypeError, PreconditionError, SpecError
from isotype.exactlinalg.vectors import Sparse
from isotype.jordan.algebra import check_jordan
from isotype.jordan.peirce import check_peirce_rules, peirce_decompose
from isotype.jternary.axioms import (
    check_jt_axioms,
    check_special_module,
    check_theorem23,
    compare_jternary,
)
from isotype.jternary.split import split_T
from isotype.lieforge.algebra import (
    Sl2Triple,
    check_antisymmetry,
    check_jacobi,
    structure_report,
)
from isotype.lieforge.assemble import AssembledLie, assemble_L
from isotype.lieforge.grading import jternary_from_5grading
from isotype.lieforge.isotypic import short_sl2_decompose, short_sl2sl2_decompose
from isotype.models.report import VerificationReport
from isotype.models.spec import Command, TaskSpec
from isotype.sweep import SweepOptions

logger = logging.getLogger(__name__)

Runner = Callable[[SpecContext, TaskSpec], VerificationReport]


def _verify_phi(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    example = as_classical(ctx.get(task.of))
    checks = check_phi_identities(example.module, example.jt, ctx.options)
    return VerificationReport.from_checks("phi", checks, dims={"T": example.jt.tdim})


def _verify_antisymmetry(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    L = as_lie(ctx.get(task.of))
    return VerificationReport.from_checks(
        "antisymmetry", [check_antisymmetry(L, ctx.options)], dims={"L": L.dim}
    )


def _verify_5grading(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    obj = ctx.get(task.of)
    if isinstance(obj, ExceptionalSeries):
        if obj.kantor is None:
            raise PreconditionError(f"{task.of} was built without its Kantor algebra")
        checks = check_against_5grading(obj.kantor, obj.jt, obj.s, obj.s_prime)
        dims = {"K": obj.kantor.algebra.dim, "J": obj.jt.jdim, "T": obj.jt.tdim}
        return VerificationReport.from_checks("5grading", checks, dims=dims)
    if not isinstance(obj, AssembledLie):
        raise PreconditionError("5grading needs an assembled Lie algebra or an exceptional series")
    extracted = jternary_from_5grading(obj.algebra, obj.triple.E, obj.triple.F)
    checks = compare_jternary(obj.jt, extracted)
    dims = {"L": obj.algebra.dim, "J": obj.nJ, "T": obj.nT}
    return VerificationReport.from_checks("5grading", checks, dims=dims)


VERIFIERS: dict[str, Runner] = {
    "jordan": lambda ctx, t: check_jordan(as_jordan(ctx.get(t.of)), ctx.options),
    "jternary": lambda ctx, t: check_jt_axioms(as_jternary(ctx.get(t.of)), ctx.options),
    "special-module": lambda ctx, t: check_special_module(
        as_jternary(ctx.get(t.of)), ctx.options
    ),
    "theorem23": lambda ctx, t: check_theorem23(as_jternary(ctx.get(t.of)), ctx.options),
    "structurable": lambda ctx, t: check_structurable(
        as_structurable_algebra(ctx.get(t.of)), ctx.options
    ),
    "jacobi": lambda ctx, t: check_jacobi(as_lie(ctx.get(t.of)), ctx.options),
    "antisymmetry": _verify_antisymmetry,
    "structure": lambda ctx, t: structure_report(as_lie(ctx.get(t.of))),
    "composition": lambda ctx, t: check_composition(as_composition(ctx.get(t.of)), ctx.options),
    "involution": lambda ctx, t: check_involution(as_involutive(ctx.get(t.of)), ctx.options),
    "hermitian": lambda ctx, t: check_hermitian(as_classical(ctx.get(t.of)).module, ctx.options),
    "phi": _verify_phi,
    "quadratic-factor": lambda ctx, t: verify_quadratic_factor(
        as_exceptional(ctx.get(t.of)).albert, as_exceptional(ctx.get(t.of)).jt, ctx.options
    ),
    "5grading": _verify_5grading,
}
VERIFIERS["jt"] = VERIFIERS["jternary"]


def _build_assemble(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    obj = ctx.get(task.of)
    if isinstance(obj, ExceptionalSeries) and obj.assembled is not None and not task.derivations:
        assembled = obj.assembled
    else:
        mode = task.derivations or "inner"
        if mode not in ("inner", "full"):
            raise PreconditionError(f"derivations must be 'inner' or 'full', not {mode!r}")
        assembled = assemble_L(as_jternary(obj), "full" if mode == "full" else "inner")
    ctx.register(task.name or f"L({task.of})", assembled)
    checks = [*assembled.checks, check_antisymmetry(assembled.algebra, ctx.options)]
    notes = [f"derivations: {assembled.mode}"]
    return VerificationReport.from_checks(
        "build-assemble", checks, dims=assembled.dims, notes=notes
    )


def _build_kantor(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    obj = ctx.get(task.of)
    K = obj if isinstance(obj, KantorAlgebra) else None
    if isinstance(obj, ExceptionalSeries):
        K = obj.kantor
    if K is None:
        K = kantor(as_structurable_algebra(obj), ctx.options)
    ctx.register(task.name or f"K({task.of})", K)
    return VerificationReport.from_checks("build-kantor", K.checks, dims=K.dims)


def _build_prototype(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    example = as_classical(ctx.get(task.of))
    ctx.register(task.name or f"JT({task.of})", example.jt)
    report = check_hermitian(example.module, ctx.options)
    dims = {**report.dims, "J": example.jt.jdim}
    return VerificationReport.from_checks("build-prototype", report.checks, dims=dims)


BUILDERS: dict[str, Runner] = {
    "assemble": _build_assemble,
    "kantor": _build_kantor,
    "prototype": _build_prototype,
}


def _assembled(ctx: SpecContext, obj: Any) -> AssembledLie:
    if isinstance(obj, AssembledLie):
        return obj
    if isinstance(obj, ExceptionalSeries) and obj.assembled is not None:
        return obj.assembled
    return assemble_L(as_jternary(obj))


def _idempotent(ctx: SpecContext, task: TaskSpec, owner: Any) -> Sparse:
    if task.idempotent is None:
        default = default_idempotent(owner)
        if default is None:
            raise PreconditionError(f"{task.mode} needs --idempotent")
        return default
    return ctx.element(task.idempotent, owner)


def _decompose_sl2(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    obj = ctx.get(task.of)
    if isinstance(obj, ExceptionalSeries) and obj.kantor is not None:
        L = obj.kantor.algebra
        E, F = sl2_candidate(obj.kantor, obj.s, obj.s_prime)
        triple = Sl2Triple(E, L.bracket(E, F), F)
    else:
        assembled = _assembled(ctx, obj)
        L, triple = assembled.algebra, assembled.triple
    return short_sl2_decompose(L, triple, ctx.options).report()


def _decompose_sl2sl2(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    obj = ctx.get(task.of)
    e = _idempotent(ctx, task, obj)
    return short_sl2sl2_decompose(_assembled(ctx, obj), e, ctx.options).report()


def _decompose_split(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    obj = ctx.get(task.of)
    return split_T(as_jternary(obj), _idempotent(ctx, task, obj)).report()


def _decompose_peirce(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    obj = ctx.get(task.of)
    J = as_jordan(obj)
    peirce = peirce_decompose(J, _idempotent(ctx, task, obj))
    j1, jh, j0 = peirce.dims
    dims = {"J1": j1, "Jhalf": jh, "J0": j0}
    return VerificationReport.from_checks("peirce", check_peirce_rules(J, peirce), dims=dims)


DECOMPOSERS: dict[str, Runner] = {
    "sl2": _decompose_sl2,
    "sl2xsl2": _decompose_sl2sl2,
    "split": _decompose_split,
    "peirce": _decompose_peirce,
}


def catalog_report(name: str, obj: Any, options: SweepOptions) -> VerificationReport:
    """Dimensions and defining identities of a catalog object."""
    if isinstance(obj, ClassicalExample):
        full = check_full_algebra(obj, options)
        checks = [*check_jt_axioms(obj.jt, options).checks, *full.checks]
        dims = {"J": obj.jt.jdim, "T": obj.jt.tdim, "N": obj.N, **full.dims}
        notes = [f"idempotent: {obj.idempotent_label}"] if obj.idempotent_label else []
        return VerificationReport.from_checks(f"catalog-{name}", checks, dims=dims, notes=notes)
    if isinstance(obj, CompositionAlgebra):
        report = check_composition(obj, options)
        return report.model_copy(update={"task": f"catalog-{name}"})
    if isinstance(obj, KantorAlgebra):
        return VerificationReport.from_checks(f"catalog-{name}", obj.checks, dims=obj.dims)
    if isinstance(obj, StructurableAlgebra):
        report = check_structurable(obj, options)
        dims = {**report.dims, "Instrl": instrl(obj).dim}
        return VerificationReport.from_checks(f"catalog-{name}", report.checks, dims=dims)
    if isinstance(obj, ExceptionalSeries):
        checks = list(verify_quadratic_factor(obj.albert, obj.jt, options).checks)
        checks += obj.dimension_checks()
        if obj.kantor is not None:
            checks += obj.kantor.checks
            checks += check_against_5grading(obj.kantor, obj.jt, obj.s, obj.s_prime)
        notes = [f"series {obj.name}", f"u = {obj.u_label}", "e = (c + u)/2"]
        return VerificationReport.from_checks(
            f"catalog-{name}", checks, dims=obj.dims, notes=notes
        )
    raise PreconditionError(f"{type(obj).__name__} is not a catalog object")


def _catalog(ctx: SpecContext, task: TaskSpec) -> VerificationReport:
    return catalog_report(task.of, ctx.get(task.of), ctx.options)


def _lookup(task: TaskSpec) -> Runner:
    if task.command == Command.VERIFY:
        table, key, flag = VERIFIERS, task.target, "target"
    elif task.command == Command.BUILD:
        table, key, flag = BUILDERS, task.mode, "mode"
    elif task.command == Command.DECOMPOSE:
        table, key, flag = DECOMPOSERS, task.mode, "mode"
    else:
        return _catalog
    if key is None or key not in table:
        raise PreconditionError(f"{task.command.value} needs --{flag} in {sorted(table)}")
    return table[key]


def run_task(ctx: SpecContext, task: TaskSpec, timings: bool = False) -> VerificationReport:
    """
    Run one task; library errors other than SpecError become an error-status report.

    The report's task field is the task label.
    """
    start = time.perf_counter()
    try:
        report = _lookup(task)(ctx, task)
    except SpecError:
        raise
    except IsotypeError as exc:
        logger.warning("task %s failed to run: %s", task.label, exc)
        report = VerificationReport.from_error(task.label, exc)
    millis = int((time.perf_counter() - start) * 1000) if timings else None
    logger.info("task %s: %s", task.label, report.status)
    return report.model_copy(update={"task": task.label, "millis": millis})


def run_tasks(
    ctx: SpecContext, command: Command, tasks: list[TaskSpec], timings: bool = False
) -> Iterator[VerificationReport]:
    """
    Run tasks in order and yield the reports of those matching ``command``.

    Build tasks always run, since later tasks may refer to what they register.
    """
    for task in tasks:
        if task.command == command:
            yield run_task(ctx, task, timings)
        elif task.command == Command.BUILD:
            run_task(ctx, task, timings)
