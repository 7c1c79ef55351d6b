"""Turning a parsed spec into algebras, J-ternary algebras and catalog objects."""

import logging
from collections.abc import Mapping
from typing import Any

from isotype.catalog import (
    ClassicalExample,
    CompositionAlgebra,
    ExceptionalSeries,
    InvolutiveAlgebra,
    KantorAlgebra,
    classical_example,
    exceptional_series,
    kantor,
    split_composition,
    tensor_structurable,
)
from isotype.catalog.structurable import StructurableAlgebra, as_structurable
from isotype.errors import FieldError, PreconditionError, SpecError
from isotype.exactlinalg.algebra import StructureAlgebra
from isotype.exactlinalg.maps import BilinearMap, LinearMap, TrilinearMap
from isotype.exactlinalg.scalars import Elem, Field
from isotype.exactlinalg.spaces import Space
from isotype.exactlinalg.vectors import Sparse
from isotype.jordan.algebra import JordanAlgebra
from isotype.jternary.algebra import JTernaryAlgebra
from isotype.lieforge.algebra import LieAlgebra
from isotype.lieforge.assemble import AssembledLie
from isotype.models.spec import AlgebraKind, AlgSpec, Builder, ConstructionSpec
from isotype.sweep import EXHAUSTIVE, SweepOptions

logger = logging.getLogger(__name__)

CLASSICAL_BUILDERS = {Builder.GL: "gl", Builder.SP: "sp", Builder.SO: "so"}


def _int_param(spec: ConstructionSpec, key: str, default: int | None = None) -> int:
    value = spec.params.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise PreconditionError(f"{spec.builder.value} needs integer parameter {key!r}")
    return value


def _bool_param(spec: ConstructionSpec, key: str, default: bool) -> bool:
    value = spec.params.get(key, default)
    if not isinstance(value, bool):
        raise PreconditionError(f"{spec.builder.value} parameter {key!r} must be true or false")
    return value


def build_construction(
    spec: ConstructionSpec, field: Field, options: SweepOptions = EXHAUSTIVE
) -> Any:
    """
    Run a catalog constructor.

    Returns:
        ClassicalExample, CompositionAlgebra, StructurableAlgebra, KantorAlgebra or
        ExceptionalSeries according to ``spec.builder``
    """
    builder = spec.builder
    if builder in CLASSICAL_BUILDERS:
        w, z = _int_param(spec, "w"), _int_param(spec, "z")
        return classical_example(CLASSICAL_BUILDERS[builder], w, z, field, options)
    if builder == Builder.COMPOSITION:
        return split_composition(_int_param(spec, "dim"), field)
    if builder in (Builder.STRUCTURABLE, Builder.KANTOR):
        c2 = split_composition(_int_param(spec, "c2_dim", 1), field)
        A = tensor_structurable(split_composition(8, field), c2)
        return A if builder == Builder.STRUCTURABLE else kantor(A, options)
    return exceptional_series(
        _int_param(spec, "c2_dim"),
        field,
        options,
        build_kantor=_bool_param(spec, "kantor", True),
        assemble=_bool_param(spec, "assemble", False),
    )


class SpecContext:
    """
    Lazily built objects of one spec, plus the results registered by build tasks.

    Every accessor caches, so repeated references share one object.
    """

    def __init__(self, spec: AlgSpec, options: SweepOptions = EXHAUSTIVE):
        self.spec = spec
        self.field = spec.ground_field
        self.options = options
        self._spaces: dict[str, Space] = {}
        self._maps: dict[str, Any] = {}
        self._objects: dict[str, Any] = {}

    def _scalar(self, text: str) -> Elem:
        try:
            return self.field.parse_elem(text)
        except FieldError as exc:
            raise SpecError(str(exc)) from exc

    def space(self, name: str) -> Space:
        if name not in self._spaces:
            s = self.spec.spaces[name]
            if s.labels is not None:
                self._spaces[name] = Space(tuple(s.labels), name)
            else:
                self._spaces[name] = Space.of_dim(s.size, "b", name)
        return self._spaces[name]

    def map(self, name: str) -> Any:
        """LinearMap, BilinearMap or TrilinearMap by arity."""
        if name in self._maps:
            return self._maps[name]
        m = self.spec.maps[name]
        domains = [self.space(d) for d in m.domains]
        codomain = self.space(m.codomain)
        entries = [(e.inputs, e.k, self._scalar(e.c)) for e in m.entries]
        result: Any
        if len(domains) == 1:
            columns: dict[int, Sparse] = {}
            for (i,), k, c in entries:
                image = columns.setdefault(i, {})
                image[k] = image.get(k, self.field.zero) + c
            result = LinearMap(self.field, domains[0], codomain, columns)
        elif len(domains) == 2:
            result = BilinearMap.from_entries(self.field, domains, codomain, entries)
        else:
            result = TrilinearMap.from_entries(self.field, domains, codomain, entries)
        self._maps[name] = result
        return result

    def coordinates(self, coeffs: Mapping[str, str], space: Space) -> Sparse:
        """Coefficients keyed by basis label or by index."""
        out: Sparse = {}
        for key, text in coeffs.items():
            if key in space.labels:
                i = space.index(key)
            elif key.isdigit() and int(key) < space.dim:
                i = int(key)
            else:
                raise SpecError(f"{key!r} is not a basis label or index of {space.name!r}")
            value = self._scalar(text)
            if value:
                out[i] = value
        return out

    def _algebra(self, name: str) -> Any:
        a = self.spec.algebras[name]
        space = self.space(a.space)
        product = self.map(a.product)
        unit = self.coordinates(a.unit, space) if a.unit is not None else None
        if a.kind == AlgebraKind.LIE:
            return LieAlgebra(self.field, space, product, None, name)
        base = StructureAlgebra(self.field, space, product, unit, name)
        if a.kind == AlgebraKind.JORDAN:
            return JordanAlgebra.from_algebra(base)
        if a.involution is not None:
            involutive = InvolutiveAlgebra(base, self.map(a.involution))
            if a.kind == AlgebraKind.STRUCTURABLE:
                return as_structurable(involutive)
            return involutive
        if a.kind == AlgebraKind.STRUCTURABLE:
            raise SpecError(f"structurable algebra {name!r} needs an involution")
        return base

    def _jternary(self, name: str) -> JTernaryAlgebra:
        jt = self.spec.jternary[name]
        J = self.get(jt.jordan)
        if not isinstance(J, JordanAlgebra):
            J = JordanAlgebra.from_algebra(J)
        return JTernaryAlgebra(
            J,
            self.space(jt.module),
            self.map(jt.bullet),
            self.map(jt.skew),
            self.map(jt.triple),
            name,
        )

    def get(self, name: str) -> Any:
        """The object called ``name``: build result, algebra, J-ternary algebra or construction."""
        if name in self._objects:
            return self._objects[name]
        if name in self.spec.algebras:
            obj = self._algebra(name)
        elif name in self.spec.jternary:
            obj = self._jternary(name)
        elif name in self.spec.constructions:
            construction = self.spec.constructions[name]
            logger.info("building %s via %s", name, construction.builder.value)
            obj = build_construction(construction, self.field, self.options)
        else:
            raise SpecError(f"{name!r} is not available; build it before referring to it")
        self._objects[name] = obj
        return obj

    def register(self, name: str, obj: Any) -> None:
        self._objects[name] = obj

    def element(self, name: str, owner: Any) -> Sparse:
        """
        A named element in the coordinates of the algebra it lives in.

        Names not declared under ``elements`` fall back to the default idempotent of a catalog
        construction.
        """
        declared = self.spec.elements.get(name)
        if declared is None:
            default = default_idempotent(owner)
            if default is None:
                raise SpecError(f"unknown element {name!r}")
            return default
        target = self.get(declared.of)
        try:
            space = as_jordan(target).space
        except PreconditionError:
            space = target.space
        return self.coordinates(declared.coeffs, space)


def default_idempotent(obj: Any) -> Sparse | None:
    if isinstance(obj, ClassicalExample):
        return obj.idempotent
    if isinstance(obj, ExceptionalSeries):
        return obj.e
    return None


def as_jternary(obj: Any) -> JTernaryAlgebra:
    if isinstance(obj, JTernaryAlgebra):
        return obj
    if isinstance(obj, (ClassicalExample, ExceptionalSeries, AssembledLie)):
        return obj.jt
    raise PreconditionError(f"{type(obj).__name__} has no J-ternary algebra")


def as_jordan(obj: Any) -> JordanAlgebra:
    if isinstance(obj, JordanAlgebra):
        return obj
    return as_jternary(obj).J


def as_lie(obj: Any) -> LieAlgebra:
    if isinstance(obj, LieAlgebra):
        return obj
    if isinstance(obj, (AssembledLie, KantorAlgebra)):
        return obj.algebra
    if isinstance(obj, ExceptionalSeries):
        if obj.kantor is not None:
            return obj.kantor.algebra
        if obj.assembled is not None:
            return obj.assembled.algebra
    raise PreconditionError(f"{type(obj).__name__} has no Lie algebra")


def as_structurable_algebra(obj: Any) -> StructurableAlgebra:
    if isinstance(obj, ExceptionalSeries):
        return obj.structurable
    if isinstance(obj, KantorAlgebra):
        return obj.structurable
    if isinstance(obj, InvolutiveAlgebra):
        return as_structurable(obj)
    raise PreconditionError(f"{type(obj).__name__} is not an algebra with involution")


def as_involutive(obj: Any) -> InvolutiveAlgebra:
    if isinstance(obj, ClassicalExample):
        return obj.module.A
    return as_structurable_algebra(obj)


def as_composition(obj: Any) -> CompositionAlgebra:
    if isinstance(obj, CompositionAlgebra):
        return obj
    raise PreconditionError(f"{type(obj).__name__} is not a composition algebra")


def as_classical(obj: Any) -> ClassicalExample:
    if isinstance(obj, ClassicalExample):
        return obj
    raise PreconditionError(f"{type(obj).__name__} is not a classical catalog example")


def as_exceptional(obj: Any) -> ExceptionalSeries:
    if isinstance(obj, ExceptionalSeries):
        return obj
    raise PreconditionError(f"{type(obj).__name__} is not an exceptional series member")
