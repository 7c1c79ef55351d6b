"""Pydantic models for `.alg.json` algebra-spec files."""

from enum import Enum
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from isotype.errors import FieldError
from isotype.exactlinalg.scalars import QQ_FIELD
from isotype.exactlinalg.scalars import Field as GroundField

Path = tuple[Union[str, int], ...]


class SpecReferenceError(ValueError):
    """A name or index in the spec that does not resolve, with its location in the document."""

    def __init__(self, message: str, path: Path):
        super().__init__(message)
        self.path = path


class AlgebraKind(str, Enum):
    """How the product of a declared algebra is interpreted."""

    ALGEBRA = "algebra"
    LIE = "lie"
    JORDAN = "jordan"
    STRUCTURABLE = "structurable"


class Command(str, Enum):
    """Top-level CLI commands."""

    BUILD = "build"
    VERIFY = "verify"
    DECOMPOSE = "decompose"
    CATALOG = "catalog"


class Builder(str, Enum):
    """Catalog constructors a spec can invoke."""

    GL = "gl_example"
    SP = "sp_example"
    SO = "so_example"
    COMPOSITION = "split_composition"
    STRUCTURABLE = "structurable"
    KANTOR = "kantor"
    EXCEPTIONAL = "exceptional_series"


class SpaceSpec(BaseModel):
    """A labeled space; labels default to b0, b1, …."""

    model_config = ConfigDict(extra="forbid")

    dim: Optional[int] = Field(default=None, ge=0)
    labels: Optional[list[str]] = None

    @model_validator(mode="after")
    def dim_or_labels(self) -> "SpaceSpec":
        if self.dim is None and self.labels is None:
            raise ValueError("space needs dim or labels")
        if self.dim is not None and self.labels is not None and len(self.labels) != self.dim:
            raise ValueError(f"{len(self.labels)} labels for a space of dim {self.dim}")
        if self.labels is not None and len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")
        return self

    @property
    def size(self) -> int:
        return self.dim if self.dim is not None else len(self.labels or [])


def _check_scalar(text: str) -> str:
    try:
        QQ_FIELD.parse_elem(text)
    except FieldError as exc:
        raise ValueError(str(exc)) from exc
    return text


class EntrySpec(BaseModel):
    """
    One structure constant: inputs i (j, l), output k, coefficient c.

    Linear maps use i; bilinear maps i and j; trilinear maps i, j and l.
    """

    model_config = ConfigDict(extra="forbid")

    i: int = Field(ge=0)
    j: Optional[int] = Field(default=None, ge=0)
    l: Optional[int] = Field(default=None, ge=0)  # noqa: E741
    k: int = Field(ge=0)
    c: str

    @field_validator("c")
    @classmethod
    def check_coefficient(cls, value: str) -> str:
        return _check_scalar(value)

    @property
    def inputs(self) -> tuple[int, ...]:
        return tuple(x for x in (self.i, self.j, self.l) if x is not None)


class MapSpec(BaseModel):
    """A linear, bilinear or trilinear map between declared spaces."""

    model_config = ConfigDict(extra="forbid")

    domains: list[str] = Field(min_length=1, max_length=3)
    codomain: str
    entries: list[EntrySpec] = Field(default_factory=list)


class AlgebraSpec(BaseModel):
    """An algebra on a declared space with a declared bilinear product."""

    model_config = ConfigDict(extra="forbid")

    space: str
    product: str
    kind: AlgebraKind = AlgebraKind.ALGEBRA
    unit: Optional[dict[str, str]] = None  # index or label -> scalar
    involution: Optional[str] = None  # name of a linear map

    @field_validator("unit")
    @classmethod
    def check_unit(cls, value: Optional[dict[str, str]]) -> Optional[dict[str, str]]:
        if value is None:
            return None
        return {k: _check_scalar(c) for k, c in value.items()}


class JTernarySpec(BaseModel):
    """A J-ternary algebra assembled from declared pieces."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    jordan: str = Field(alias="J")
    module: str = Field(alias="T")
    bullet: str
    skew: str
    triple: str


class ConstructionSpec(BaseModel):
    """Invocation of a catalog constructor."""

    model_config = ConfigDict(extra="forbid")

    builder: Builder
    params: dict[str, Union[bool, int, str]] = Field(default_factory=dict)


class ElementSpec(BaseModel):
    """A named element of the algebra ``of``, or of the Jordan algebra of ``of``."""

    model_config = ConfigDict(extra="forbid")

    of: str
    coeffs: dict[str, str]

    @field_validator("coeffs")
    @classmethod
    def check_coeffs(cls, value: dict[str, str]) -> dict[str, str]:
        return {k: _check_scalar(c) for k, c in value.items()}


class TaskSpec(BaseModel):
    """
    One unit of work.

    ``target`` selects the verification for ``verify``, ``mode`` the construction for ``build``
    and the decomposition for ``decompose``. A build registers its result under ``name``.
    """

    model_config = ConfigDict(extra="forbid")

    command: Command
    of: str
    id: Optional[str] = None
    target: Optional[str] = None
    mode: Optional[str] = None
    name: Optional[str] = None
    idempotent: Optional[str] = None
    derivations: Optional[str] = None

    @property
    def label(self) -> str:
        if self.id:
            return self.id
        what = self.target or self.mode
        if what is None:
            return f"{self.command.value}:{self.of}"
        return f"{self.command.value}:{what}:{self.of}"


class AlgSpec(BaseModel):
    """A whole `.alg.json` document."""

    model_config = ConfigDict(extra="forbid")

    version: int = 1
    field: str = "Q"
    spaces: dict[str, SpaceSpec] = Field(default_factory=dict)
    maps: dict[str, MapSpec] = Field(default_factory=dict)
    algebras: dict[str, AlgebraSpec] = Field(default_factory=dict)
    jternary: dict[str, JTernarySpec] = Field(default_factory=dict)
    constructions: dict[str, ConstructionSpec] = Field(default_factory=dict)
    elements: dict[str, ElementSpec] = Field(default_factory=dict)
    tasks: list[TaskSpec] = Field(default_factory=list)

    @field_validator("field")
    @classmethod
    def parse_field(cls, value: str) -> str:
        try:
            return GroundField.parse(value).name
        except FieldError as exc:
            raise ValueError(str(exc)) from exc

    @property
    def ground_field(self) -> GroundField:
        return GroundField.parse(self.field)

    def object_names(self) -> set[str]:
        """Names that tasks and elements may refer to, including build outputs."""
        names = set(self.algebras) | set(self.jternary) | set(self.constructions)
        names |= {t.name for t in self.tasks if t.name}
        return names

    @model_validator(mode="after")
    def resolve_references(self) -> "AlgSpec":
        all_names = [
            *self.algebras,
            *self.jternary,
            *self.constructions,
            *self.elements,
        ]
        all_names += [t.name for t in self.tasks if t.name]
        seen: set[str] = set()
        for name in all_names:
            if name in seen:
                raise SpecReferenceError(f"name {name!r} is declared twice", ())
            seen.add(name)

        for name, m in self.maps.items():
            self._check_map(name, m)
        for name, a in self.algebras.items():
            self._check_algebra(name, a)
        for name, jt in self.jternary.items():
            path: Path = ("jternary", name)
            if jt.jordan not in self.algebras:
                raise SpecReferenceError(f"unknown algebra {jt.jordan!r}", path + ("J",))
            if jt.module not in self.spaces:
                raise SpecReferenceError(f"unknown space {jt.module!r}", path + ("T",))
            for key in ("bullet", "skew", "triple"):
                if getattr(jt, key) not in self.maps:
                    raise SpecReferenceError(f"unknown map {getattr(jt, key)!r}", path + (key,))

        objects = self.object_names()
        for name, element in self.elements.items():
            if element.of not in objects:
                raise SpecReferenceError(f"unknown object {element.of!r}", ("elements", name, "of"))
        for n, task in enumerate(self.tasks):
            if task.of not in objects:
                raise SpecReferenceError(f"unknown object {task.of!r}", ("tasks", n, "of"))
            if task.idempotent is not None and task.idempotent not in self.elements:
                if task.of not in self.constructions:
                    raise SpecReferenceError(
                        f"unknown element {task.idempotent!r}", ("tasks", n, "idempotent")
                    )
        return self

    def _check_map(self, name: str, m: MapSpec) -> None:
        path: Path = ("maps", name)
        for slot, space in enumerate([*m.domains, m.codomain]):
            if space not in self.spaces:
                where = ("domains", slot) if slot < len(m.domains) else ("codomain",)
                raise SpecReferenceError(f"unknown space {space!r}", path + where)
        sizes = [self.spaces[s].size for s in m.domains]
        out = self.spaces[m.codomain].size
        for n, entry in enumerate(m.entries):
            inputs = entry.inputs
            if len(inputs) != len(sizes):
                raise SpecReferenceError(
                    f"entry has {len(inputs)} inputs, map has {len(sizes)}", path + ("entries", n)
                )
            for key, value, size in zip(("i", "j", "l"), inputs, sizes):
                if value >= size:
                    raise SpecReferenceError(
                        f"index {value} out of range for dimension {size}",
                        path + ("entries", n, key),
                    )
            if entry.k >= out:
                raise SpecReferenceError(
                    f"index {entry.k} out of range for dimension {out}", path + ("entries", n, "k")
                )

    def _check_algebra(self, name: str, a: AlgebraSpec) -> None:
        path: Path = ("algebras", name)
        if a.space not in self.spaces:
            raise SpecReferenceError(f"unknown space {a.space!r}", path + ("space",))
        product = self.maps.get(a.product)
        if product is None:
            raise SpecReferenceError(f"unknown map {a.product!r}", path + ("product",))
        if product.domains != [a.space, a.space] or product.codomain != a.space:
            raise SpecReferenceError(
                f"product {a.product!r} must map {a.space} x {a.space} to {a.space}",
                path + ("product",),
            )
        if a.involution is not None:
            inv = self.maps.get(a.involution)
            if inv is None or inv.domains != [a.space] or inv.codomain != a.space:
                raise SpecReferenceError(
                    f"involution {a.involution!r} must be a linear map on {a.space}",
                    path + ("involution",),
                )


def dump_spec(spec: AlgSpec) -> dict[str, Any]:
    """JSON-ready form; ``AlgSpec.model_validate(dump_spec(spec)) == spec``."""
    return spec.model_dump(mode="json", by_alias=True, exclude_none=True)
