"""
The full derivation algebra Der(J, T).

An even derivation is a pair (δ_J, δ_T) of linear maps that satisfies the Leibniz rule for all
four products. The conditions are linear in the matrix entries of δ, so Der(J, T) is a null space.
The unknowns are nJ² + nT² entries and the triple product contributes nT⁴ equations, so this is
meant for the small classical examples.
"""

import logging
from collections import defaultdict
from collections.abc import Callable, Mapping

from isotype.exactlinalg.echelon import null_space
from isotype.exactlinalg.maps import LinearMap
from isotype.exactlinalg.scalars import Elem
from isotype.exactlinalg.vectors import Sparse
from isotype.jternary.algebra import JTernaryAlgebra

logger = logging.getLogger(__name__)

Equation = dict[int, dict[int, Elem]]  # output coordinate -> {unknown: coefficient}


def _add(eq: Equation, image: Mapping[int, Elem], var: int, coeff: Elem) -> None:
    for out, c in image.items():
        row = eq[out]
        total = row.get(var)
        value = c * coeff if total is None else total + c * coeff
        if value:
            row[var] = value
        else:
            row.pop(var, None)


def derivation_algebra(JT: JTernaryAlgebra) -> list[LinearMap]:
    """
    Basis of all even derivations of (J, T) for a·b, a•x, ⟨x|y⟩ and ⟨x,y,z⟩.

    Args:
        JT: J-ternary algebra

    Returns:
        Maps on J ⊕ T in free-variable order of the unknowns
    """
    J = JT.J
    nJ, nT = JT.jdim, JT.tdim
    one = JT.field.one
    minus = -one

    def jvar(i: int, k: int) -> int:
        return i * nJ + k

    def tvar(i: int, k: int) -> int:
        return nJ * nJ + i * nT + k

    jb = [J.basis(i) for i in range(nJ)]
    tb = [JT.t(i) for i in range(nT)]
    rows: list[Sparse] = []

    def emit(eq: Equation) -> None:
        rows.extend(row for row in eq.values() if row)

    def image_of(
        eq: Equation, v: Mapping[int, Elem], var: Callable[[int, int], int], width: int
    ) -> None:
        """Add δ(v), δ acting on the block whose unknowns are ``var``."""
        for m, c in v.items():
            for k in range(width):
                _add(eq, {k: one}, var(m, k), c)

    for i in range(nJ):
        for j in range(i, nJ):
            eq: Equation = defaultdict(dict)
            image_of(eq, J.mul(jb[i], jb[j]), jvar, nJ)
            for k in range(nJ):
                _add(eq, J.mul(jb[k], jb[j]), jvar(i, k), minus)
                _add(eq, J.mul(jb[i], jb[k]), jvar(j, k), minus)
            emit(eq)

    for i in range(nJ):
        for x in range(nT):
            eq = defaultdict(dict)
            image_of(eq, JT.act(jb[i], tb[x]), tvar, nT)
            for k in range(nJ):
                _add(eq, JT.act(jb[k], tb[x]), jvar(i, k), minus)
            for k in range(nT):
                _add(eq, JT.act(jb[i], tb[k]), tvar(x, k), minus)
            emit(eq)

    for x in range(nT):
        for y in range(x + 1, nT):
            eq = defaultdict(dict)
            image_of(eq, JT.pair(tb[x], tb[y]), jvar, nJ)
            for k in range(nT):
                _add(eq, JT.pair(tb[k], tb[y]), tvar(x, k), minus)
                _add(eq, JT.pair(tb[x], tb[k]), tvar(y, k), minus)
            emit(eq)

    for x in range(nT):
        for y in range(nT):
            for z in range(nT):
                eq = defaultdict(dict)
                image_of(eq, JT.trip(tb[x], tb[y], tb[z]), tvar, nT)
                for k in range(nT):
                    _add(eq, JT.trip(tb[k], tb[y], tb[z]), tvar(x, k), minus)
                    _add(eq, JT.trip(tb[x], tb[k], tb[z]), tvar(y, k), minus)
                    _add(eq, JT.trip(tb[x], tb[y], tb[k]), tvar(z, k), minus)
                emit(eq)

    solutions = null_space(JT.field, rows, nJ * nJ + nT * nT)
    logger.info("Der(J,T): %d equations, dimension %d", len(rows), len(solutions))
    space = JT.sum_space
    maps = []
    for sol in solutions:
        columns: dict[int, Sparse] = {}
        for var, c in sol.items():
            if var < nJ * nJ:
                col, row = divmod(var, nJ)
            else:
                col, row = divmod(var - nJ * nJ, nT)
                col, row = col + nJ, row + nJ
            columns.setdefault(col, {})[row] = c
        maps.append(LinearMap(JT.field, space, space, columns))
    return maps
