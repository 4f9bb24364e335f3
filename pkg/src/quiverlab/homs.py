"""Closed-form Hom and Ext^1 dimensions between quiver representations.

For indecomposables indexed by the adapted root order, morphisms vanish
from smaller to larger roots and extensions vanish from larger to
smaller.  Together with the Euler form this pins both dimensions for
every ordered pair of roots:

* ``a == b``: ``(hom, ext) = (1, 0)`` (simple endomorphism ring, rigid);
* ``a < b``:  ``(hom, ext) = (0, -<beta_a, beta_b>)``;
* ``a > b``:  ``(hom, ext) = (<beta_a, beta_b>, 0)``.

Both counts extend biadditively over the parts of a Kostant partition,
which is how :func:`hom_dim` and :func:`ext_dim` evaluate arbitrary
pairs without touching matrices.  The independent matrix-level count
lives in :mod:`.reps` (``hom_space_dim``) and the two are compared over
exhaustive desk ranges in the test suite.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .quiver import (
    DynkinQuiver,
    KostantPartition,
    PartitionError,
    RootTable,
    dim_sub,
    euler_form,
    kp_single,
    kp_zero,
    positive_roots,
    projective_root,
    segments_of,
)

__all__ = [
    "HomTable",
    "ext_dim",
    "hom_dim",
    "hom_ext_pair",
    "hom_table",
    "projective_resolution",
    "typeA_ext_dim",
    "typeA_hom_dim",
]


@functools.cache
def hom_ext_pair(table: RootTable, a: int, b: int) -> tuple[int, int]:
    """``(dim Hom, dim Ext^1)`` between the indecomposables at root indices a, b."""
    if a == b:
        return (1, 0)
    value = euler_form(table.quiver, table.roots[a], table.roots[b])
    if a < b:
        return (0, -value)
    return (value, 0)


def _check_same_table(x: KostantPartition, y: KostantPartition) -> None:
    if x.table is not y.table and x.table != y.table:
        raise PartitionError("partitions live over different root tables")


def hom_dim(x: KostantPartition, y: KostantPartition) -> int:
    """dim Hom(M_x, M_y), summed biadditively over parts."""
    _check_same_table(x, y)
    table = x.table
    return sum(
        cx * cy * hom_ext_pair(table, a, b)[0]
        for a, cx in x.multiplicities().items()
        for b, cy in y.multiplicities().items()
    )


def ext_dim(x: KostantPartition, y: KostantPartition) -> int:
    """dim Ext^1(M_x, M_y), summed biadditively over parts."""
    _check_same_table(x, y)
    table = x.table
    return sum(
        cx * cy * hom_ext_pair(table, a, b)[1]
        for a, cx in x.multiplicities().items()
        for b, cy in y.multiplicities().items()
    )


@dataclass(frozen=True)
class HomTable:
    """Full ``m x m`` tables of hom and ext dimensions between indecomposables."""

    table: RootTable
    hom: tuple[tuple[int, ...], ...]
    ext: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        """Check positivity, the Euler identity, and the vanishing pattern."""
        roots = self.table.roots
        for a in range(len(roots)):
            for b in range(len(roots)):
                h, e = self.hom[a][b], self.ext[a][b]
                if h < 0 or e < 0:
                    raise AssertionError(f"negative entry at ({a},{b})")
                if h - e != euler_form(self.table.quiver, roots[a], roots[b]):
                    raise AssertionError(f"Euler identity fails at ({a},{b})")
                if a < b and h != 0:
                    raise AssertionError(f"hom should vanish upward at ({a},{b})")
                if a > b and e != 0:
                    raise AssertionError(f"ext should vanish downward at ({a},{b})")


@functools.cache
def hom_table(quiver: DynkinQuiver) -> HomTable:
    table = positive_roots(quiver)
    m = len(table)
    hom = tuple(
        tuple(hom_ext_pair(table, a, b)[0] for b in range(m)) for a in range(m)
    )
    ext = tuple(
        tuple(hom_ext_pair(table, a, b)[1] for b in range(m)) for a in range(m)
    )
    return HomTable(table, hom, ext)


# ---------------------------------------------------------------------------
# segment combinatorics (linear type A only)


def _require_linear_a(x: KostantPartition) -> None:
    if not x.table.quiver.is_linear_type_a():
        raise PartitionError("segment formulas need the linear type-A quiver")


def typeA_hom_dim(x: KostantPartition, y: KostantPartition) -> int:
    """Hom dimension by segment counting: one morphism for each pair
    ``([i,j], [k,l])`` with ``k <= i <= l <= j``."""
    _check_same_table(x, y)
    _require_linear_a(x)
    return sum(
        1
        for (i, j) in segments_of(x)
        for (k, l) in segments_of(y)
        if k <= i <= l <= j
    )


def typeA_ext_dim(x: KostantPartition, y: KostantPartition) -> int:
    """Ext^1 dimension by segment counting: one extension for each pair
    ``([k,l], [i,j])`` with ``k+1 <= i <= l+1 <= j`` (segments linkable
    with the first strictly preceding)."""
    _check_same_table(x, y)
    _require_linear_a(x)
    return sum(
        1
        for (k, l) in segments_of(x)
        for (i, j) in segments_of(y)
        if k + 1 <= i <= l + 1 <= j
    )


# ---------------------------------------------------------------------------
# projective resolutions


@functools.cache
def _projective_root_index(table: RootTable, i: int) -> int:
    return table.index_of(projective_root(table.quiver, i))


@functools.cache
def projective_resolution(
    table: RootTable, root_index: int
) -> tuple[KostantPartition, KostantPartition]:
    """The two-step projective resolution ``0 -> P -> Q -> M_beta -> 0``.

    ``Q`` collects one projective ``P_i`` for every simple ``S_i`` in the
    head of ``M_beta`` (multiplicity ``dim Hom(M_beta, S_i)``), and ``P``
    is the unique non-negative combination of projectives with
    ``dim P = dim Q - beta`` (solved by forward substitution, since the
    projective at ``i`` is supported downstream of ``i``).  A projective
    root returns ``(itself, 0)``.
    """
    quiver = table.quiver
    beta = table.roots[root_index]
    m_beta = kp_single(table, root_index)
    projectives = {i: projective_root(quiver, i) for i in quiver.vertices}
    if any(beta == v for v in projectives.values()):
        return m_beta, kp_zero(table)

    head = {
        i: hom_dim(m_beta, kp_single(table, table.simple_root_index(i)))
        for i in quiver.vertices
    }
    q_parts: list[int] = []
    q_dim = [0] * quiver.rank
    for i, count in head.items():
        q_parts.extend([_projective_root_index(table, i)] * count)
        for j, x in enumerate(projectives[i]):
            q_dim[j] += count * x
    q_cover = KostantPartition(table, tuple(q_parts))

    remaining = list(dim_sub(tuple(q_dim), beta))
    p_parts: list[int] = []
    for i in quiver.vertices:
        c = remaining[i - 1]
        if c < 0:
            raise AssertionError(f"negative projective multiplicity at vertex {i}")
        if c:
            p_parts.extend([_projective_root_index(table, i)] * c)
            for j, x in enumerate(projectives[i]):
                remaining[j] -= c * x
    if any(remaining):
        raise AssertionError("projective kernel does not resolve")
    return q_cover, KostantPartition(table, tuple(p_parts))
