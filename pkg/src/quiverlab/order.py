"""The degeneration order on Kostant partitions of a fixed dimension vector.

``leq(x, y)`` holds when the orbit of ``M_y`` lies in the closure of the
orbit of ``M_x``.  For Dynkin quivers this orbit-closure order coincides
with the hom order — ``dim Hom(N, M_x) <= dim Hom(N, M_y)`` for every
indecomposable ``N`` (a standard theorem of Bongartz/Zwara for
representation-directed algebras) — which is what the implementation
evaluates, using the closed-form hom counts.  On the linear type-A
quiver the independent segment criterion :func:`typeA_leq` (compare the
counts of segments containing each ``[i,j]``) is provided and the two
are compared in tests.

The semisimple partition (all parts simple roots) is the unique maximum
of each poset; a rigid partition (no self-extensions) is the unique
minimum.
"""

from __future__ import annotations

import functools

from .homs import ext_dim, hom_dim
from .quiver import (
    KostantPartition,
    PartitionError,
    RootTable,
    kp_enumerate,
    kp_single,
    segments_of,
)

__all__ = [
    "cover_relations",
    "hom_vector",
    "interval",
    "is_rigid",
    "leq",
    "lt",
    "minimal_elements",
    "typeA_leq",
]


@functools.cache
def hom_vector(x: KostantPartition) -> tuple[int, ...]:
    """``dim Hom(M_beta, M_x)`` for every positive root ``beta``, in root order."""
    table = x.table
    return tuple(hom_dim(kp_single(table, a), x) for a in range(len(table)))


def leq(x: KostantPartition, y: KostantPartition) -> bool:
    """True when ``x <= y`` in the degeneration order (same dimension vector
    required; the more special partition is the larger one)."""
    if x.table != y.table:
        raise PartitionError("partitions live over different root tables")
    if x.total != y.total:
        return False
    hx, hy = hom_vector(x), hom_vector(y)
    return all(a <= b for a, b in zip(hx, hy))


def lt(x: KostantPartition, y: KostantPartition) -> bool:
    return x != y and leq(x, y)


def typeA_leq(x: KostantPartition, y: KostantPartition) -> bool:
    """Segment-counting criterion for the linear type-A quiver:
    ``x <= y`` iff for every segment ``[i,j]`` the number of parts of x
    containing it is at least the number for y."""
    if x.table != y.table:
        raise PartitionError("partitions live over different root tables")
    if not x.table.quiver.is_linear_type_a():
        raise PartitionError("typeA_leq needs the linear type-A quiver")
    if x.total != y.total:
        return False
    n = x.table.quiver.rank
    segs_x, segs_y = segments_of(x), segments_of(y)

    def count(segs, i, j):
        return sum(1 for a, b in segs if a <= i and j <= b)

    return all(
        count(segs_x, i, j) >= count(segs_y, i, j)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
    )


def minimal_elements(
    partitions: tuple[KostantPartition, ...] | list[KostantPartition],
) -> tuple[KostantPartition, ...]:
    """The elements of the collection not strictly above any other element."""
    items = list(partitions)
    return tuple(
        x for x in items if not any(lt(other, x) for other in items if other != x)
    )


def is_rigid(x: KostantPartition) -> bool:
    """No self-extensions; equivalently x is the minimum of its poset."""
    return ext_dim(x, x) == 0


def interval(
    low: KostantPartition, high: KostantPartition
) -> tuple[KostantPartition, ...]:
    """All partitions z of the common dimension vector with low <= z <= high."""
    if low.table != high.table:
        raise PartitionError("partitions live over different root tables")
    if low.total != high.total:
        return ()
    return tuple(
        z
        for z in kp_enumerate(low.table, low.total)
        if leq(low, z) and leq(z, high)
    )


def cover_relations(
    table: RootTable, gamma: tuple[int, ...], cap: int = 2000
) -> tuple[tuple[KostantPartition, KostantPartition], ...]:
    """Diagnostic Hasse diagram of the poset on ``gamma`` (pairs (x, y) with
    x < y and nothing in between); refuses posets larger than ``cap``."""
    elems = kp_enumerate(table, gamma)
    if len(elems) > cap:
        raise PartitionError(
            f"poset on {gamma} has {len(elems)} elements, cap is {cap}"
        )
    covers = []
    for x in elems:
        for y in elems:
            if not lt(x, y):
                continue
            if any(lt(x, z) and lt(z, y) for z in elems):
                continue
            covers.append((x, y))
    return tuple(covers)
