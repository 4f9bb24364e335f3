"""Dynkin quivers, adapted root orders, and Kostant partitions.

Conventions used throughout the package:

* Vertices are numbered ``1..n`` and every arrow points from a smaller
  to a larger vertex.  :func:`build_quiver` accepts any acyclic
  orientation of a simply-laced Dynkin diagram and renumbers the
  vertices topologically when needed, recording the renumbering.
* The positive roots carry the total order induced by a reduced
  expression of the longest Weyl-group element that is *adapted* to the
  orientation: letter ``k`` of the word is a source of the quiver
  obtained by reflecting at the first ``k-1`` letters, and the ``k``-th
  root is ``s_{i_1}...s_{i_{k-1}}(alpha_{i_k})``.  Under this order,
  nonzero morphisms between indecomposables only flow from larger to
  smaller roots, and nonsplit extensions only from smaller to larger —
  the property every closed-form dimension count in :mod:`.homs` relies
  on.
* For the linearly oriented type-A quiver ``1 -> 2 -> ... -> n`` the
  canonical order is lexicographic on segments: ``[i,j] < [k,l]`` iff
  ``i < k`` or (``i = k`` and ``j < l``); here ``[a,b]`` denotes the
  root ``alpha_a + ... + alpha_b``.

A Kostant partition is a multiset of positive roots; it is stored as a
non-increasing tuple of indices into a :class:`RootTable`, so partitions
are hashable and cheap to compare.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DynkinQuiver",
    "KostantPartition",
    "PartitionError",
    "QuiverError",
    "RootTable",
    "adapted_reduced_word",
    "build_quiver",
    "coxeter_number",
    "dim_add",
    "dim_leq",
    "dim_sub",
    "euler_form",
    "format_quiver_spec",
    "injective_root",
    "kp_enumerate",
    "kp_format",
    "kp_from_segments",
    "kp_from_vectors",
    "kp_parse",
    "kp_single",
    "kp_zero",
    "load_quiver",
    "parse_dim_vector",
    "parse_quiver_spec",
    "positive_root_count",
    "positive_roots",
    "projective_root",
    "segments_of",
    "simple_reflection",
    "standard_quiver",
    "symmetrized_euler_form",
    "weight",
]


class QuiverError(ValueError):
    """Input does not describe a valid oriented simply-laced Dynkin diagram."""


class PartitionError(ValueError):
    """Malformed Kostant-partition text, or a summand that is not a positive root."""


_E_ROOT_COUNTS = {6: 36, 7: 63, 8: 120}
_E_COXETER = {6: 12, 7: 18, 8: 30}
_E_LEGS = {6: (1, 2, 2), 7: (1, 2, 3), 8: (1, 2, 4)}


def positive_root_count(diagram_type: str, rank: int) -> int:
    if diagram_type == "A":
        return rank * (rank + 1) // 2
    if diagram_type == "D":
        return rank * (rank - 1)
    return _E_ROOT_COUNTS[rank]


def coxeter_number(diagram_type: str, rank: int) -> int:
    if diagram_type == "A":
        return rank + 1
    if diagram_type == "D":
        return 2 * rank - 2
    return _E_COXETER[rank]


# ---------------------------------------------------------------------------
# dimension vectors


def dim_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def dim_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def dim_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise comparison of dimension vectors."""
    return all(x <= y for x, y in zip(a, b, strict=True))


def weight(a: Sequence[int]) -> int:
    """Total dimension ``|a| = sum_i a_i``."""
    return sum(a)


def parse_dim_vector(text: str, rank: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.strip().split(",")]
    try:
        vec = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise PartitionError(f"bad dimension vector {text!r}") from exc
    if len(vec) != rank:
        raise PartitionError(
            f"dimension vector {text!r} has {len(vec)} entries, expected {rank}"
        )
    if any(x < 0 for x in vec):
        raise PartitionError(f"dimension vector {text!r} has negative entries")
    return vec


# ---------------------------------------------------------------------------
# the quiver itself


@dataclass(frozen=True)
class DynkinQuiver:
    """An oriented simply-laced Dynkin diagram with topological vertex numbering.

    ``renumbering[k-1]`` is the label the caller originally gave to the
    vertex now numbered ``k`` (the identity tuple when no reordering was
    necessary).  Use :func:`build_quiver` rather than constructing this
    directly; the factory validates the diagram shape and fixes the
    numbering.
    """

    diagram_type: str
    rank: int
    arrows: tuple[tuple[int, int], ...]
    renumbering: tuple[int, ...]

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @functools.cached_property
    def _neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for s, t in self.arrows:
            adj[s].append(t)
            adj[t].append(s)
        return tuple(tuple(sorted(x)) for x in adj)

    def neighbours(self, i: int) -> tuple[int, ...]:
        return self._neighbours[i]

    def arrows_into(self, i: int) -> tuple[tuple[int, int], ...]:
        return tuple(h for h in self.arrows if h[1] == i)

    def arrows_out_of(self, i: int) -> tuple[tuple[int, int], ...]:
        return tuple(h for h in self.arrows if h[0] == i)

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric Cartan matrix: 2 on the diagonal, -1 for each edge."""
        rows = []
        for i in self.vertices:
            row = [0] * self.rank
            row[i - 1] = 2
            for j in self.neighbours(i):
                row[j - 1] = -1
            rows.append(tuple(row))
        return tuple(rows)

    def is_linear_type_a(self) -> bool:
        """True for the orientation ``1 -> 2 -> ... -> n`` of type A."""
        if self.diagram_type != "A":
            return False
        expected = tuple((i, i + 1) for i in range(1, self.rank))
        return self.arrows == expected

    def __repr__(self) -> str:  # keep pytest output readable
        arrows = ",".join(f"{s}->{t}" for s, t in self.arrows)
        return f"DynkinQuiver({self.diagram_type}{self.rank}: {arrows})"


def _leg_lengths(rank: int, edges: set[frozenset[int]], branch: int) -> list[int]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, rank + 1)}
    for e in edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    lengths = []
    for start in adj[branch]:
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            if len(nxt) > 1:  # second branch vertex
                return []
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def _validate_shape(diagram_type: str, rank: int, edges: set[frozenset[int]]) -> None:
    if diagram_type not in ("A", "D", "E"):
        raise QuiverError(f"unknown diagram type {diagram_type!r}")
    if diagram_type == "A" and rank < 1:
        raise QuiverError("type A needs rank >= 1")
    if diagram_type == "D" and rank < 4:
        raise QuiverError("type D needs rank >= 4")
    if diagram_type == "E" and rank not in (6, 7, 8):
        raise QuiverError("type E needs rank in {6, 7, 8}")

    if len(edges) != rank - 1:
        raise QuiverError(
            f"expected {rank - 1} edges for a rank-{rank} diagram, got {len(edges)}"
        )
    # connectivity
    if rank > 1:
        adj: dict[int, set[int]] = {v: set() for v in range(1, rank + 1)}
        for e in edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != rank:
            raise QuiverError("diagram is not connected")
        degrees = {v: len(adj[v]) for v in adj}
        branch_vertices = [v for v, d in degrees.items() if d >= 3]
        if any(degrees[v] > 3 for v in degrees):
            raise QuiverError("a vertex of degree > 3 cannot occur in types A/D/E")
        if diagram_type == "A":
            if branch_vertices:
                raise QuiverError("type A diagram must be a path")
        else:
            if len(branch_vertices) != 1:
                raise QuiverError(
                    f"type {diagram_type} diagram needs exactly one branch vertex"
                )
            legs = _leg_lengths(rank, edges, branch_vertices[0])
            expected = (1, 1, rank - 3) if diagram_type == "D" else _E_LEGS[rank]
            if tuple(legs) != tuple(sorted(expected)):
                raise QuiverError(
                    f"leg lengths {legs} do not match type {diagram_type}{rank}"
                )


def build_quiver(
    diagram_type: str,
    rank: int,
    orientation_spec: Iterable[tuple[int, int]],
) -> DynkinQuiver:
    """Validate an oriented Dynkin diagram and put it in topological numbering.

    ``orientation_spec`` lists every edge of the diagram as a directed
    pair ``(source, target)`` on labels ``1..rank``.  The underlying
    graph must be the Dynkin diagram of the declared type and rank;
    loops, repeated edges and disconnected graphs are rejected.  If some
    arrow runs from a larger to a smaller label, the vertices are
    renumbered along a topological order (smallest original label first)
    and the permutation is recorded in ``renumbering``.
    """
    arrows = [(int(s), int(t)) for s, t in orientation_spec]
    for s, t in arrows:
        if not (1 <= s <= rank and 1 <= t <= rank):
            raise QuiverError(f"arrow ({s},{t}) uses labels outside 1..{rank}")
        if s == t:
            raise QuiverError(f"loop at vertex {s}")
    edges = set()
    for s, t in arrows:
        e = frozenset((s, t))
        if e in edges:
            raise QuiverError(f"repeated edge between {s} and {t}")
        edges.add(e)
    _validate_shape(diagram_type, rank, edges)

    # topological renumbering (Kahn, smallest original label first)
    indeg = {v: 0 for v in range(1, rank + 1)}
    for _, t in arrows:
        indeg[t] += 1
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order: list[int] = []
    remaining = dict(indeg)
    out = {v: [] for v in range(1, rank + 1)}
    for s, t in arrows:
        out[s].append(t)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in out[v]:
            remaining[w] -= 1
            if remaining[w] == 0:
                ready.append(w)
        ready.sort()
    if len(order) != rank:
        raise QuiverError("orientation has a directed cycle")

    new_of_old = {old: new for new, old in enumerate(order, start=1)}
    renum = tuple(order)
    new_arrows = tuple(sorted((new_of_old[s], new_of_old[t]) for s, t in arrows))
    return DynkinQuiver(diagram_type, rank, new_arrows, renum)


def standard_quiver(diagram_type: str, rank: int) -> DynkinQuiver:
    """A default orientation for each type, already topologically numbered.

    Type A is the linear quiver ``1 -> 2 -> ... -> n``.  Type D chains
    ``1 .. n-2`` and hangs vertices ``n-1`` and ``n`` off vertex ``n-2``.
    Type E chains ``1 .. n-1`` and hangs vertex ``n`` off vertex 3.  All
    arrows point from smaller to larger vertex.
    """
    if diagram_type == "A":
        arrows = [(i, i + 1) for i in range(1, rank)]
    elif diagram_type == "D":
        arrows = [(i, i + 1) for i in range(1, rank - 2)]
        arrows += [(rank - 2, rank - 1), (rank - 2, rank)]
    elif diagram_type == "E":
        arrows = [(i, i + 1) for i in range(1, rank - 1)]
        arrows.append((3, rank))
    else:
        raise QuiverError(f"unknown diagram type {diagram_type!r}")
    return build_quiver(diagram_type, rank, arrows)


# ---------------------------------------------------------------------------
# bilinear forms


def euler_form(quiver: DynkinQuiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """``<a,b> = sum_i a_i b_i - sum_{arrows s->t} a_s b_t``.

    Bilinear but not symmetric; for modules it computes
    ``dim Hom - dim Ext^1``.
    """
    if len(alpha) != quiver.rank or len(beta) != quiver.rank:
        raise QuiverError("dimension vector length does not match the rank")
    total = sum(a * b for a, b in zip(alpha, beta))
    total -= sum(alpha[s - 1] * beta[t - 1] for s, t in quiver.arrows)
    return total


def symmetrized_euler_form(
    quiver: DynkinQuiver, alpha: Sequence[int], beta: Sequence[int]
) -> int:
    """``(a,b) = <a,b> + <b,a>``; equals ``b^T C a`` for the Cartan matrix C."""
    return euler_form(quiver, alpha, beta) + euler_form(quiver, beta, alpha)


def simple_reflection(
    quiver: DynkinQuiver, i: int, v: Sequence[int]
) -> tuple[int, ...]:
    """Weyl reflection at vertex ``i`` acting on root coordinates."""
    pairing = 2 * v[i - 1] - sum(v[j - 1] for j in quiver.neighbours(i))
    w = list(v)
    w[i - 1] -= pairing
    return tuple(w)


# ---------------------------------------------------------------------------
# adapted reduced words and the root order


def _reflect_arrows(
    arrows: frozenset[tuple[int, int]], i: int
) -> frozenset[tuple[int, int]]:
    return frozenset((t, s) if s == i or t == i else (s, t) for s, t in arrows)


def _sources(rank: int, arrows: frozenset[tuple[int, int]]) -> list[int]:
    targets = {t for _, t in arrows}
    return [i for i in range(1, rank + 1) if i not in targets]


def adapted_reduced_word(
    quiver: DynkinQuiver, variant: str = "canonical"
) -> tuple[int, ...]:
    """A reduced word for the longest Weyl element, adapted to the orientation.

    Letter ``k`` is always a source of the quiver obtained by reflecting
    the orientation at the first ``k-1`` letters, and each new root
    ``s_{i_1}..s_{i_{k-1}}(alpha_{i_k})`` is positive (so the word is
    reduced).  At steps where several sources are eligible the
    ``canonical`` variant takes the one producing the lexicographically
    largest root vector — on the linear type-A quiver this reproduces
    the segment order ``[1,1] < [1,2] < ... < [n,n]`` — while
    ``alternate`` takes the smallest vertex label, giving a second word
    in the same commutation class whenever the quiver admits one.
    """
    if variant not in ("canonical", "alternate"):
        raise QuiverError(f"unknown word variant {variant!r}")
    m = positive_root_count(quiver.diagram_type, quiver.rank)
    simples = tuple(
        tuple(1 if j == i else 0 for j in range(1, quiver.rank + 1))
        for i in range(1, quiver.rank + 1)
    )

    def root_of(prefix: list[int], i: int) -> tuple[int, ...]:
        beta = simples[i - 1]
        for letter in reversed(prefix):
            beta = simple_reflection(quiver, letter, beta)
        return beta

    def extend(
        word: list[int], arrows: frozenset[tuple[int, int]]
    ) -> list[int] | None:
        if len(word) == m:
            return word
        candidates = []
        for i in _sources(quiver.rank, arrows):
            beta = root_of(word, i)
            if all(x >= 0 for x in beta):
                candidates.append((beta, i))
        if variant == "canonical":
            candidates.sort(key=lambda c: (c[0], -c[1]), reverse=True)
        else:
            candidates.sort(key=lambda c: c[1])
        for beta, i in candidates:
            result = extend(word + [i], _reflect_arrows(arrows, i))
            if result is not None:
                return result
        return None

    word = extend([], frozenset(quiver.arrows))
    if word is None:  # pragma: no cover - cannot happen for Dynkin orientations
        raise QuiverError("no adapted reduced word found")
    return tuple(word)


@dataclass(frozen=True)
class RootTable:
    """The positive roots in the total order induced by an adapted word.

    ``roots[k]`` is the ``(k+1)``-st root; smaller index means smaller
    root.  All Kostant partitions built on this table store indices into
    ``roots``.
    """

    quiver: DynkinQuiver
    word: tuple[int, ...]
    roots: tuple[tuple[int, ...], ...]

    @classmethod
    def from_word(cls, quiver: DynkinQuiver, word: Sequence[int]) -> "RootTable":
        roots: list[tuple[int, ...]] = []
        prefix: list[int] = []
        for letter in word:
            beta = tuple(
                1 if j == letter else 0 for j in range(1, quiver.rank + 1)
            )
            for prev in reversed(prefix):
                beta = simple_reflection(quiver, prev, beta)
            if any(x < 0 for x in beta):
                raise QuiverError(f"word {tuple(word)} is not reduced")
            roots.append(beta)
            prefix.append(letter)
        expected = positive_root_count(quiver.diagram_type, quiver.rank)
        if len(roots) != expected or len(set(roots)) != expected:
            raise QuiverError("word does not enumerate the positive roots")
        return cls(quiver, tuple(word), tuple(roots))

    def __len__(self) -> int:
        return len(self.roots)

    def index_of(self, vector: Sequence[int]) -> int:
        try:
            return _root_index_map(self)[tuple(vector)]
        except KeyError:
            raise PartitionError(f"{tuple(vector)} is not a positive root") from None

    def is_root(self, vector: Sequence[int]) -> bool:
        return tuple(vector) in _root_index_map(self)

    def simple_root_index(self, i: int) -> int:
        vec = tuple(1 if j == i else 0 for j in range(1, self.quiver.rank + 1))
        return self.index_of(vec)

    def __repr__(self) -> str:
        return f"RootTable({self.quiver!r}, word={self.word})"


@functools.cache
def _root_index_map(table: RootTable) -> dict[tuple[int, ...], int]:
    return {vec: k for k, vec in enumerate(table.roots)}


@functools.cache
def positive_roots(quiver: DynkinQuiver, variant: str = "canonical") -> RootTable:
    """The cached default root table for a quiver (canonical adapted word)."""
    return RootTable.from_word(quiver, adapted_reduced_word(quiver, variant))


@functools.cache
def projective_root(quiver: DynkinQuiver, i: int) -> tuple[int, ...]:
    """Dimension vector of the projective at ``i``: 1 on every vertex reachable from ``i``."""
    reach = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        for _, t in quiver.arrows_out_of(v):
            if t not in reach:
                reach.add(t)
                stack.append(t)
    return tuple(1 if v in reach else 0 for v in quiver.vertices)


@functools.cache
def injective_root(quiver: DynkinQuiver, i: int) -> tuple[int, ...]:
    """Dimension vector of the injective at ``i``: 1 on every vertex that reaches ``i``."""
    reach = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        for s, _ in quiver.arrows_into(v):
            if s not in reach:
                reach.add(s)
                stack.append(s)
    return tuple(1 if v in reach else 0 for v in quiver.vertices)


# ---------------------------------------------------------------------------
# Kostant partitions


@dataclass(frozen=True)
class KostantPartition:
    """A multiset of positive roots, stored as non-increasing root indices."""

    table: RootTable
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for p in self.parts:
            if not (0 <= p < len(self.table.roots)):
                raise PartitionError(f"root index {p} out of range")
        ordered = tuple(sorted(self.parts, reverse=True))
        if ordered != self.parts:
            object.__setattr__(self, "parts", ordered)

    @property
    def total(self) -> tuple[int, ...]:
        """Dimension vector: the sum of all parts."""
        vec = [0] * self.table.quiver.rank
        for p in self.parts:
            for j, x in enumerate(self.table.roots[p]):
                vec[j] += x
        return tuple(vec)

    def part_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.table.roots[p] for p in self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __add__(self, other: "KostantPartition") -> "KostantPartition":
        """Direct sum: concatenate the two multisets of parts."""
        if self.table is not other.table and self.table != other.table:
            raise PartitionError("cannot add partitions over different root tables")
        return KostantPartition(self.table, self.parts + other.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"KP({kp_format(self)})"


def kp_zero(table: RootTable) -> KostantPartition:
    return KostantPartition(table, ())


def kp_single(table: RootTable, root: Sequence[int] | int) -> KostantPartition:
    idx = root if isinstance(root, int) else table.index_of(root)
    return KostantPartition(table, (idx,))


def kp_from_vectors(
    table: RootTable, vectors: Iterable[Sequence[int]]
) -> KostantPartition:
    return KostantPartition(table, tuple(table.index_of(v) for v in vectors))


def segment_root(quiver: DynkinQuiver, a: int, b: int) -> tuple[int, ...]:
    if not (1 <= a <= b <= quiver.rank):
        raise PartitionError(f"bad segment [{a},{b}] for rank {quiver.rank}")
    return tuple(1 if a <= v <= b else 0 for v in quiver.vertices)


def root_segment(vector: Sequence[int]) -> tuple[int, int]:
    support = [i + 1 for i, x in enumerate(vector) if x]
    if not support or any(vector[i - 1] != 1 for i in support):
        raise PartitionError(f"{tuple(vector)} is not a segment root")
    a, b = support[0], support[-1]
    if support != list(range(a, b + 1)):
        raise PartitionError(f"{tuple(vector)} is not a segment root")
    return a, b


def kp_from_segments(
    table: RootTable, segments: Iterable[tuple[int, int]]
) -> KostantPartition:
    q = table.quiver
    return kp_from_vectors(table, (segment_root(q, a, b) for a, b in segments))


def segments_of(kp: KostantPartition) -> tuple[tuple[int, int], ...]:
    """The multisegment view (type A only), sorted lexicographically."""
    return tuple(sorted(root_segment(v) for v in kp.part_roots()))


@functools.cache
def kp_enumerate(table: RootTable, gamma: tuple[int, ...]) -> tuple[KostantPartition, ...]:
    """All Kostant partitions with dimension vector ``gamma``, deterministically ordered."""
    if len(gamma) != table.quiver.rank:
        raise PartitionError("gamma length does not match the rank")
    if any(x < 0 for x in gamma):
        raise PartitionError("gamma has negative entries")
    results: list[KostantPartition] = []

    def descend(k: int, remaining: tuple[int, ...], acc: tuple[int, ...]) -> None:
        if not any(remaining):
            results.append(KostantPartition(table, acc))
            return
        if k < 0:
            return
        vec = table.roots[k]
        cap = min(
            (remaining[j] // vec[j] for j in range(len(vec)) if vec[j]),
            default=0,
        )
        for count in range(cap, -1, -1):
            rest = tuple(r - count * v for r, v in zip(remaining, vec))
            descend(k - 1, rest, acc + (k,) * count)

    descend(len(table.roots) - 1, tuple(gamma), ())
    return tuple(results)


# ---------------------------------------------------------------------------
# text round-trip

_SEGMENT_RE = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*\]$")


def kp_parse(table: RootTable, text: str) -> KostantPartition:
    """Parse ``"[1,3]+[2,2]"`` (linear type A) or ``"1,1,0 + 0,1,1"`` (coordinates).

    Every summand must be a positive root of the quiver.  ``"0"`` parses
    to the empty partition.
    """
    s = text.strip()
    if not s:
        raise PartitionError("empty partition text")
    if s == "0":
        return kp_zero(table)
    quiver = table.quiver
    terms = [t.strip() for t in s.split("+")]
    if any(not t for t in terms):
        raise PartitionError(f"malformed partition text {text!r}")
    if "[" in s:
        if not quiver.is_linear_type_a():
            raise PartitionError(
                "segment syntax is only available for the linear type-A quiver"
            )
        segments = []
        for term in terms:
            m = _SEGMENT_RE.match(term)
            if not m:
                raise PartitionError(f"malformed segment {term!r}")
            a, b = int(m.group(1)), int(m.group(2))
            if a > b:
                raise PartitionError(f"segment [{a},{b}] has start > end")
            segments.append((a, b))
        return kp_from_segments(table, segments)
    vectors = [parse_dim_vector(term, quiver.rank) for term in terms]
    for v in vectors:
        if not table.is_root(v):
            raise PartitionError(f"{v} is not a positive root")
    return kp_from_vectors(table, vectors)


def kp_format(kp: KostantPartition) -> str:
    """Canonical text form; inverse of :func:`kp_parse`."""
    if not kp.parts:
        return "0"
    if kp.table.quiver.is_linear_type_a():
        return "+".join(f"[{a},{b}]" for a, b in segments_of(kp))
    ordered = sorted(kp.parts)
    return " + ".join(",".join(str(x) for x in kp.table.roots[p]) for p in ordered)


# ---------------------------------------------------------------------------
# quiver spec files


def parse_quiver_spec(text: str) -> DynkinQuiver:
    """Parse the quiver description format::

        type A 3
        arrow 1 2
        arrow 2 3

    Blank lines and ``#`` comments are ignored.
    """
    diagram_type: str | None = None
    rank: int | None = None
    arrows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "type":
            if len(fields) != 3:
                raise QuiverError(f"line {lineno}: expected 'type <letter> <rank>'")
            diagram_type = fields[1].upper()
            try:
                rank = int(fields[2])
            except ValueError:
                raise QuiverError(f"line {lineno}: bad rank {fields[2]!r}") from None
        elif fields[0] == "arrow":
            if len(fields) != 3:
                raise QuiverError(f"line {lineno}: expected 'arrow <s> <t>'")
            try:
                arrows.append((int(fields[1]), int(fields[2])))
            except ValueError:
                raise QuiverError(f"line {lineno}: bad arrow {line!r}") from None
        else:
            raise QuiverError(f"line {lineno}: unknown directive {fields[0]!r}")
    if diagram_type is None or rank is None:
        raise QuiverError("missing 'type' line")
    return build_quiver(diagram_type, rank, arrows)


def load_quiver(path: str) -> DynkinQuiver:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver_spec(fh.read())


def format_quiver_spec(quiver: DynkinQuiver) -> str:
    lines = [f"type {quiver.diagram_type} {quiver.rank}"]
    lines += [f"arrow {s} {t}" for s, t in quiver.arrows]
    return "\n".join(lines) + "\n"
