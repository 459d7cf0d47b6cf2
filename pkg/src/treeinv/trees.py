"""Valence-constrained labeled trees and the tree-expansion inverse.

The inverse of F(x) = x - H(x) expands as a sum over labeled trees: for
each internal count V there are (d*V)!/(d!)^V trees on one root (valence
1), V internal vertices (valence d+1), and N = (d-1)V + 1 leaves
(valence 1).  Each tree contributes its contraction amplitude divided by
V!ized N!; the degree-N part of G comes entirely from the V-th stratum.

Two evaluation paths are provided and must agree:

* "labeled" walks every tree of a stratum through the enumeration
  kernel, grouping equal-amplitude trees by rooted shape on the fly.
* "grouped" never touches labeled trees: it generates the rooted shapes
  directly and weights each amplitude by the reciprocal of the shape's
  automorphism count, which is exactly the labeled multiplicity divided
  by V!N!.

Vertex and tensor indices are 0-based throughout this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from treeinv._combinat import distinct_permutations
from treeinv._kernel import decode_parents, labeled_shape_census
from treeinv.errors import BudgetExceededError, DimensionMismatchError
from treeinv.poly import Poly, Series
from treeinv.tensormap import PolyMap

DEFAULT_BUDGET = 10**6

Shape = tuple  # nested tuples; () is a leaf, an internal node has d entries


class VertexSet:
    """Label layout of one stratum: root 0, internal 1..V, leaves V+1..V+N."""

    __slots__ = ("V", "N", "d")

    def __init__(self, V: int, N: int, d: int):
        if V < 0 or d < 2:
            raise ValueError(f"need V >= 0 and d >= 2, got V={V}, d={d}")
        if (d - 1) * V != N - 1:
            raise ValueError(f"leaf count {N} incompatible with V={V}, d={d}")
        self.V = V
        self.N = N
        self.d = d

    @classmethod
    def for_internal(cls, V: int, d: int) -> "VertexSet":
        return cls(V, (d - 1) * V + 1, d)

    @property
    def total(self) -> int:
        return self.V + self.N + 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and (self.V, self.N, self.d) == (other.V, other.N, other.d)
        )

    def __hash__(self):
        return hash((self.V, self.N, self.d))

    def __repr__(self) -> str:
        return f"VertexSet(V={self.V}, N={self.N}, d={self.d})"


class ValencedTree:
    """Labeled tree on a VertexSet; edges stored unordered, rooting derived."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices: VertexSet, edges):
        self.vertices = vertices
        self.edges = frozenset(tuple(sorted(e)) for e in edges)
        self.validate()

    @classmethod
    def from_parents(cls, vertices: VertexSet, parents) -> "ValencedTree":
        edges = [(v, p) for v, p in enumerate(parents) if p >= 0]
        return cls(vertices, edges)

    def validate(self) -> None:
        vs = self.vertices
        T = vs.total
        if len(self.edges) != vs.V + vs.N:
            raise ValueError(f"expected {vs.V + vs.N} edges, got {len(self.edges)}")
        valence = [0] * T
        adj: list[list[int]] = [[] for _ in range(T)]
        for a, b in self.edges:
            if not (0 <= a < T and 0 <= b < T) or a == b:
                raise ValueError(f"edge ({a}, {b}) outside vertex range")
            valence[a] += 1
            valence[b] += 1
            adj[a].append(b)
            adj[b].append(a)
        if valence[0] != 1:
            raise ValueError(f"root valence {valence[0]} != 1")
        for v in range(1, vs.V + 1):
            if valence[v] != vs.d + 1:
                raise ValueError(f"internal vertex {v} valence {valence[v]} != {vs.d + 1}")
        for v in range(vs.V + 1, T):
            if valence[v] != 1:
                raise ValueError(f"leaf {v} valence {valence[v]} != 1")
        seen = [False] * T
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            for w in adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != T:
            raise ValueError("tree is not connected")

    def rooted(self) -> list[int]:
        """Parent of each vertex with edges oriented toward the root; -1 at 0."""
        T = self.vertices.total
        adj: list[list[int]] = [[] for _ in range(T)]
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        parents = [-1] * T
        seen = [False] * T
        seen[0] = True
        queue = [0]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    parents[v] = u
                    queue.append(v)
        return parents

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ValencedTree)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"ValencedTree({self.vertices!r}, {sorted(self.edges)})"


def tree_count(V: int, d: int) -> int:
    """(V + N - 1)! / (d!)^V labeled trees in the stratum; 1 for V = 0."""
    if V < 0:
        raise ValueError(f"V must be non-negative, got {V}")
    N = (d - 1) * V + 1
    return factorial(V + N - 1) // factorial(d) ** V


def enumerate_trees(
    V: int, d: int, budget: int = DEFAULT_BUDGET
) -> Iterator[ValencedTree]:
    """All labeled trees of the stratum, in sequence-lexicographic order.

    The encoding sequences are the distinct permutations of the multiset
    holding each internal label d times; root and leaves never appear
    because their valence is 1.
    """
    total = tree_count(V, d)
    if total > budget:
        raise BudgetExceededError(
            f"stratum V={V}, d={d} holds {total} trees, over budget {budget}"
        )
    vs = VertexSet.for_internal(V, d)
    base = []
    for v in range(1, V + 1):
        base.extend([v] * d)
    T = vs.total
    for seq in distinct_permutations(base):
        yield ValencedTree.from_parents(vs, decode_parents(list(seq), T))


def _contract_children(child_vecs: list[list[Poly]], pmap: PolyMap) -> list[Poly]:
    """One internal vertex: fold d child vectors through the tensor.

    out[j] = sum over ordered lower tuples (k_1..k_d) of
    w_{j,k_1..k_d} * prod_t child_vecs[t][k_t].  Entries are grouped by
    lower multiset so each symmetrized product is formed once.
    """
    tensor = pmap.tensor
    n = tensor.n
    by_lower: dict[tuple[int, ...], list[tuple[int, Fraction]]] = {}
    for (j, lower), value in tensor.entries.items():
        by_lower.setdefault(lower, []).append((j, value))
    out = [Poly.zero(n) for _ in range(n)]
    for lower, rows in by_lower.items():
        sym = Poly.zero(n)
        for perm in distinct_permutations(lower):
            prod = child_vecs[0][perm[0]]
            for t in range(1, len(perm)):
                prod = prod * child_vecs[t][perm[t]]
            sym = sym + prod
        for j, value in rows:
            out[j] = out[j] + sym.scale(value)
    return out


def _amplitude_vector_from_parents(parents, pmap: PolyMap) -> list[Poly]:
    """Amplitudes for every root index at once, by bottom-up contraction."""
    n = pmap.n
    T = len(parents)
    children: list[list[int]] = [[] for _ in range(T)]
    order = [0]
    for v in range(1, T):
        children[parents[v]].append(v)
    head = 0
    while head < len(order):
        order.extend(children[order[head]])
        head += 1
    basis = [Poly.variable(n, j) for j in range(n)]
    vecs: dict[int, list[Poly]] = {}
    for v in reversed(order):
        kids = children[v]
        if not kids:
            vecs[v] = basis
        elif v != 0:
            vecs[v] = _contract_children([vecs[c] for c in kids], pmap)
    return vecs[children[0][0]]


def amplitude_vector(tree: ValencedTree, pmap: PolyMap) -> list[Poly]:
    """Raw amplitude of the tree for each root index, no stratum weights."""
    if tree.vertices.d != pmap.d:
        raise DimensionMismatchError(
            f"tree has arity {tree.vertices.d}, map has d={pmap.d}"
        )
    return _amplitude_vector_from_parents(tree.rooted(), pmap)


def amplitude(tree: ValencedTree, pmap: PolyMap, i: int) -> Poly:
    """Raw amplitude with the root edge index fixed at i (0-based)."""
    if not 0 <= i < pmap.n:
        raise DimensionMismatchError(f"root index {i} outside [0, {pmap.n})")
    return amplitude_vector(tree, pmap)[i]


@lru_cache(maxsize=None)
def _census(V: int, d: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    return tuple(labeled_shape_census(V, d))


def _shapes_with_internal(V: int, d: int) -> list[Shape]:
    """Rooted shapes with V internal nodes; () is a leaf."""
    return list(_shapes_cached(V, d))


@lru_cache(maxsize=None)
def _shapes_cached(V: int, d: int) -> tuple[Shape, ...]:
    if V == 0:
        return ((),)
    out: list[Shape] = []

    def fill(slots: int, remaining: int, minimum: tuple[int, int], chosen: list[Shape]):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(chosen))
            return
        # children are picked non-decreasing in (internal count, index)
        # so each multiset appears exactly once
        for v in range(minimum[0], remaining + 1):
            pool = _shapes_cached(v, d)
            start = minimum[1] if v == minimum[0] else 0
            for idx in range(start, len(pool)):
                if remaining - v < 0:
                    break
                chosen.append(pool[idx])
                fill(slots - 1, remaining - v, (v, idx), chosen)
                chosen.pop()

    fill(d, V - 1, (0, 0), [])
    return tuple(out)


@lru_cache(maxsize=None)
def shape_automorphisms(shape: Shape) -> int:
    """Order of the automorphism group of a rooted shape."""
    if shape == ():
        return 1
    aut = 1
    run = 1
    for t in range(len(shape)):
        aut *= shape_automorphisms(shape[t])
        if t > 0 and shape[t] == shape[t - 1]:
            run += 1
        else:
            run = 1
        if run > 1:
            aut *= run
    return aut


def _amplitude_vector_from_shape(
    shape: Shape, pmap: PolyMap, memo: dict
) -> list[Poly]:
    got = memo.get(shape)
    if got is None:
        if shape == ():
            got = [Poly.variable(pmap.n, j) for j in range(pmap.n)]
        else:
            got = _contract_children(
                [_amplitude_vector_from_shape(s, pmap, memo) for s in shape], pmap
            )
        memo[shape] = got
    return got


def tree_sum_inverse(
    pmap: PolyMap,
    D: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "labeled",
) -> list[Series]:
    """Partial sum of the tree expansion keeping degrees <= D.

    method "labeled" enumerates every labeled tree per stratum (the
    defining sum, with 1/(V! N!) weights); method "grouped" sums rooted
    shapes with 1/|Aut| weights.  Both are exact and identical.  Strata
    larger than budget raise; the check applies to both methods so the
    two are interchangeable.
    """
    if method not in ("labeled", "grouped"):
        raise ValueError(f"unknown method {method!r}")
    n, d = pmap.n, pmap.d
    totals = [Poly.zero(n) for _ in range(n)]
    V = 0
    while (d - 1) * V + 1 <= D:
        N = (d - 1) * V + 1
        total = tree_count(V, d)
        if total > budget:
            raise BudgetExceededError(
                f"stratum V={V}, d={d} holds {total} trees, over budget {budget}"
            )
        if method == "labeled":
            weight = Fraction(1, factorial(V) * factorial(N))
            for count, parents in _census(V, d):
                vec = _amplitude_vector_from_parents(parents, pmap)
                w = weight * count
                for i in range(n):
                    if not vec[i].is_zero():
                        totals[i] = totals[i] + vec[i].scale(w)
        else:
            memo: dict = {}
            for shape in _shapes_with_internal(V, d):
                vec = _amplitude_vector_from_shape(shape, pmap, memo)
                w = Fraction(1, shape_automorphisms(shape))
                for i in range(n):
                    if not vec[i].is_zero():
                        totals[i] = totals[i] + vec[i].scale(w)
        V += 1
    return [Series(t, D) for t in totals]
