"""Symmetric coefficient tensors and the polynomial maps they define.

A map F(x) = x - H(x) is stored through its coefficient tensor w: the
component H_i is (1/d!) times the sum of w_{i,j1..jd} x_{j1}..x_{jd} over
all ordered index tuples.  The tensor is fully symmetric in the lower
indices, so one canonical entry (lower indices sorted) represents a whole
orbit of ordered tuples; orbit sizes are multinomial coefficients.

Indices are 0-based internally; file formats and printed reports use
1-based indices.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from treeinv._combinat import multiset_orbit_size
from treeinv.poly import Poly
from treeinv.polymatrix import DET_DIM_GUARD, PolyMatrix

TensorKey = tuple[int, tuple[int, ...]]


class SymTensor:
    """Coefficient tensor with one upper index and d symmetric lower indices.

    ``entries`` maps (i, sorted lower tuple) to a nonzero Fraction.
    Construction sorts lower indices, sums duplicate keys, prunes zeros,
    and validates index ranges.
    """

    __slots__ = ("n", "d", "entries")

    def __init__(self, n: int, d: int, entries=None):
        if n < 1:
            raise ValueError(f"dimension must be positive, got {n}")
        if d < 2:
            raise ValueError(f"lower-index arity must be at least 2, got {d}")
        clean: dict[TensorKey, Fraction] = {}
        if entries:
            items = entries.items() if hasattr(entries, "items") else entries
            for (i, lower), value in items:
                lower = tuple(sorted(lower))
                if len(lower) != d:
                    raise ValueError(
                        f"entry ({i}, {lower}) has {len(lower)} lower indices, expected {d}"
                    )
                if not 0 <= i < n or any(not 0 <= j < n for j in lower):
                    raise ValueError(f"entry ({i}, {lower}) has indices outside [0, {n})")
                value = Fraction(value)
                key = (i, lower)
                acc = clean.get(key, Fraction(0)) + value
                if acc == 0:
                    clean.pop(key, None)
                else:
                    clean[key] = acc
        self.n = n
        self.d = d
        self.entries = clean

    def get(self, i: int, lower) -> Fraction:
        """Entry for any ordering of the lower indices."""
        return self.entries.get((i, tuple(sorted(lower))), Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymTensor)
            and (self.n, self.d) == (other.n, other.d)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"SymTensor(n={self.n}, d={self.d}, {len(self.entries)} entries)"


class PolyMap:
    """The polynomial map F(x) = x - H(x) defined by a symmetric tensor."""

    __slots__ = ("tensor", "name")

    def __init__(self, tensor: SymTensor, name: str | None = None):
        self.tensor = tensor
        self.name = name

    @property
    def n(self) -> int:
        return self.tensor.n

    @property
    def d(self) -> int:
        return self.tensor.d

    def gabber_bound(self) -> int:
        """Degree bound d^(n-1) for a polynomial inverse."""
        return self.d ** (self.n - 1)

    def __repr__(self) -> str:
        label = self.name or "<anonymous>"
        return f"PolyMap({label}, n={self.n}, d={self.d})"


def build_H(pmap: PolyMap) -> list[Poly]:
    """The homogeneous components H_i of degree d.

    Each canonical tensor entry contributes (orbit size / d!) times its
    value to the coefficient of the corresponding monomial.
    """
    tensor = pmap.tensor
    n, d = tensor.n, tensor.d
    d_fact = factorial(d)
    coeffs: list[dict] = [dict() for _ in range(n)]
    for (i, lower), value in tensor.entries.items():
        exps = [0] * n
        for j in lower:
            exps[j] += 1
        mono = tuple(exps)
        weight = value * multiset_orbit_size(lower) / d_fact
        coeffs[i][mono] = coeffs[i].get(mono, Fraction(0)) + weight
    return [Poly(n, c) for c in coeffs]


def build_F(pmap: PolyMap) -> list[Poly]:
    """Components F_i = x_i - H_i."""
    H = build_H(pmap)
    return [Poly.variable(pmap.n, i) - H[i] for i in range(pmap.n)]


def jacobian_matrix(pmap: PolyMap) -> PolyMatrix:
    """M with M[i][j] = dH_i/dx_j, each entry homogeneous of degree d-1."""
    H = build_H(pmap)
    n = pmap.n
    return PolyMatrix([[H[i].diff(j) for j in range(n)] for i in range(n)])


def jacobian_det(pmap: PolyMap, guard: int = DET_DIM_GUARD) -> Poly:
    """det(I - M(x)); its constant term is always 1."""
    n = pmap.n
    I = PolyMatrix.identity(n, n)
    return (I - jacobian_matrix(pmap)).det(guard)


def norm_w(pmap: PolyMap) -> Fraction:
    """max over i of the sum of |w_{i,j1..jd}| over all ordered lower tuples.

    Each canonical entry contributes |value| times its orbit size.
    """
    totals = [Fraction(0)] * pmap.n
    for (i, lower), value in pmap.tensor.entries.items():
        totals[i] += abs(value) * multiset_orbit_size(lower)
    return max(totals)
