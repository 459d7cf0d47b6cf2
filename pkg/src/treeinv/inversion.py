"""Fixed-point inversion, oracles, and inverse-structure checks.

The production inverse comes from iterating G -> y + H(G) under degree
truncation, which is exact and stationary after at most D steps.  The
tree expansion must reproduce it coefficient for coefficient; the
univariate reversion formula gives a third, closed-form check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from treeinv.errors import PreconditionError
from treeinv.poly import Poly, Series, series_compose
from treeinv.tensormap import PolyMap, build_H, jacobian_matrix


def default_degree_cap(pmap: PolyMap) -> int:
    """max(10, d^(n-1) + d): shows saturation of the degree bound plus margin."""
    return max(10, pmap.gabber_bound() + pmap.d)


def fixed_point_inverse(pmap: PolyMap, D: int) -> list[Series]:
    """Iterate G = y + H(G) truncated at D until stationary.

    Each pass fixes at least one more homogeneous degree, so the loop
    terminates within D iterations with G = y + trunc_D(H(G)) exact.
    """
    if D < 1:
        raise ValueError(f"degree cap must be >= 1, got {D}")
    n = pmap.n
    H = build_H(pmap)
    y = [Series(Poly.variable(n, i), D) for i in range(n)]
    G = y
    for _ in range(D):
        nxt = [y[i] + series_compose(H[i], G) for i in range(n)]
        if nxt == G:
            return G
        G = nxt
    return G


def lagrange_oracle_1d(d: int, a, D: int) -> Series:
    """Reversion of y = x - a*x^d by the classical coefficient formula.

    Sum over k with (d-1)k + 1 <= D of
    binom(dk, k) / ((d-1)k + 1) * a^k * y^((d-1)k+1).
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    a = Fraction(a)
    terms = {}
    k = 0
    while (d - 1) * k + 1 <= D:
        deg = (d - 1) * k + 1
        c = Fraction(comb(d * k, k), deg) * a**k
        if c != 0:
            terms[(deg,)] = c
        k += 1
    return Series(Poly(1, terms), D)


def verify_inverse(pmap: PolyMap, G: list[Series], D: int) -> bool:
    """True iff F(G(y)) = y holds exactly through degree D."""
    n = pmap.n
    if len(G) != n:
        raise ValueError(f"expected {n} components, got {len(G)}")
    if any(g.cap < D for g in G):
        raise ValueError(f"series caps {[g.cap for g in G]} below {D}")
    Gt = [g.truncate(D) for g in G]
    H = build_H(pmap)
    for i in range(n):
        residual = Gt[i] - series_compose(H[i], Gt) - Series(Poly.variable(n, i), D)
        if not residual.is_zero():
            return False
    return True


def correlation_tensor(pmap: PolyMap, i: int, leaf_indices, D: int | None = None):
    """Mixed partial d^N G_i / dy_{j1}..dy_{jN} at y = 0 (indices 0-based).

    Equals the coefficient of the matching monomial times the product of
    leaf-index multiplicities factorial; symmetric in the leaf multiset
    by construction.
    """
    leaves = tuple(sorted(leaf_indices))
    N = len(leaves)
    if N < 1:
        raise ValueError("need at least one leaf index")
    if not 0 <= i < pmap.n or any(not 0 <= j < pmap.n for j in leaves):
        raise ValueError(f"indices outside [0, {pmap.n})")
    if D is None:
        D = N
    elif D < N:
        raise ValueError(f"multiset size {N} exceeds series cap {D}")
    G = fixed_point_inverse(pmap, D)
    exps = [0] * pmap.n
    for j in leaves:
        exps[j] += 1
    value = G[i].coefficient(tuple(exps))
    for e in exps:
        if e > 1:
            for t in range(2, e + 1):
                value *= t
    return value


def polynomial_inverse_degree(pmap: PolyMap, D_cap: int) -> int | None:
    """Largest nonzero degree of G up to D_cap, if within d^(n-1).

    Vanishing of all components above d^(n-1) out to D_cap is evidence
    of a polynomial inverse, not proof; callers get the observed degree
    or None, never a stronger claim.
    """
    bound = pmap.gabber_bound()
    if D_cap <= bound:
        raise ValueError(f"cap {D_cap} must exceed the degree bound {bound}")
    G = fixed_point_inverse(pmap, D_cap)
    top = 1
    for g in G:
        for deg in range(D_cap, 0, -1):
            if not g.homogeneous_component(deg).is_zero():
                top = max(top, deg)
                break
    return top if top <= bound else None


def check_quadratic_nilpotent_theorem(pmap: PolyMap, D: int) -> bool:
    """With M(x)^2 = 0, the inverse must close after one step: G = y + H(y).

    Raises unless M(x)^2 vanishes identically; under the precondition,
    returns whether fixed_point_inverse(map, D) equals y + H(y) exactly.
    """
    M = jacobian_matrix(pmap)
    if not (M * M).is_zero():
        raise PreconditionError(
            "Jacobian matrix does not square to zero; the one-step inverse "
            "form only applies to order-2 nilpotent maps"
        )
    n = pmap.n
    H = build_H(pmap)
    G = fixed_point_inverse(pmap, D)
    expected = [Series(Poly.variable(n, i) + H[i], D) for i in range(n)]
    return G == expected


@dataclass
class InverseReport:
    """Summary of one inversion run."""

    series: list[Series]
    verified_to: int
    polynomial_degree: int | None
    gabber_bound: int


def invert_report(pmap: PolyMap, D: int | None = None) -> InverseReport:
    """Inverse series plus verification and degree diagnostics."""
    if D is None:
        D = default_degree_cap(pmap)
    G = fixed_point_inverse(pmap, D)
    if not verify_inverse(pmap, G, D):
        raise AssertionError("fixed point failed inverse verification")
    bound = pmap.gabber_bound()
    poly_deg = polynomial_inverse_degree(pmap, D) if D > bound else None
    return InverseReport(
        series=G, verified_to=D, polynomial_degree=poly_deg, gabber_bound=bound
    )
