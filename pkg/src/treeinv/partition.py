"""Partition-function series and the determinant identity.

With G the formal inverse of F = x - H, the series
log Z = sum over k >= 1 of (1/k) tr[M(G(y))^k] satisfies
Z(y) * det(I - M(x))|_{x=G(y)} = 1 identically, and the unit-Jacobian
condition forces Z = 1 (self-normalization).

exp and log of multivariate series ride on the scaling operator: if
S = sum of homogeneous S_j, then E = exp(S) satisfies
m E_m = sum_{j=1..m} j S_j E_{m-j}, and the reverse recursion yields the
logarithm; both are exact over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from treeinv.errors import PreconditionError
from treeinv.inversion import fixed_point_inverse
from treeinv.jacobian import is_unit_jacobian
from treeinv.poly import Poly, Series, series_compose
from treeinv.tensormap import PolyMap, jacobian_det, jacobian_matrix


def series_exp(s: Series) -> Series:
    """exp of a series with zero constant term."""
    if s.body.constant_term() != 0:
        raise ValueError("series_exp needs zero constant term")
    n = s.body.n
    cap = s.cap
    S = [s.homogeneous_component(m) for m in range(cap + 1)]
    E = [Poly.const(n, Fraction(1))]
    for m in range(1, cap + 1):
        acc = Poly.zero(n)
        for j in range(1, m + 1):
            if not S[j].is_zero():
                acc = acc + (S[j] * E[m - j]).scale(Fraction(j))
        E.append(acc.scale(Fraction(1, m)))
    total = Poly.zero(n)
    for part in E:
        total = total + part
    return Series(total, cap)


def series_log(s: Series) -> Series:
    """log of a series with constant term one."""
    if s.body.constant_term() != 1:
        raise ValueError("series_log needs constant term 1")
    n = s.body.n
    cap = s.cap
    S = [s.homogeneous_component(m) for m in range(cap + 1)]
    L = [Poly.zero(n)]
    for m in range(1, cap + 1):
        acc = S[m].scale(Fraction(m))
        for j in range(1, m):
            if not L[j].is_zero() and not S[m - j].is_zero():
                acc = acc - (L[j] * S[m - j]).scale(Fraction(j))
        L.append(acc.scale(Fraction(1, m)))
    total = Poly.zero(n)
    for part in L:
        total = total + part
    return Series(total, cap)


def log_z_series(pmap: PolyMap, D: int) -> Series:
    """sum over k of (1/k) tr[M(G(y))^k], truncated at degree D.

    M(G(y)) has lowest degree d - 1, so only k <= D // (d - 1)
    contribute below the cap.
    """
    if D < 1:
        raise ValueError(f"degree cap must be >= 1, got {D}")
    n, d = pmap.n, pmap.d
    G = fixed_point_inverse(pmap, D)
    M = jacobian_matrix(pmap)
    MG = [[series_compose(M.entries[i][j], G) for j in range(n)] for i in range(n)]

    total = Series(Poly.zero(n), D)
    k_max = D // (d - 1)
    power = MG
    for k in range(1, k_max + 1):
        if k > 1:
            power = [
                [
                    _series_dot(power[i], [MG[t][j] for t in range(n)])
                    for j in range(n)
                ]
                for i in range(n)
            ]
        tr = Series(Poly.zero(n), D)
        for i in range(n):
            tr = tr + power[i][i]
        total = total + tr.scale(Fraction(1, k))
    return total


def _series_dot(row: list[Series], col: list[Series]) -> Series:
    acc = row[0] * col[0]
    for t in range(1, len(row)):
        acc = acc + row[t] * col[t]
    return acc


def z_series(pmap: PolyMap, D: int) -> Series:
    """exp of log_z_series; constant term 1."""
    return series_exp(log_z_series(pmap, D))


def verify_z_identity(pmap: PolyMap, D: int) -> bool:
    """True iff z_series(map, D) * det(I - M(x))|_{x=G(y)} = 1 through degree D."""
    n = pmap.n
    G = fixed_point_inverse(pmap, D)
    jf_at_g = series_compose(jacobian_det(pmap), G)
    product = z_series(pmap, D) * jf_at_g
    return product == Series(Poly.const(n, Fraction(1)), D)


def check_self_normalization(pmap: PolyMap, D: int) -> bool:
    """Under a unit Jacobian, Z must be identically 1 up to the cap.

    Raises unless the map passes is_unit_jacobian; the statement is
    empty otherwise.
    """
    if not is_unit_jacobian(pmap):
        raise PreconditionError(
            "map does not satisfy the unit-Jacobian condition; "
            "self-normalization is only asserted under it"
        )
    one = Series(Poly.const(pmap.n, Fraction(1)), D)
    return z_series(pmap, D) == one


@dataclass
class PartitionReport:
    """Partition series at one cap."""

    log_z: Series
    z: Series
    self_normalized: bool


def partition_report(pmap: PolyMap, D: int) -> PartitionReport:
    lz = log_z_series(pmap, D)
    z = series_exp(lz)
    one = Series(Poly.const(pmap.n, Fraction(1)), D)
    return PartitionReport(log_z=lz, z=z, self_normalized=z == one)
