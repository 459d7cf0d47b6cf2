"""Built-in fixture maps used across tests and the command line.

Fixtures:

* univar-2 / univar-3: one variable, H = x^2/2 and H = x^3.
* triangular-N-D: F_i = x_i - x_{i+1}^d with F_n = x_n; unit Jacobian,
  and the inverse degree saturates the d^(n-1) bound.
* m2zero-2-2: H_1 = (x_1+x_2)^2, H_2 = -(x_1+x_2)^2.  The Jacobian
  matrix squares to zero although the map is not triangular in the
  given coordinates, so G = y + H(y) exactly.
* random-2-2: dense seeded tensor whose Jacobian determinant is not
  identically 1; the standing negative example.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from random import Random

from treeinv.tensormap import PolyMap, SymTensor


def univariate_map(d: int, w) -> PolyMap:
    """n = 1 map with the single tensor entry w_{1,1..1} = w."""
    tensor = SymTensor(1, d, {(0, (0,) * d): Fraction(w)})
    return PolyMap(tensor, name=f"univar-{d}")


def triangular_map(n: int, d: int) -> PolyMap:
    """F_i = x_i - x_{i+1}^d for i < n, F_n = x_n."""
    entries = {}
    for i in range(n - 1):
        entries[(i, (i + 1,) * d)] = Fraction(factorial(d))
    tensor = SymTensor(n, d, entries)
    return PolyMap(tensor, name=f"triangular-{n}-{d}")


def m2zero_map() -> PolyMap:
    """n = 2, d = 2 map with H_1 = (x_1+x_2)^2 = -H_2.

    Row sums of M are proportional to x_1 + x_2 with opposite signs, so
    M(x)^2 = 0 identically while no entry of M is zero.
    """
    entries = {}
    for lower in ((0, 0), (0, 1), (1, 1)):
        entries[(0, lower)] = Fraction(2)
        entries[(1, lower)] = Fraction(-2)
    return PolyMap(SymTensor(2, 2, entries), name="m2zero-2-2")


def random_map(n: int, d: int, seed: int, name: str | None = None) -> PolyMap:
    """Dense tensor with small random rational entries, reproducible by seed."""
    rng = Random(seed)
    entries = {}
    for i in range(n):
        for lower in combinations_with_replacement(range(n), d):
            num = 0
            while num == 0:
                num = rng.randint(-4, 4)
            entries[(i, lower)] = Fraction(num, rng.randint(1, 4))
    return PolyMap(SymTensor(n, d, entries), name=name or f"random-{n}-{d}")


_BUILDERS = {
    "univar-2": lambda: univariate_map(2, 1),
    "univar-3": lambda: univariate_map(3, 6),
    "triangular-2-2": lambda: triangular_map(2, 2),
    "triangular-2-3": lambda: triangular_map(2, 3),
    "triangular-3-2": lambda: triangular_map(3, 2),
    "triangular-4-3": lambda: triangular_map(4, 3),
    "m2zero-2-2": m2zero_map,
    "random-2-2": lambda: random_map(2, 2, seed=7, name="random-2-2"),
}


def catalog_names() -> list[str]:
    return list(_BUILDERS)


def catalog() -> list[PolyMap]:
    return [build() for build in _BUILDERS.values()]


def get_fixture(name: str) -> PolyMap:
    try:
        return _BUILDERS[name]()
    except KeyError:
        known = ", ".join(_BUILDERS)
        raise KeyError(f"unknown fixture {name!r}; known: {known}") from None
