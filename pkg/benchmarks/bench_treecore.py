"""Compare the compiled and pure-Python tree-census kernels.

Both kernels walk every Prüfer sequence of a stratum and aggregate
labeled trees by rooted shape; the compiled one exists purely for this
hot loop.  Run:

    python3 benchmarks/bench_treecore.py
"""

from __future__ import annotations

import time

from treeinv import _treecore_py


def _load_compiled():
    try:
        from treeinv import _treecore  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _treecore


def _time(fn, V: int, d: int) -> tuple[float, int]:
    start = time.perf_counter()
    census = fn(V, d)
    elapsed = time.perf_counter() - start
    return elapsed, sum(c for c, _ in census)


def main() -> None:
    compiled = _load_compiled()
    strata = [(4, 2), (5, 2), (6, 2), (3, 3), (4, 3), (3, 4)]
    header = f"{'stratum':>10} {'trees':>10} {'pure (s)':>10}"
    if compiled is not None:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    for V, d in strata:
        pure_t, total = _time(_treecore_py.labeled_shape_census, V, d)
        row = f"{f'V={V} d={d}':>10} {total:>10} {pure_t:>10.3f}"
        if compiled is not None:
            comp_t, comp_total = _time(compiled.labeled_shape_census, V, d)
            assert comp_total == total, "kernel disagreement"
            row += f" {comp_t:>13.3f} {pure_t / comp_t:>7.1f}x"
        print(row)
    if compiled is None:
        print("\ncompiled kernel not built; showing pure timings only")


if __name__ == "__main__":
    main()
