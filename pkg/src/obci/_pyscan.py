"""Pure-Python table scan; mirror of the compiled kernel in _fastscan.pyx.

Enumerates every operation table / cone pair on {0..n-1} with the unit
fixed at 0, the unit row forced to the identity, and the relation taken
as cone-generated, keeping the pairs that satisfy all six axioms.  Scan
order: cone masks ascending (bit 0 always set), tables ascending in
row-major lexicographic order.  Both backends must produce bit-identical
output in identical order.
"""

from __future__ import annotations

import itertools

BACKEND = "python"


def _passes(n: int, op: list[list[int]], cone: list[bool]) -> bool:
    # The relation is cone-generated, so the linking axiom holds by
    # construction and "unit <= w" is cone[w]; "unit <= x" is cone[x]
    # because the unit row is the identity.
    rng = range(n)
    for x in rng:
        if not cone[op[x][x]]:            # x <= x
            return False
    for x in rng:
        row_x = op[x]
        for y in rng:
            v = row_x[y]
            if not cone[op[x][op[v][y]]]:  # x <= (x->y)->y
                return False
            if cone[v]:
                if x != y and cone[op[y][x]]:      # antisymmetry
                    return False
                if cone[x] and not cone[y]:        # cone upward closure
                    return False
    for x in rng:
        row_x = op[x]
        for y in rng:
            a = op[row_x[y]]
            row_y = op[y]
            for z in rng:
                # (x->y) <= (y->z)->(x->z)
                if not cone[a[op[row_y[z]][row_x[z]]]]:
                    return False
    return True


def valid_tables(n: int) -> list[tuple[tuple[int, ...], int]]:
    """All (flat op table, cone mask) pairs passing the axioms."""
    if n < 1:
        raise ValueError("carrier size must be at least 1")
    results: list[tuple[tuple[int, ...], int]] = []
    rng = range(n)
    free = n * (n - 1)
    for cone_bits in range(1 << (n - 1)):
        cone_mask = (cone_bits << 1) | 1
        cone = [bool(cone_mask >> i & 1) for i in rng]
        op = [list(rng)] + [[0] * n for _ in range(n - 1)]
        for vals in itertools.product(rng, repeat=free):
            k = 0
            for i in range(1, n):
                row = op[i]
                for j in rng:
                    row[j] = vals[k]
                    k += 1
            if _passes(n, op, cone):
                flat = tuple(v for row in op for v in row)
                results.append((flat, cone_mask))
    return results
