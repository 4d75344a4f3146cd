# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table scan; mirror of the pure-Python kernel in _pyscan.py.

Same candidate space, same scan order, same output encoding.  Keep the
two implementations in lock-step: the agreement test compares them
element by element.
"""

BACKEND = "cython"

DEF MAXN = 8


cdef inline bint _passes(int n, int* op, bint* cone) noexcept nogil:
    cdef int x, y, z, v
    for x in range(n):
        if not cone[op[x * n + x]]:
            return False
    for x in range(n):
        for y in range(n):
            v = op[x * n + y]
            if not cone[op[x * n + op[v * n + y]]]:
                return False
            if cone[v]:
                if x != y and cone[op[y * n + x]]:
                    return False
                if cone[x] and not cone[y]:
                    return False
    for x in range(n):
        for y in range(n):
            v = op[x * n + y]
            for z in range(n):
                if not cone[op[v * n + op[op[y * n + z] * n + op[x * n + z]]]]:
                    return False
    return True


def valid_tables(int n):
    """All (flat op table, cone mask) pairs passing the axioms."""
    if n < 1:
        raise ValueError("carrier size must be at least 1")
    if n > MAXN:
        raise ValueError(f"compiled scan supports carrier sizes up to {MAXN}")

    cdef int op[MAXN * MAXN]
    cdef bint cone[MAXN]
    cdef int i, j, k, cone_bits, cone_mask, pos
    cdef int free = n * (n - 1)
    cdef bint carry
    results = []

    for cone_bits in range(1 << (n - 1)):
        cone_mask = (cone_bits << 1) | 1
        for i in range(n):
            cone[i] = (cone_mask >> i) & 1
        for j in range(n):
            op[j] = j
        for k in range(n, n * n):
            op[k] = 0
        while True:
            if _passes(n, op, cone):
                results.append((tuple([op[k] for k in range(n * n)]), cone_mask))
            # advance the free cells (row-major odometer, last cell fastest)
            pos = n * n - 1
            carry = True
            while carry and pos >= n:
                op[pos] += 1
                if op[pos] == n:
                    op[pos] = 0
                    pos -= 1
                else:
                    carry = False
            if carry:
                break
    return results
