"""Pure-Python enumeration kernel (fallback for :mod:`ramm._ckernel`)."""

from __future__ import annotations


def best_mapping(flat, n: int, m: int):
    """Exhaustively map ``n`` tasks onto ``m`` resources.

    ``flat`` holds integer execution times row-major (``flat[i*m + j]``).
    Mappings are visited in lexicographic order of the resource tuple, with
    the last task varying fastest; only a strictly better makespan replaces
    the incumbent, so the returned witness is the lexicographically least
    optimum. Returns ``(makespan, witness, explored)``.
    """
    et = [list(flat[i * m:(i + 1) * m]) for i in range(n)]
    digits = [0] * n
    loads = [0] * m
    loads[0] = sum(row[0] for row in et)
    best = loads[0] if m else 0
    witness = list(digits)
    explored = 1
    last = m - 1
    while True:
        k = n - 1
        while k >= 0 and digits[k] == last:
            row = et[k]
            loads[last] -= row[last]
            loads[0] += row[0]
            digits[k] = 0
            k -= 1
        if k < 0:
            break
        row = et[k]
        d = digits[k]
        loads[d] -= row[d]
        loads[d + 1] += row[d + 1]
        digits[k] = d + 1
        explored += 1
        ms = max(loads)
        if ms < best:
            best = ms
            witness = list(digits)
    return best, witness, explored
