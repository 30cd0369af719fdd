# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same contract as :func:`ramm._pykernel.best_mapping`."""

from libc.stdlib cimport malloc, free


def best_mapping(const long long[::1] flat, int n, int m):
    cdef long long *loads = <long long *> malloc(m * sizeof(long long))
    cdef int *digits = <int *> malloc(n * sizeof(int))
    cdef int *wit = <int *> malloc(n * sizeof(int))
    cdef int i, j, k, d, last = m - 1
    cdef long long best, ms
    cdef unsigned long long explored = 1
    if loads == NULL or digits == NULL or wit == NULL:
        free(loads); free(digits); free(wit)
        raise MemoryError()
    try:
        for j in range(m):
            loads[j] = 0
        for i in range(n):
            digits[i] = 0
            wit[i] = 0
            loads[0] += flat[i * m]
        best = loads[0]
        with nogil:
            while True:
                k = n - 1
                while k >= 0 and digits[k] == last:
                    loads[last] -= flat[k * m + last]
                    loads[0] += flat[k * m]
                    digits[k] = 0
                    k -= 1
                if k < 0:
                    break
                d = digits[k]
                loads[d] -= flat[k * m + d]
                loads[d + 1] += flat[k * m + d + 1]
                digits[k] = d + 1
                explored += 1
                ms = loads[0]
                for j in range(1, m):
                    if loads[j] > ms:
                        ms = loads[j]
                if ms < best:
                    best = ms
                    for i in range(n):
                        wit[i] = digits[i]
        return best, [wit[i] for i in range(n)], explored
    finally:
        free(loads)
        free(digits)
        free(wit)
