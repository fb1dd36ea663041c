# cython: boundscheck=False, wraparound=False, cdivision=True
"""Native census scan kernel: compiled twin of _scan.scan.

Same odometer-with-incremental-value-table algorithm; see _scan.py for the
algorithm notes.  Keep both implementations in sync.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


def scan(int n, int q, long long n_candidates,
         int[::1] add_flat, int[::1] step_flat, int[::1] deg,
         bint collect=False):
    cdef int *table = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *digits = <int *> PyMem_Malloc(n * sizeof(int))
    cdef long long *seen = <long long *> PyMem_Malloc(n * sizeof(long long))
    if table == NULL or digits == NULL or seen == NULL:
        PyMem_Free(table)
        PyMem_Free(digits)
        PyMem_Free(seen)
        raise MemoryError()

    cdef long long members = 0, units = 0, c = 0, stamp
    cdef int d, x, v, base, top = q - 1
    cdef bint ok, injective
    member_ids = [] if collect else None
    unit_ids = [] if collect else None

    try:
        for x in range(n):
            table[x] = 0
            digits[x] = 0
            seen[x] = 0
        for c in range(n_candidates):
            if c:
                d = 0
                while digits[d] == top:
                    base = (d * q + top) * n
                    for x in range(n):
                        table[x] = add_flat[table[x] * n + step_flat[base + x]]
                    digits[d] = 0
                    d += 1
                base = (d * q + digits[d]) * n
                for x in range(n):
                    table[x] = add_flat[table[x] * n + step_flat[base + x]]
                digits[d] += 1
            ok = True
            for x in range(n):
                if deg[table[x]] != deg[x]:
                    ok = False
                    break
            if not ok:
                continue
            members += 1
            if collect:
                member_ids.append(c)
            stamp = c + 1
            injective = True
            for x in range(n):
                v = table[x]
                if seen[v] == stamp:
                    injective = False
                    break
                seen[v] = stamp
            if injective:
                units += 1
                if collect:
                    unit_ids.append(c)
    finally:
        PyMem_Free(table)
        PyMem_Free(digits)
        PyMem_Free(seen)
    return members, units, member_ids, unit_ids
