"""Pure-Python census scan kernel.

Walks every reduced polynomial with base-subfield coefficients in
lexicographic coefficient order (an odometer over base-q digits) while
maintaining the polynomial's full value table incrementally: bumping the
digit of x^d from a to b adds (b - a) * x^d to the value at every point, so
step_flat caches those n-point increments per (digit, old value).  Each
odometer step touches q/(q-1) digits on average, which beats re-evaluating
the table by a factor of about n.

A candidate is a member when it maps every point to a point of the same
subfield degree (its coefficients lie in the subfield by construction), and
a unit when its table is additionally injective.

Mirrors _scan_native.pyx; keep both in sync.
"""


def scan(n, q, n_candidates, add_flat, step_flat, deg, collect=False):
    """Count members and units among the first n_candidates polynomials.

    add_flat: flat n*n addition table of element indices.
    step_flat: flat (n*q)*n table; row d*q+a holds the pointwise increment
        applied when digit d moves from value a to (a+1) mod q.
    deg: subfield degree per element index.
    Returns (members, units, member_ids, unit_ids); the id lists are None
    unless collect is set.
    """
    table = [0] * n
    digits = [0] * n
    seen = [0] * n
    members = 0
    units = 0
    member_ids = [] if collect else None
    unit_ids = [] if collect else None
    top = q - 1
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
    return members, units, member_ids, unit_ids
