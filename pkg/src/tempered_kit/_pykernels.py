"""Pure-Python reference versions of the hot kernels.

Points are 0-based. ``up[i]`` is the bitmask of points strictly above ``i``.
A permutation is a tuple ``perm`` with ``perm[p]`` the point at position
``p``.
"""


def _down_masks(n, up):
    down = [0] * n
    for i in range(n):
        m = up[i]
        for j in range(n):
            if m >> j & 1:
                down[j] |= 1 << i
    return down


def linear_extensions(n, up):
    """All linear extensions, in lexicographic order of the permutations."""
    down = _down_masks(n, up)
    out = []
    perm = [0] * n

    def rec(k, placed):
        if k == n:
            out.append(tuple(perm))
            return
        for i in range(n):
            if not placed >> i & 1 and down[i] & ~placed == 0:
                perm[k] = i
                rec(k + 1, placed | 1 << i)

    rec(0, 0)
    return out


def order_code(n, up, perm):
    """The strict-order bit string a_{1,2} ... a_{n-1,n} read as an integer."""
    a = 0
    for p in range(n - 1):
        row = up[perm[p]]
        for q in range(p + 1, n):
            a = a << 1 | (row >> perm[q] & 1)
    return a


def temperature_code(n, tau, perm):
    t = 0
    for p in range(n):
        t = t << 1 | (tau >> perm[p] & 1)
    return t


def minimal_order_code(n, up):
    """Return ``(a_min, perms)`` where ``perms`` attain ``a_min``."""
    best = None
    perms = []
    for perm in linear_extensions(n, up):
        a = order_code(n, up, perm)
        if best is None or a < best:
            best = a
            perms = [perm]
        elif a == best:
            perms.append(perm)
    return best, perms


def minimal_temperature_codes(n, perms):
    """For every temperature mask 0..2**n-1, the least code over ``perms``."""
    out = []
    for tau in range(1 << n):
        out.append(min(temperature_code(n, tau, perm) for perm in perms))
    return out
