"""Brute-force oracles, independent of the package implementation.

Everything here goes straight from the definitions to nested loops over
the raw sum table, so expected values in the tests are computed by code
that shares nothing with the paths under test.
"""


def leq(t, a, b):
    return any(t.sums.get((a, c)) == b for c in range(t.n))


def below(t, e):
    return [x for x in range(t.n) if leq(t, x, e)]


def common_lower(t, a, b):
    return [x for x in range(t.n) if leq(t, x, a) and leq(t, x, b)]


def meet(t, a, b):
    lows = common_lower(t, a, b)
    tops = [m for m in lows if all(leq(t, x, m) for x in lows)]
    return tops[0] if tops else None


def join(t, a, b):
    ups = [x for x in range(t.n) if leq(t, a, x) and leq(t, b, x)]
    bots = [m for m in ups if all(leq(t, m, x) for x in ups)]
    return bots[0] if bots else None


def sup(t, elems):
    elems = list(elems)
    ups = [x for x in range(t.n) if all(leq(t, e, x) for e in elems)]
    bots = [m for m in ups if all(leq(t, m, x) for x in ups)]
    return bots[0] if bots else None


def right_complements(t, x):
    return [d for d in range(t.n) if t.sums.get((x, d)) == t.one]


def left_complements(t, x):
    return [e for e in range(t.n) if t.sums.get((e, x)) == t.one]


def atoms(t):
    return {
        a for a in range(t.n)
        if a != t.zero and all(x in (t.zero, a) for x in below(t, a))
    }


def central_upper_bounds(t, centrals, e):
    return [c for c in centrals if leq(t, e, c)]


def is_isomorphism_map(s, t, mapping):
    if sorted(mapping) != list(range(t.n)) or mapping[s.one] != t.one:
        return False
    for a in range(s.n):
        for b in range(s.n):
            v = s.sums.get((a, b))
            w = t.sums.get((mapping[a], mapping[b]))
            if (v is None) != (w is None):
                return False
            if v is not None and mapping[v] != w:
                return False
    return True


def exists_isomorphism(s, t):
    """Exhaustive search over all bijections (test scale only)."""
    from itertools import permutations

    if s.n != t.n:
        return False
    return any(is_isomorphism_map(s, t, perm) for perm in permutations(range(t.n)))
