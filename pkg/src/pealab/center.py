"""Central elements, the Boolean center, and central covers.

An element c is central when the whole algebra splits as the direct
product of the intervals below c and below its complement.  Centrality is
decided twice here, through independent routes that must agree:

* the intrinsic three-condition test (every element splits across c and
  c~, sums below c stay below c, and elements under c commute with
  elements under c~), and
* the explicit splitting map x -> (x ^ c, x ^ c~), built from partial
  meets and verified to be an isomorphism onto the product of intervals.

A disagreement raises InvariantViolation: the equivalence of the two
routes is a theorem, so implementing both turns it into a standing test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from weakref import WeakKeyDictionary

from .core import PeaTable, derive_order, interval_algebra
from .errors import DomainError, InvariantViolation


@dataclass(frozen=True)
class CentralityCheck:
    """Verdict for one element, with a certificate or a counterexample.

    For central elements ``splitting`` lists (x^c, x^c~) per element x.
    Otherwise ``clause`` names the failed condition and ``witness`` the
    elements exhibiting the failure.
    """

    element: int
    central: bool
    splitting: tuple = None
    clause: str = None
    witness: tuple = None


def _intrinsic_check(t, p, c):
    """The three-condition route; returns (ok, clause, witness)."""
    n = t.n
    ct = p.right_complement(c)
    below_c = p.below(c)
    below_ct = p.below(ct)
    in_c = set(below_c)
    in_ct = set(below_ct)
    # (1) every a splits as a1 + a2 with a1 <= c, a2 <= c~
    for a in range(n):
        if not any(t.sums.get((a1, a2)) == a for a1 in below_c for a2 in below_ct):
            return False, "split", (a,)
    # (2) sums of elements below c stay below c; same below c~
    for (x, y), v in t.sums.items():
        if x in in_c and y in in_c and v not in in_c:
            return False, "closed-below", (x, y)
        if x in in_ct and y in in_ct and v not in in_ct:
            return False, "closed-above", (x, y)
    # (3) x <= c and y <= c~ commute (both sums defined, equal values)
    for x in below_c:
        for y in below_ct:
            xy = t.sums.get((x, y))
            yx = t.sums.get((y, x))
            if xy is None or yx is None or xy != yx:
                return False, "commute", (x, y)
    return True, None, None


def _splitting_check(t, p, c):
    """The splitting-map route; returns (ok, pairs or None)."""
    n = t.n
    ct = p.right_complement(c)
    pairs = []
    for x in range(n):
        m1 = p.meet(x, c)
        m2 = p.meet(x, ct)
        if m1 is None or m2 is None:
            return False, None
        pairs.append((m1, m2))
    # f(c) = (c, 0) and every x must recombine as m1 + m2
    if pairs[c] != (c, t.zero):
        return False, None
    for x in range(n):
        m1, m2 = pairs[x]
        if t.sums.get((m1, m2)) != x:
            return False, None
    # bijection onto the product of the two intervals
    lo = interval_algebra(t, c)
    hi = interval_algebra(t, ct)
    if len(set(pairs)) != n or lo.table.n * hi.table.n != n:
        return False, None
    # sums must exist and agree on both sides of the map
    for x in range(n):
        for y in range(n):
            x1, x2 = pairs[x]
            y1, y2 = pairs[y]
            s1 = t.sums.get((x1, y1))
            s2 = t.sums.get((x2, y2))
            image_defined = (s1 is not None and p.leq(s1, c)
                             and s2 is not None and p.leq(s2, ct))
            v = t.sums.get((x, y))
            if (v is not None) != image_defined:
                return False, None
            if v is not None and pairs[v] != (s1, s2):
                return False, None
    return True, tuple(pairs)


def is_central(t, c):
    """Decide centrality of c, cross-checking the two routes."""
    p = derive_order(t)
    if not 0 <= c < t.n:
        raise DomainError(f"no element {c} in {t.display()}")
    ok_a, clause, witness = _intrinsic_check(t, p, c)
    ok_b, pairs = _splitting_check(t, p, c)
    if ok_a != ok_b:
        raise InvariantViolation(
            f"centrality routes disagree on {t.label_of(c)} in {t.display()}: "
            f"intrinsic={ok_a} splitting={ok_b}")
    if ok_a:
        return CentralityCheck(c, True, splitting=pairs)
    return CentralityCheck(c, False, clause=clause, witness=witness)


@dataclass(frozen=True, eq=False)
class CentralStructure:
    """The center as a Boolean algebra plus the central cover map.

    ``members`` lists the central elements ascending; meet, join and
    complement are total on members.  ``cover[e]`` is the least central
    element above e.
    """

    table: PeaTable = None
    members: tuple = ()
    meet: dict = None
    join: dict = None
    complement: dict = None
    cover: tuple = ()
    checks: tuple = ()

    def is_central(self, e):
        return e in self.complement


def _verify_boolean_laws(t, members, meet, join, comp):
    zero, one = t.zero, t.one
    for a in members:
        if meet[a, a] != a or join[a, a] != a:
            return f"idempotence fails at {a}"
        if meet[a, one] != a or join[a, zero] != a:
            return f"bounds fail at {a}"
        if meet[a, comp[a]] != zero or join[a, comp[a]] != one:
            return f"complementation fails at {a}"
        if comp[comp[a]] != a:
            return f"involution fails at {a}"
        for b in members:
            if meet[a, b] != meet[b, a] or join[a, b] != join[b, a]:
                return f"commutativity fails at {a},{b}"
            if meet[a, join[a, b]] != a or join[a, meet[a, b]] != a:
                return f"absorption fails at {a},{b}"
            if comp[meet[a, b]] != join[comp[a], comp[b]]:
                return f"De Morgan fails at {a},{b}"
            for c in members:
                if meet[meet[a, b], c] != meet[a, meet[b, c]]:
                    return f"meet associativity fails at {a},{b},{c}"
                if join[join[a, b], c] != join[a, join[b, c]]:
                    return f"join associativity fails at {a},{b},{c}"
                if meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]:
                    return f"distributivity fails at {a},{b},{c}"
                if join[a, meet[b, c]] != meet[join[a, b], join[a, c]]:
                    return f"dual distributivity fails at {a},{b},{c}"
    return None


_CENTERS = WeakKeyDictionary()


def center(t):
    """Compute (and cache) the full central structure of the algebra.

    The center always contains zero and one and carries Boolean-algebra
    operations; all laws are verified exhaustively, and any failure is an
    InvariantViolation since no valid input can produce one.
    """
    got = _CENTERS.get(t)
    if got is not None:
        return got
    p = derive_order(t)
    checks = tuple(is_central(t, e) for e in range(t.n))
    members = tuple(e for e in range(t.n) if checks[e].central)
    if t.zero not in members or t.one not in members:
        raise InvariantViolation(f"center of {t.display()} misses a bound")
    meet = {}
    join = {}
    comp = {}
    mset = set(members)
    for c in members:
        rc = p.right_complement(c)
        lc = p.left_complement(c)
        if rc != lc:
            raise InvariantViolation(
                f"central {t.label_of(c)} has distinct one-sided complements")
        if rc not in mset:
            raise InvariantViolation(f"complement of central {t.label_of(c)} not central")
        comp[c] = rc
        for d in members:
            m = p.meet(c, d)
            j = p.join(c, d)
            if m is None or j is None:
                raise InvariantViolation(
                    f"meet/join of central {t.label_of(c)},{t.label_of(d)} missing")
            if m not in mset or j not in mset:
                raise InvariantViolation(
                    f"center not closed under meet/join at {t.label_of(c)},{t.label_of(d)}")
            meet[c, d] = m
            join[c, d] = j
    law_failure = _verify_boolean_laws(t, members, meet, join, comp)
    if law_failure is not None:
        raise InvariantViolation(f"Boolean law fails on center of {t.display()}: {law_failure}")
    cover = []
    for e in range(t.n):
        uppers = [c for c in members if p.leq(e, c)]
        acc = t.one
        for c in uppers:
            acc = meet[acc, c]
        # acc is again a central upper bound, hence the minimum
        if not p.leq(e, acc) or any(not p.leq(acc, c) for c in uppers):
            raise InvariantViolation(f"no least central element above {t.label_of(e)}")
        cover.append(acc)
    got = CentralStructure(t, members, meet, join, comp, tuple(cover), checks)
    _CENTERS[t] = got
    return got


def projection(t, c, x):
    """x ^ c for central c: the image of x under the summand projection."""
    cs = center(t)
    if not cs.is_central(c):
        raise DomainError(f"{t.label_of(c)} is not central in {t.display()}")
    m = derive_order(t).meet(x, c)
    if m is None:
        raise InvariantViolation(
            f"meet of {t.label_of(x)} with central {t.label_of(c)} missing")
    return m


def central_cover(t, e):
    """The least central element above e."""
    if not 0 <= e < t.n:
        raise DomainError(f"no element {e} in {t.display()}")
    return center(t).cover[e]


def verify_hull(t):
    """Check the hull laws for the central cover map.

    True iff cover(0)=0, e <= cover(e), cover(e ^ cover(f)) =
    cover(e) ^ cover(f) for all e, f, and the map is onto the center.
    """
    p = derive_order(t)
    cs = center(t)
    g = cs.cover
    if g[t.zero] != t.zero:
        return False
    if any(not p.leq(e, g[e]) for e in range(t.n)):
        return False
    for e in range(t.n):
        for f in range(t.n):
            m = p.meet(e, g[f])
            if m is None:
                raise InvariantViolation(
                    f"meet of {t.label_of(e)} with central cover of {t.label_of(f)} missing")
            if g[m] != cs.meet[g[e], g[f]]:
                return False
    return set(g) == set(cs.members)


def gamma_orthogonal(t, family):
    """True iff the family is dominated by pairwise disjoint centrals.

    Decided through central covers: the covers are the least dominating
    central elements, so a disjoint dominating family exists iff the
    covers themselves are pairwise disjoint.
    """
    cs = center(t)
    covers = [cs.cover[e] for e in family]
    for i in range(len(covers)):
        for j in range(i + 1, len(covers)):
            if cs.meet[covers[i], covers[j]] != t.zero:
                return False
    return True


def orthosum(t, family):
    """Sum of a family dominated by pairwise disjoint central elements.

    The result equals the supremum of the family and does not depend on
    the summation order; both facts are re-verified on every call.
    """
    family = list(family)
    if not gamma_orthogonal(t, family):
        raise DomainError("family is not dominated by disjoint central elements")
    p = derive_order(t)

    def fold(seq):
        acc = t.zero
        for e in seq:
            nxt = t.sums.get((acc, e))
            if nxt is None:
                raise InvariantViolation("orthosum of a disjointly dominated family missing")
            acc = nxt
        return acc

    total = fold(family)
    if len(family) <= 4:
        others = {fold(perm) for perm in itertools.permutations(family)}
    else:
        others = {fold(list(reversed(family)))}
    if others != {total}:
        raise InvariantViolation("orthosum depends on summand order")
    s = p.sup(family) if family else t.zero
    if s != total:
        raise InvariantViolation("orthosum differs from the supremum")
    return total
