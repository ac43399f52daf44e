"""Closure operators, type-determining sets, and type covers.

Four closure operators act on subsets Q of the carrier:

* sup-closure [Q]: all sums of families of elements of Q dominated by
  pairwise disjoint central elements (iterated to a fixpoint, which makes
  idempotence structural); [empty] = {0}.
* gamma-closure: all q ^ c with q in Q and c central.
* down-closure: the union of the intervals [0, q].
* the disjointness commutant Q' = {e : q ^ e = 0 for all q in Q}, where
  "q ^ e = 0" reads "zero is the only common lower bound", so elements
  without a meet are handled uniformly.

K is type-determining (TD) when fixed by sup- and gamma-closure, and
strongly type-determining (STD) when fixed by sup- and down-closure.
Every TD set has a type cover: the central element whose central interval
is exactly the set of covers of members of K.
"""

from __future__ import annotations

from dataclasses import dataclass

from .center import center
from .core import derive_order
from .errors import DomainError, InvariantViolation


def _as_members(t, q):
    members = frozenset(getattr(q, "members", q))
    if any(not 0 <= e < t.n for e in members):
        raise DomainError(f"set {sorted(members)} not inside the carrier of {t.display()}")
    return members


def _disjoint_subsets(t, elems):
    """All subsets of elems whose central covers are pairwise disjoint."""
    cs = center(t)
    cover = cs.cover
    meet = cs.meet
    elems = sorted(elems)
    out = []

    def extend(start, chosen):
        out.append(tuple(chosen))
        for k in range(start, len(elems)):
            e = elems[k]
            if all(meet[cover[e], cover[f]] == t.zero for f in chosen):
                chosen.append(e)
                extend(k + 1, chosen)
                chosen.pop()

    extend(0, [])
    return out


def closure_sup(t, q):
    """[Q]: sums of disjointly dominated subfamilies, iterated to a fixpoint."""
    members = _as_members(t, q)
    current = set(members) | {t.zero}
    while True:
        added = set()
        for fam in _disjoint_subsets(t, current):
            acc = t.zero
            for e in fam:
                nxt = t.sums.get((acc, e))
                if nxt is None:
                    raise InvariantViolation("sum of a disjointly dominated family missing")
                acc = nxt
            if acc not in current:
                added.add(acc)
        if not added:
            return frozenset(current)
        current |= added


def closure_gamma(t, q):
    """Q^gamma: all meets of members with central elements."""
    members = _as_members(t, q)
    p = derive_order(t)
    cs = center(t)
    out = set()
    for e in members:
        for c in cs.members:
            m = p.meet(e, c)
            if m is None:
                raise InvariantViolation(
                    f"meet of {t.label_of(e)} with central {t.label_of(c)} missing")
            out.add(m)
    return frozenset(out)


def closure_down(t, q):
    """Q-down: the union of the intervals below members of Q."""
    members = _as_members(t, q)
    p = derive_order(t)
    out = set()
    for e in members:
        out.update(p.below(e))
    return frozenset(out)


def commutant(t, q):
    """Q': elements whose only common lower bound with every member is 0."""
    members = _as_members(t, q)
    p = derive_order(t)
    return frozenset(
        e for e in range(t.n) if all(p.disjoint(e, x) for x in members))


def bicommutant(t, q):
    return commutant(t, commutant(t, q))


def is_td(t, k):
    """K is TD iff K = [K] = K^gamma."""
    members = _as_members(t, k)
    return members == closure_sup(t, members) and members == closure_gamma(t, members)


def is_std(t, k):
    """K is STD iff K = [K] = K-down."""
    members = _as_members(t, k)
    return members == closure_sup(t, members) and members == closure_down(t, members)


@dataclass(frozen=True)
class TDSet:
    """A type-determining set with its covers cached at construction."""

    members: frozenset
    td: bool
    std: bool
    type_cover: int
    restricted_type_cover: int
    name: str = None

    def __contains__(self, e):
        return e in self.members

    def sorted(self):
        return sorted(self.members)


def type_cover(t, k):
    """The central element whose central interval equals the cover set of K.

    Returns (c_K, c_{K n Gamma}): the type cover and the restricted type
    cover.  Raises DomainError unless K is TD.
    """
    members = _as_members(t, k)
    if not is_td(t, members):
        raise DomainError(f"{sorted(members)} is not type-determining")
    cs = center(t)
    p = derive_order(t)
    gamma_k = {cs.cover[e] for e in members}
    c_k = _max_of(t, p, gamma_k, "cover set")
    if gamma_k != {c for c in cs.members if p.leq(c, c_k)}:
        raise InvariantViolation("cover set of a TD set is not a central interval")
    restricted = members & set(cs.members)
    # K n gammaK must equal K n Gamma(E); covers of central members are themselves
    if members & gamma_k != restricted:
        raise InvariantViolation("K n gammaK differs from the central members of K")
    c_r = _max_of(t, p, restricted | {t.zero}, "central member set")
    if restricted | {t.zero} != {c for c in cs.members if p.leq(c, c_r)}:
        raise InvariantViolation("central members of a TD set are not a central interval")
    return c_k, c_r


def _max_of(t, p, elems, what):
    for m in elems:
        if all(p.leq(e, m) for e in elems):
            return m
    raise InvariantViolation(f"{what} has no greatest element in {t.display()}")


def td_generated(t, q, name=None):
    """The smallest TD set containing Q: sup-closure of the gamma-closure."""
    members = closure_sup(t, closure_gamma(t, q))
    if not is_td(t, members):
        raise InvariantViolation("generated set is not TD")
    c_k, c_r = type_cover(t, members)
    return TDSet(members, True, is_std(t, members), c_k, c_r, name)


def std_generated(t, q, name=None):
    """The smallest STD set containing Q: sup-closure of the down-closure."""
    members = closure_sup(t, closure_down(t, q))
    if not (is_td(t, members) and is_std(t, members)):
        raise InvariantViolation("generated set is not STD")
    c_k, c_r = type_cover(t, members)
    return TDSet(members, True, True, c_k, c_r, name)


def as_tdset(t, k, name=None):
    """Wrap an existing TD set of elements, verifying and caching covers."""
    members = _as_members(t, k)
    c_k, c_r = type_cover(t, members)  # DomainError when not TD
    return TDSet(members, True, is_std(t, members), c_k, c_r, name)


@dataclass(frozen=True)
class CentralClassification:
    """The four type flags of a central element relative to a TD set."""

    element: int
    type_k: bool
    locally_type_k: bool
    purely_non_k: bool
    properly_non_k: bool


def classify_central(t, k, c):
    """Classify central c against TD set K, each flag decided twice.

    The literal membership conditions and the cover inequalities must
    agree flag by flag; the local flag is additionally cross-checked
    against the summand condition (every nonzero central element below c
    dominates a nonzero member of K).
    """
    cs = center(t)
    if not cs.is_central(c):
        raise DomainError(f"{t.label_of(c)} is not central in {t.display()}")
    k = k if isinstance(k, TDSet) else as_tdset(t, k)
    p = derive_order(t)
    members = k.members
    c_k, c_r = k.type_cover, k.restricted_type_cover
    comp = cs.complement

    type_literal = c in members
    type_bound = p.leq(c, c_r)
    local_literal = c in {cs.cover[e] for e in members}
    local_bound = p.leq(c, c_k)
    pure_literal = all(not p.leq(e, c) for e in members if e != t.zero)
    pure_bound = p.leq(c, comp[c_k])
    proper_literal = all(
        not p.leq(e, c) for e in members if e != t.zero and cs.is_central(e))
    proper_bound = p.leq(c, comp[c_r])
    local_summands = all(
        any(e != t.zero and p.leq(e, d) for e in members)
        for d in cs.members if d != t.zero and p.leq(d, c))

    for flag, lit, bound in (("type", type_literal, type_bound),
                             ("locally-type", local_literal, local_bound),
                             ("purely-non", pure_literal, pure_bound),
                             ("properly-non", proper_literal, proper_bound)):
        if lit != bound:
            raise InvariantViolation(
                f"{flag} flag of {t.label_of(c)} disagrees between the literal "
                f"condition ({lit}) and the cover inequality ({bound})")
    if local_summands != local_literal:
        raise InvariantViolation(
            f"summand condition for {t.label_of(c)} disagrees with the local flag")
    return CentralClassification(c, type_literal, local_literal, pure_literal, proper_literal)
