"""Element and algebra property classes that feed type-determining sets.

Covers atoms and polyatoms, boolean/subcentral/monad elements,
commutativity and weak-commutativity, lattice order, the Riesz
interpolation/decomposition hierarchy, and a registry mapping class names
to the TD sets they induce.

Several predicates are decided through more than one characterization
with agreement asserted; a disagreement is an InvariantViolation because
the equivalences hold in every valid algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .center import center
from .core import canonicalize, derive_order, direct_product, interval_algebra
from .errors import DomainError, InvariantViolation
from .tdsets import TDSet, as_tdset, closure_sup, is_std, is_td, std_generated


def atoms(t):
    """The minimal nonzero elements."""
    p = derive_order(t)
    out = []
    for a in range(t.n):
        if a == t.zero:
            continue
        if all(x == t.zero or x == a for x in p.below(a)):
            out.append(a)
    return frozenset(out)


def polyatoms(t):
    """[A]: sums of disjointly dominated families of atoms, as an STD set.

    Computed directly as the sup-closure of the atoms and cross-checked
    against the generic STD generation from the atom set.
    """
    a = atoms(t)
    direct = closure_sup(t, a)
    generated = std_generated(t, a, name="polyatoms")
    if generated.members != direct:
        raise InvariantViolation("sup-closure of atoms differs from their STD closure")
    return generated


def is_atomic(t):
    """Every nonzero element dominates an atom (vacuously true when n=1)."""
    p = derive_order(t)
    a = atoms(t)
    return all(
        any(x in a for x in p.below(e))
        for e in range(t.n) if e != t.zero)


def is_atom_free(t):
    return not atoms(t)


def is_boolean_element(t, b):
    """The interval below b is a Boolean algebra: it equals its own center."""
    sub = interval_algebra(t, b).table
    return len(center(sub).members) == sub.n


def is_subcentral(t, p_elem):
    """Every central element of the interval below p is a meet p ^ c."""
    p = derive_order(t)
    iv = interval_algebra(t, p_elem)
    cs = center(t)
    for d_new in center(iv.table).members:
        d = iv.embed[d_new]
        if not any(p.meet(p_elem, c) == d for c in cs.members):
            return False
    return True


def is_monad(t, h):
    """Decide e = h ^ cover(e) for all e <= h, via five equivalent tests.

    The five characterizations (the defining meet identity, subcentral
    plus boolean, cover-injectivity at the top, interval complements
    under the cover complement, and sum existence by cover disjointness)
    are all evaluated; any disagreement raises InvariantViolation.
    """
    p = derive_order(t)
    cs = center(t)
    below = p.below(h)

    def meets_cover(e):
        m = p.meet(h, cs.cover[e])
        if m is None:
            raise InvariantViolation("meet with a central cover missing")
        return m

    via_definition = all(meets_cover(e) == e for e in below)
    via_subcentral_boolean = is_subcentral(t, h) and is_boolean_element(t, h)
    via_top = all(cs.cover[e] != cs.cover[h] or e == h for e in below)
    via_complements = True
    for e in below:
        comp_cover = cs.complement[cs.cover[e]]
        right = p.right_residual(e, h)   # e + right = h
        left = p.left_residual(e, h)     # left + e = h
        if not (p.leq(right, comp_cover) and p.leq(left, comp_cover)):
            via_complements = False
            break
    via_sums = True
    for e in below:
        for f in below:
            v = t.sums.get((e, f))
            exists_in_interval = v is not None and p.leq(v, h)
            disjoint_covers = cs.meet[cs.cover[e], cs.cover[f]] == t.zero
            if exists_in_interval != disjoint_covers:
                via_sums = False
                break
        if not via_sums:
            break

    verdicts = (via_definition, via_subcentral_boolean, via_top,
                via_complements, via_sums)
    if len(set(verdicts)) != 1:
        raise InvariantViolation(
            f"monad characterizations disagree on {t.label_of(h)} in "
            f"{t.display()}: {verdicts}")
    return via_definition


def subcentral_elements(t):
    return frozenset(e for e in range(t.n) if is_subcentral(t, e))


def boolean_elements(t):
    return frozenset(e for e in range(t.n) if is_boolean_element(t, e))


def monads(t):
    """All monads; always the intersection of subcentral and boolean."""
    h = frozenset(e for e in range(t.n) if is_monad(t, e))
    if h != subcentral_elements(t) & boolean_elements(t):
        raise InvariantViolation("monads differ from subcentral-and-boolean elements")
    return h


def is_commutative(t):
    """a+b = b+a whenever either side exists."""
    return all(t.sums.get((b, a)) == v for (a, b), v in t.sums.items())


def is_weak_commutative(t):
    """a+b exists iff b+a exists; equivalently both complements coincide."""
    p = derive_order(t)
    by_existence = all((b, a) in t.sums for (a, b) in t.sums)
    by_complements = all(
        p.right_complement(x) == p.left_complement(x) for x in range(t.n))
    if by_existence != by_complements:
        raise InvariantViolation(
            f"weak-commutativity criteria disagree on {t.display()}")
    return by_existence


def is_lattice_ordered(t):
    p = derive_order(t)
    return all(
        p.meet(a, b) is not None and p.join(a, b) is not None
        for a in range(t.n) for b in range(t.n))


def _commute(t, x, y):
    xy = t.sums.get((x, y))
    yx = t.sums.get((y, x))
    return (xy is None) == (yx is None) and (xy is None or xy == yx)


@dataclass(frozen=True)
class RieszFlags:
    rip: bool
    rdp0: bool
    rdp: bool
    rdp1: bool
    rdp2: bool

    def as_dict(self):
        return {"rip": self.rip, "rdp0": self.rdp0, "rdp": self.rdp,
                "rdp1": self.rdp1, "rdp2": self.rdp2}


def _has_rip(t, p):
    n = t.n
    for a1 in range(n):
        for a2 in range(n):
            uppers = p.up[a1] & p.up[a2]
            for b1 in range(n):
                if not uppers >> b1 & 1:
                    continue
                for b2 in range(n):
                    if not uppers >> b2 & 1:
                        continue
                    between = uppers & p.down[b1] & p.down[b2]
                    if not between:
                        return False
    return True


def _has_rdp0(t, p):
    for (b1, b2), total in t.sums.items():
        for a in p.below(total):
            ok = any(
                t.sums.get((d1, d2)) == a
                for d1 in p.below(b1) for d2 in p.below(b2))
            if not ok:
                return False
    return True


def _rdp_splittings(t, p, a1, a2, b1, b2):
    """Candidate quadruples for a common refinement of a1+a2 = b1+b2.

    d1 determines the rest: d2 and d3 are the residuals completing a1 and
    b1, and d4 must complete both a2 and b2.  Cancellativity makes this
    scan exhaustive.
    """
    for d1 in range(t.n):
        if not (p.leq(d1, a1) and p.leq(d1, b1)):
            continue
        d2 = p.right_residual(d1, a1)
        d3 = p.right_residual(d1, b1)
        if not p.leq(d3, a2):
            continue
        d4 = p.right_residual(d3, a2)
        if t.sums.get((d2, d4)) == b2:
            yield d1, d2, d3, d4


def _has_rdp(t, p):
    for (a1, a2), total in t.sums.items():
        for (b1, b2), total2 in t.sums.items():
            if total != total2:
                continue
            if not any(True for _ in _rdp_splittings(t, p, a1, a2, b1, b2)):
                return False
    return True


def _has_rdp1(t, p):
    for (a1, a2), total in t.sums.items():
        for (b1, b2), total2 in t.sums.items():
            if total != total2:
                continue
            good = False
            for _, d2, d3, _ in _rdp_splittings(t, p, a1, a2, b1, b2):
                if all(_commute(t, x, y) for x in p.below(d2) for y in p.below(d3)):
                    good = True
                    break
            if not good:
                return False
    return True


def _has_rdp2(t, p):
    for (a1, a2), total in t.sums.items():
        for (b1, b2), total2 in t.sums.items():
            if total != total2:
                continue
            good = any(
                p.disjoint(d2, d3)
                for _, d2, d3, _ in _rdp_splittings(t, p, a1, a2, b1, b2))
            if not good:
                return False
    return True


def riesz_properties(t):
    """The five interpolation/decomposition flags, by exhaustive search.

    Cross-checked: the strong decomposition property must coincide with
    lattice order combined with the weak one.
    """
    p = derive_order(t)
    flags = RieszFlags(
        rip=_has_rip(t, p),
        rdp0=_has_rdp0(t, p),
        rdp=_has_rdp(t, p),
        rdp1=_has_rdp1(t, p),
        rdp2=_has_rdp2(t, p),
    )
    if flags.rdp2 != (is_lattice_ordered(t) and flags.rdp0):
        raise InvariantViolation(
            f"rdp2 differs from lattice+rdp0 on {t.display()}")
    return flags


@dataclass(frozen=True)
class ClassSpec:
    """Registry entry: how a named class induces an element set.

    ``interval_predicate`` decides membership of E[0,e] in the class; a
    ``builder`` constructs the element set directly when the class is not
    an interval property.  ``strong`` records whether the induced set is
    expected to be STD rather than merely TD.
    """

    name: str
    strong: bool
    doc: str
    interval_predicate: callable = None
    builder: callable = None

    def element_set(self, t):
        if self.builder is not None:
            return frozenset(self.builder(t))
        return frozenset(
            e for e in range(t.n)
            if self.interval_predicate(interval_algebra(t, e).table))


def _always(_t):
    return True


CLASS_REGISTRY = {
    "atoms": ClassSpec(
        "atoms", True, "sums of disjointly dominated atom families",
        builder=lambda t: polyatoms(t).members),
    "polyatoms": ClassSpec(
        "polyatoms", True, "sums of disjointly dominated atom families",
        builder=lambda t: polyatoms(t).members),
    "boolean": ClassSpec(
        "boolean", True, "elements with a Boolean interval",
        builder=boolean_elements),
    "subcentral": ClassSpec(
        "subcentral", False, "interval centers realized by global meets",
        builder=subcentral_elements),
    "monad": ClassSpec(
        "monad", True, "elements whose subelements are meets with their covers",
        builder=monads),
    "commutative": ClassSpec(
        "commutative", True, "commutative intervals", interval_predicate=is_commutative),
    "weakcomm": ClassSpec(
        "weakcomm", False, "sum existence is symmetric on the interval",
        interval_predicate=is_weak_commutative),
    "lattice": ClassSpec(
        "lattice", True, "lattice-ordered intervals", interval_predicate=is_lattice_ordered),
    "atomic": ClassSpec(
        "atomic", True, "intervals whose nonzero elements dominate atoms",
        interval_predicate=is_atomic),
    "rip": ClassSpec(
        "rip", True, "interpolation on the interval",
        interval_predicate=lambda s: riesz_properties(s).rip),
    "rdp0": ClassSpec(
        "rdp0", True, "weak decomposition on the interval",
        interval_predicate=lambda s: riesz_properties(s).rdp0),
    "rdp": ClassSpec(
        "rdp", True, "decomposition on the interval",
        interval_predicate=lambda s: riesz_properties(s).rdp),
    "rdp1": ClassSpec(
        "rdp1", True, "commutational decomposition on the interval",
        interval_predicate=lambda s: riesz_properties(s).rdp1),
    "rdp2": ClassSpec(
        "rdp2", True, "strong decomposition on the interval",
        interval_predicate=lambda s: riesz_properties(s).rdp2),
    # finite-scale collapses, kept as registry aliases with a note:
    # every finite algebra is archimedean and monotone sigma-complete,
    # sigma-completeness reduces to lattice order, and countable
    # interpolation reduces to plain interpolation.
    "archimedean": ClassSpec(
        "archimedean", True, "alias: finite algebras are always archimedean",
        interval_predicate=_always),
    "monotone-sigma-complete": ClassSpec(
        "monotone-sigma-complete", True,
        "alias: finite chains always have suprema", interval_predicate=_always),
    "sigma-complete": ClassSpec(
        "sigma-complete", True, "alias of lattice order at finite scale",
        interval_predicate=is_lattice_ordered),
    "sigma-rip": ClassSpec(
        "sigma-rip", True, "alias of interpolation at finite scale",
        interval_predicate=lambda s: riesz_properties(s).rip),
}


def td_from_class(t, class_name):
    """The element set induced by a registry class, as a verified TDSet.

    The induced set must come out TD (and STD when the registry says so);
    a failure would contradict the closure theory for type-classes and is
    therefore an InvariantViolation, not a user error.
    """
    spec = CLASS_REGISTRY.get(class_name)
    if spec is None:
        raise DomainError(f"unknown class {class_name!r}; known: "
                          + ", ".join(sorted(CLASS_REGISTRY)))
    members = spec.element_set(t)
    if not is_td(t, members):
        raise InvariantViolation(
            f"class {class_name} induced a non-TD set on {t.display()}")
    if spec.strong and not is_std(t, members):
        raise InvariantViolation(
            f"class {class_name} induced a non-STD set on {t.display()}")
    return as_tdset(t, members, name=class_name)


def verify_type_class(class_name, corpus, strong=None):
    """Desk-scale check of the closure laws of a named interval class.

    For every corpus member inside the class: its central intervals (all
    intervals when checking the strong form) stay inside, binary products
    of members stay inside, and membership is isomorphism-invariant
    (checked through canonical relabeling).  ``strong=None`` checks the
    level the registry claims.
    """
    spec = CLASS_REGISTRY.get(class_name)
    if spec is None:
        raise DomainError(f"unknown class {class_name!r}")
    if spec.interval_predicate is None:
        raise DomainError(f"class {class_name} is not an interval class")
    pred = spec.interval_predicate
    if strong is None:
        strong = spec.strong
    members = [t for t in corpus if pred(t)]
    for t in members:
        scope = range(t.n) if strong else center(t).members
        for h in scope:
            if not pred(interval_algebra(t, h).table):
                return False
        if pred(canonicalize(t)) != pred(t):
            return False
    for a in members:
        for b in members:
            if not pred(direct_product([a, b]).table):
                return False
    return True


_ELEMENT_FLAGS = ("atom", "polyatom", "boolean", "subcentral", "monad",
                  "commutative", "weakcomm", "lattice",
                  "rip", "rdp0", "rdp", "rdp1", "rdp2")
_ALGEBRA_FLAGS = ("atomic", "atom-free", "lattice", "commutative",
                  "weakcomm", "rip", "rdp0", "rdp", "rdp1", "rdp2")


@dataclass(frozen=True)
class ClassProfile:
    """Per-element and whole-algebra class flags."""

    table: object
    element: dict
    algebra: dict

    @staticmethod
    def element_flag_names():
        return _ELEMENT_FLAGS

    @staticmethod
    def algebra_flag_names():
        return _ALGEBRA_FLAGS


def class_profile(t):
    a = atoms(t)
    poly = polyatoms(t).members
    interval_tables = [interval_algebra(t, e).table for e in range(t.n)]
    riesz_per = [riesz_properties(s) for s in interval_tables]
    element = {
        "atom": tuple(e in a for e in range(t.n)),
        "polyatom": tuple(e in poly for e in range(t.n)),
        "boolean": tuple(is_boolean_element(t, e) for e in range(t.n)),
        "subcentral": tuple(is_subcentral(t, e) for e in range(t.n)),
        "monad": tuple(is_monad(t, e) for e in range(t.n)),
        "commutative": tuple(is_commutative(s) for s in interval_tables),
        "weakcomm": tuple(is_weak_commutative(s) for s in interval_tables),
        "lattice": tuple(is_lattice_ordered(s) for s in interval_tables),
        "rip": tuple(f.rip for f in riesz_per),
        "rdp0": tuple(f.rdp0 for f in riesz_per),
        "rdp": tuple(f.rdp for f in riesz_per),
        "rdp1": tuple(f.rdp1 for f in riesz_per),
        "rdp2": tuple(f.rdp2 for f in riesz_per),
    }
    flags = riesz_properties(t)
    algebra = {
        "atomic": is_atomic(t),
        "atom-free": is_atom_free(t),
        "lattice": is_lattice_ordered(t),
        "commutative": is_commutative(t),
        "weakcomm": is_weak_commutative(t),
        "rip": flags.rip,
        "rdp0": flags.rdp0,
        "rdp": flags.rdp,
        "rdp1": flags.rdp1,
        "rdp2": flags.rdp2,
    }
    return ClassProfile(t, element, algebra)
