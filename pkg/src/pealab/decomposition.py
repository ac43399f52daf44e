"""Direct decompositions induced by type-determining sets.

A pairwise disjoint central partition of the unit splits the algebra into
the product of the intervals below the parts; the forward isomorphism
sums the coordinates and its inverse takes meets with the parts.  On top
of that product machinery sit the three standard decompositions:

* three parts from one TD set K (inside K / locally inside, properly
  outside / purely outside),
* six parts from a nested pair K inside F, and
* the I/II/III form with its two refinements.

Every report re-validates its labels elementwise, zero parts are kept so
the uniqueness statements stay exact, and uniqueness itself is re-proved
by brute force over central candidates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .center import center, orthosum
from .core import (MorphismWitness, derive_order, direct_product,
                   interval_algebra, verify_morphism)
from .errors import DomainError, InvariantViolation
from .tdsets import TDSet, as_tdset, classify_central


@dataclass(frozen=True)
class DecompositionPart:
    center: int
    label: str
    interval: object  # Interval


@dataclass(frozen=True)
class DecompositionReport:
    """Parts, their labels and interval algebras, and the product witness."""

    table: object
    mode: str
    parts: tuple
    product: object
    witness: MorphismWitness
    td_inputs: tuple
    refinements: tuple = ()

    def centers(self):
        return tuple(p.center for p in self.parts)


def _check_partition(t, parts):
    cs = center(t)
    for c in parts:
        if not cs.is_central(c):
            raise DomainError(f"{t.label_of(c)} is not central in {t.display()}")
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if cs.meet[parts[i], parts[j]] != t.zero:
                raise DomainError(
                    f"parts {t.label_of(parts[i])} and {t.label_of(parts[j])} overlap")
    if orthosum(t, parts) != t.one:
        raise DomainError("parts do not sum to the unit")


def phi_isomorphism(t, partition):
    """Witness that E is the product of the intervals below the parts.

    The forward map sums coordinates; the inverse is verified to be the
    meet map e -> (e ^ c_1, ..., e ^ c_n).  Returns (Product, witness).
    """
    partition = tuple(partition)
    if not partition:
        raise DomainError("empty partition")
    _check_partition(t, partition)
    p = derive_order(t)
    intervals = [interval_algebra(t, c) for c in partition]
    prod = direct_product([iv.table for iv in intervals])
    image = []
    for coord in prod.coords:
        elems = [iv.embed[x] for iv, x in zip(intervals, coord)]
        acc = t.zero
        for e in elems:
            nxt = t.sums.get((acc, e))
            if nxt is None:
                raise InvariantViolation("coordinate sum missing under a central partition")
            acc = nxt
        image.append(acc)
    witness = MorphismWitness(tuple(image), "isomorphism")
    if not verify_morphism(prod.table, t, witness):
        raise InvariantViolation("product map is not an isomorphism")
    # inverse must be the meet map
    back = {e: i for i, e in enumerate(image)}
    if len(back) != t.n:
        raise InvariantViolation("product map is not bijective")
    for e in range(t.n):
        meets = tuple(p.meet(e, c) for c in partition)
        if any(m is None for m in meets):
            raise InvariantViolation("meet with a part missing")
        expected = tuple(iv.restrict[m] for iv, m in zip(intervals, meets))
        if prod.coords[back[e]] != expected:
            raise InvariantViolation("inverse of the product map is not the meet map")
    return prod, witness


THREE_LABELS = ("type-k", "locally-type-k-properly-non-k", "purely-non-k")

SIX_LABELS = (
    "type-k",
    "type-f-locally-type-k-properly-non-k",
    "locally-type-k-properly-non-f",
    "type-f-purely-non-k",
    "locally-type-f-properly-non-f-purely-non-k",
    "purely-non-f",
)

ROMAN_LABELS = ("I", "II", "III")


def _required_flags(label):
    """Which classification flags, against which set, a label asserts."""
    return {
        "type-k": (("k", "type_k"),),
        "locally-type-k-properly-non-k": (("k", "locally_type_k"), ("k", "properly_non_k")),
        "purely-non-k": (("k", "purely_non_k"),),
        "type-f-locally-type-k-properly-non-k": (
            ("f", "type_k"), ("k", "locally_type_k"), ("k", "properly_non_k")),
        "locally-type-k-properly-non-f": (("k", "locally_type_k"), ("f", "properly_non_k")),
        "type-f-purely-non-k": (("f", "type_k"), ("k", "purely_non_k")),
        "locally-type-f-properly-non-f-purely-non-k": (
            ("f", "locally_type_k"), ("f", "properly_non_k"), ("k", "purely_non_k")),
        "purely-non-f": (("f", "purely_non_k"),),
        "I": (("k", "locally_type_k"),),
        "II": (("f", "locally_type_k"), ("k", "purely_non_k")),
        "III": (("f", "purely_non_k"),),
    }[label]


def _validate_labels(t, parts, k, f=None):
    sets = {"k": k, "f": f if f is not None else k}
    for part in parts:
        cls = {key: classify_central(t, sets[key], part.center) for key in sets}
        for which, flag in _required_flags(part.label):
            if not getattr(cls[which], flag):
                raise InvariantViolation(
                    f"part {t.label_of(part.center)} fails its label "
                    f"{part.label} on flag {flag}")


def _satisfies(t, k, f, label, c):
    sets = {"k": k, "f": f if f is not None else k}
    return all(
        getattr(classify_central(t, sets[which], c), flag)
        for which, flag in _required_flags(label))


def _as_td(t, k):
    return k if isinstance(k, TDSet) else as_tdset(t, k)


def _build_report(t, mode, centers, labels, td_inputs, refinements=()):
    parts = []
    prod, witness = phi_isomorphism(t, centers)
    for c, label in zip(centers, labels):
        parts.append(DecompositionPart(c, label, interval_algebra(t, c)))
    return DecompositionReport(t, mode, tuple(parts), prod, witness,
                               tuple(td_inputs), tuple(refinements))


def _assert_unique_triple(t, k, f, labels, expected):
    """No other central triple partitions the unit with these labels."""
    cs = center(t)
    for cand in itertools.product(cs.members, repeat=3):
        disjoint = all(
            cs.meet[cand[i], cand[j]] == t.zero
            for i in range(3) for j in range(i + 1, 3))
        if not disjoint or orthosum(t, cand) != t.one:
            continue
        if all(_satisfies(t, k, f, lab, c) for lab, c in zip(labels, cand)):
            if cand != expected:
                raise InvariantViolation(
                    f"second labeled central triple {cand} besides {expected}")


def decompose_three(t, k):
    """Split E along one TD set K into its three canonical summands.

    The parts are the restricted type cover, the rest of the type cover,
    and the complement of the type cover; labels are re-validated and
    uniqueness is re-proved by brute force.
    """
    k = _as_td(t, k)
    centers_ = decompose_base(t, k)
    report = _build_report(t, "three", centers_, THREE_LABELS,
                           (k.name or "K",))
    _validate_labels(t, report.parts, k)
    _assert_unique_triple(t, k, None, THREE_LABELS, centers_)
    return report


def _six_centers(t, k, f):
    cs = center(t)
    c1, c2, c3 = decompose_base(t, k)
    d1, d2, d3 = decompose_base(t, f)
    grid = {(i, j): cs.meet[c, d]
            for i, c in enumerate((c1, c2, c3), start=1)
            for j, d in enumerate((d1, d2, d3), start=1)}
    for ij in ((1, 2), (1, 3), (2, 3)):
        if grid[ij] != t.zero:
            raise InvariantViolation(f"six-part grid cell {ij} is nonzero")
    if grid[1, 1] != c1 or grid[3, 3] != d3:
        raise InvariantViolation("six-part corners differ from the three-part data")
    return grid


def decompose_base(t, k):
    """The raw central triple of a TD set, without report packaging."""
    k = _as_td(t, k)
    cs = center(t)
    c1 = k.restricted_type_cover
    c2 = cs.meet[k.type_cover, cs.complement[c1]]
    c3 = cs.complement[k.type_cover]
    return c1, c2, c3


def _check_nested(t, k, f):
    k = _as_td(t, k)
    f = _as_td(t, f)
    if not k.members <= f.members:
        raise DomainError("first set must be contained in the second")
    return k, f


def decompose_six(t, k, f):
    """Refine the three-part splittings of nested TD sets K inside F."""
    k, f = _check_nested(t, k, f)
    grid = _six_centers(t, k, f)
    order = ((1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3))
    centers_ = tuple(grid[ij] for ij in order)
    report = _build_report(t, "six", centers_, SIX_LABELS,
                           (k.name or "K", f.name or "F"))
    _validate_labels(t, report.parts, k, f)
    return report


def decompose_types(t, k, f):
    """The I/II/III decomposition for nested TD sets, with refinements.

    Type I is locally type-K, type II is locally type-F but purely
    non-K, type III is purely non-F.  The type I and II parts carry the
    further split along membership in F.
    """
    k, f = _check_nested(t, k, f)
    cs = center(t)
    grid = _six_centers(t, k, f)
    c_i = cs.join[cs.join[grid[1, 1], grid[2, 1]], grid[2, 2]]
    c_ii = cs.join[grid[3, 1], grid[3, 2]]
    c_iii = grid[3, 3]
    if c_i != k.type_cover:
        raise InvariantViolation("type I part differs from the type cover of K")
    if c_ii != cs.meet[f.type_cover, cs.complement[k.type_cover]]:
        raise InvariantViolation("type II part has the wrong closed form")
    if c_iii != cs.complement[f.type_cover]:
        raise InvariantViolation("type III part has the wrong closed form")
    centers_ = (c_i, c_ii, c_iii)
    refinements = (
        ("I-f", cs.join[grid[1, 1], grid[2, 1]]),
        ("I-fbar", grid[2, 2]),
        ("II-f", grid[3, 1]),
        ("II-fbar", grid[3, 2]),
    )
    refinement_flags = {
        "I-f": (("k", "locally_type_k"), ("f", "type_k")),
        "I-fbar": (("k", "locally_type_k"), ("f", "properly_non_k")),
        "II-f": (("f", "locally_type_k"), ("k", "purely_non_k"), ("f", "type_k")),
        "II-fbar": (("f", "locally_type_k"), ("k", "purely_non_k"),
                    ("f", "properly_non_k")),
    }
    sets = {"k": k, "f": f}
    for rname, relem in refinements:
        for which, flag in refinement_flags[rname]:
            if not getattr(classify_central(t, sets[which], relem), flag):
                raise InvariantViolation(
                    f"refinement {rname} fails flag {flag} at {t.label_of(relem)}")
    report = _build_report(t, "roman", centers_, ROMAN_LABELS,
                           (k.name or "K", f.name or "F"), refinements)
    _validate_labels(t, report.parts, k, f)
    _assert_unique_triple(t, k, f, ROMAN_LABELS, centers_)
    return report
