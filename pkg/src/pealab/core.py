"""Finite pseudo-effect algebras as explicit partial-sum tables.

The carrier of an algebra is the index set 0..n-1.  A table records the
element count, the designated zero and unit, and the partial binary sum as
a mapping from index pairs to indices.  Everything else (order, residuals,
partial meets and joins) is derived from the table.

Tables are treated as immutable once built; derived structure is cached
per table object, so sharing tables between threads is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from weakref import WeakKeyDictionary

from .errors import DomainError, InvariantViolation, ResourceError, StructuralError


@dataclass(frozen=True, eq=False)
class PeaTable:
    """A finite partial algebra (E; +, 0, 1) given by its sum table.

    ``sums`` maps (i, j) to the index of i+j for the defined pairs only.
    Equality of instances is identity; use :meth:`same_table` for
    structural comparison.  The one-element algebra (zero == one) is
    permitted and reported by :attr:`is_degenerate`.
    """

    n: int
    zero: int
    one: int
    sums: dict
    labels: tuple = None
    name: str = None

    def sum_of(self, i, j):
        """i+j, or None when the sum is undefined."""
        return self.sums.get((i, j))

    def defined(self, i, j):
        return (i, j) in self.sums

    @property
    def elements(self):
        return range(self.n)

    @property
    def is_degenerate(self):
        return self.n == 1

    def label_of(self, e):
        if self.labels is not None:
            return self.labels[e]
        return str(e)

    def key(self):
        """Structural identity: (n, zero, one, sorted sum entries)."""
        return (self.n, self.zero, self.one, tuple(sorted(self.sums.items())))

    def same_table(self, other):
        return self.key() == other.key()

    def display(self):
        return self.name if self.name else f"pea{self.n}"

    def __repr__(self):
        return f"<PeaTable {self.display()} n={self.n}>"


def check_structure(t):
    """Raise StructuralError unless indices and field sizes are sane.

    Distinct from axiom violations: a structurally broken table cannot
    even be checked against the axioms.
    """
    if t.n < 1:
        raise StructuralError(f"element count must be >= 1, got {t.n}")
    if not 0 <= t.zero < t.n:
        raise StructuralError(f"zero index {t.zero} out of range 0..{t.n - 1}")
    if not 0 <= t.one < t.n:
        raise StructuralError(f"one index {t.one} out of range 0..{t.n - 1}")
    for (i, j), k in t.sums.items():
        if not (0 <= i < t.n and 0 <= j < t.n and 0 <= k < t.n):
            raise StructuralError(f"sum entry {i}+{j}={k} out of range 0..{t.n - 1}")
    if t.labels is not None and len(t.labels) != t.n:
        raise StructuralError(f"expected {t.n} labels, got {len(t.labels)}")


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    elements: tuple
    detail: str

    def describe(self, t):
        names = ",".join(t.label_of(e) for e in self.elements)
        return f"{self.axiom} [{names}] {self.detail}"


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple

    @property
    def valid(self):
        return not self.violations

    def first(self):
        return self.violations[0] if self.violations else None


def verify_axioms(t):
    """Check the four defining laws plus the derivable zero identities.

    Returns an AxiomReport whose violation list is empty iff the table is
    a valid algebra.  Every violation names the law and the witnessing
    elements.  Raises StructuralError for malformed tables.
    """
    check_structure(t)
    s = t.sums
    n, zero, one = t.n, t.zero, t.one
    bad = []

    if n > 1 and zero == one:
        bad.append(AxiomViolation("zero-one", (zero,), "zero and one coincide in a multi-element table"))

    # 0 is a two-sided identity (a consequence of the axioms, checked for
    # clearer reports on broken tables).
    for x in range(n):
        if s.get((zero, x)) != x:
            bad.append(AxiomViolation("zero-identity", (x,), "0+x must equal x"))
        if s.get((x, zero)) != x:
            bad.append(AxiomViolation("zero-identity", (x,), "x+0 must equal x"))

    # (i) a+b and (a+b)+c exist iff b+c and a+(b+c) exist, and then agree.
    for a in range(n):
        for b in range(n):
            ab = s.get((a, b))
            for c in range(n):
                bc = s.get((b, c))
                left = None if ab is None else s.get((ab, c))
                right = None if bc is None else s.get((a, bc))
                if (left is None) != (right is None):
                    side = "(a+b)+c" if left is not None else "a+(b+c)"
                    bad.append(AxiomViolation("assoc", (a, b, c), f"only {side} exists"))
                elif left is not None and left != right:
                    bad.append(AxiomViolation(
                        "assoc", (a, b, c),
                        f"(a+b)+c={t.label_of(left)} but a+(b+c)={t.label_of(right)}"))

    # (ii) exactly one d with a+d=1 and exactly one e with e+a=1.
    for a in range(n):
        rights = [d for d in range(n) if s.get((a, d)) == one]
        lefts = [e for e in range(n) if s.get((e, a)) == one]
        if len(rights) != 1:
            bad.append(AxiomViolation("complement", (a,), f"{len(rights)} solutions of a+d=1"))
        if len(lefts) != 1:
            bad.append(AxiomViolation("complement", (a,), f"{len(lefts)} solutions of e+a=1"))

    # (iii) a+b = d+a = b+e for some d, e.
    for (a, b), c in s.items():
        if not any(s.get((d, a)) == c for d in range(n)):
            bad.append(AxiomViolation("solvability", (a, b), "no d with d+a=a+b"))
        if not any(s.get((b, e)) == c for e in range(n)):
            bad.append(AxiomViolation("solvability", (a, b), "no e with b+e=a+b"))

    # (iv) 1+a or a+1 defined forces a=0.
    for a in range(n):
        if a != zero and ((one, a) in s or (a, one) in s):
            bad.append(AxiomViolation("unit", (a,), "1+a or a+1 defined for nonzero a"))

    return AxiomReport(tuple(bad))


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Order structure of a valid algebra: a <= b iff a+c=b for some c.

    Keeps the relation as per-element bitmasks together with the cached
    residuals: for a <= b there is a unique c with a+c=b (the right
    residual) and a unique d with d+a=b (the left residual).
    """

    def __init__(self, table):
        t = table
        n = t.n
        self.table = t
        self.n = n
        up = [0] * n
        down = [0] * n
        rres = [[-1] * n for _ in range(n)]
        lres = [[-1] * n for _ in range(n)]
        for (x, y), b in t.sums.items():
            # x + y = b: x <= b with right residual y, y <= b with left residual x
            if rres[x][b] not in (-1, y):
                raise InvariantViolation(f"two right residuals for {x}<={b}")
            rres[x][b] = y
            if lres[y][b] not in (-1, x):
                raise InvariantViolation(f"two left residuals for {y}<={b}")
            lres[y][b] = x
            up[x] |= 1 << b
            down[b] |= 1 << x
        # the two residual tables must carry the same relation
        for a in range(n):
            for b in range(n):
                if (rres[a][b] == -1) != (lres[a][b] == -1):
                    raise InvariantViolation(f"one-sided order at {a}<={b}")
        full = (1 << n) - 1
        for a in range(n):
            if not up[a] >> a & 1:
                raise InvariantViolation(f"order not reflexive at {a}")
            if up[a] & down[a] != 1 << a:
                raise InvariantViolation(f"order not antisymmetric at {a}")
            for b in _bits(up[a]):
                if up[b] & ~up[a]:
                    raise InvariantViolation(f"order not transitive at {a}<={b}")
        if up[t.zero] != full or any(not up[x] >> t.one & 1 for x in range(n)):
            raise InvariantViolation("order is not bounded by zero and one")
        self.up = up
        self.down = down
        self._rres = rres
        self._lres = lres

    def leq(self, a, b):
        return bool(self.up[a] >> b & 1)

    def below(self, e):
        """Elements of the interval [0, e], ascending."""
        return list(_bits(self.down[e]))

    def above(self, e):
        return list(_bits(self.up[e]))

    def right_residual(self, a, b):
        """The unique c with a+c=b, for a <= b."""
        c = self._rres[a][b]
        if c == -1:
            raise DomainError(f"{a} is not below {b}: no residual")
        return c

    def left_residual(self, a, b):
        """The unique d with d+a=b, for a <= b."""
        d = self._lres[a][b]
        if d == -1:
            raise DomainError(f"{a} is not below {b}: no residual")
        return d

    def right_complement(self, x):
        """x~ : the unique element with x + x~ = 1."""
        return self._rres[x][self.table.one]

    def left_complement(self, x):
        """x- : the unique element with x- + x = 1."""
        return self._lres[x][self.table.one]

    def common_lower(self, a, b):
        return self.down[a] & self.down[b]

    def meet(self, a, b):
        """Greatest lower bound in E, or None when it does not exist."""
        mask = self.down[a] & self.down[b]
        for x in _bits(mask):
            if not mask & ~self.down[x]:
                return x
        return None

    def join(self, a, b):
        mask = self.up[a] & self.up[b]
        for x in _bits(mask):
            if not mask & ~self.up[x]:
                return x
        return None

    def inf(self, xs):
        """Greatest lower bound of a family, or None.  inf([]) is one."""
        mask = (1 << self.n) - 1
        for x in xs:
            mask &= self.down[x]
        for x in _bits(mask):
            if not mask & ~self.down[x]:
                return x
        return None

    def sup(self, xs):
        """Least upper bound of a family, or None.  sup([]) is zero."""
        mask = (1 << self.n) - 1
        for x in xs:
            mask &= self.up[x]
        for x in _bits(mask):
            if not mask & ~self.up[x]:
                return x
        return None

    def disjoint(self, a, b):
        """True iff zero is the only common lower bound of a and b.

        Coincides with "the meet exists and is zero" whenever that meet
        exists, and is the reading used for disjointness throughout.
        """
        return self.down[a] & self.down[b] == 1 << self.table.zero

    def heights(self):
        """Length of the longest chain from zero to each element."""
        n = self.n
        order = sorted(range(n), key=lambda e: bin(self.down[e]).count("1"))
        h = [0] * n
        for e in order:
            best = 0
            for x in _bits(self.down[e]):
                if x != e and h[x] + 1 > best:
                    best = h[x] + 1
            h[e] = best
        return h


_POSETS = WeakKeyDictionary()


def derive_order(t):
    """Verify the table and return its (cached) order structure.

    Raises DomainError when the table fails the axioms.
    """
    poset = _POSETS.get(t)
    if poset is None:
        report = verify_axioms(t)
        if not report.valid:
            raise DomainError(
                f"{t.display()} is not a valid algebra: {report.first().describe(t)}")
        poset = Poset(t)
        _POSETS[t] = poset
    return poset


def residuals(t, a, b):
    """For a <= b, the pair (c, d) with a+c = b and d+a = b.

    The first component is the right residual, the second the left one.
    Raises DomainError when a is not below b.
    """
    p = derive_order(t)
    return p.right_residual(a, b), p.left_residual(a, b)


@dataclass(frozen=True, eq=False)
class Interval:
    """The algebra on [0, e] with sums of the parent restricted to it.

    ``embed`` translates interval indices back to parent indices and
    ``restrict`` is its inverse on the members.
    """

    table: PeaTable
    apex: int
    embed: tuple
    restrict: dict


def interval_algebra(t, e):
    """The interval algebra on {x : x <= e}; f+g kept iff the sum is <= e."""
    p = derive_order(t)
    if not 0 <= e < t.n:
        raise DomainError(f"no element {e} in {t.display()}")
    members = [x for x in p.below(e) if x != t.zero and x != e]
    members = [t.zero] + sorted(members) + ([e] if e != t.zero else [])
    restrict = {old: new for new, old in enumerate(members)}
    sums = {}
    for (a, b), c in t.sums.items():
        if a in restrict and b in restrict and c in restrict:
            sums[(restrict[a], restrict[b])] = restrict[c]
    labels = None
    if t.labels is not None:
        labels = tuple(t.labels[old] for old in members)
    name = f"{t.name}[0,{t.label_of(e)}]" if t.name else None
    sub = PeaTable(len(members), 0, restrict[e], sums, labels, name)
    return Interval(sub, e, tuple(members), restrict)


@dataclass(frozen=True, eq=False)
class Product:
    """A direct product: coordinatewise sums, defined iff defined everywhere.

    ``coords`` maps a product index to its tuple of factor indices and
    ``projections`` holds, per factor, the coordinate map.
    """

    table: PeaTable
    factors: tuple
    coords: tuple
    index_of: dict
    projections: tuple


def direct_product(tables):
    """Cartesian product of algebras with coordinatewise partial sums."""
    tables = tuple(tables)
    if not tables:
        raise DomainError("direct product needs at least one factor")
    coords = tuple(itertools.product(*(range(f.n) for f in tables)))
    index_of = {c: i for i, c in enumerate(coords)}
    zero = index_of[tuple(f.zero for f in tables)]
    one = index_of[tuple(f.one for f in tables)]
    sums = {}
    for a, ca in enumerate(coords):
        for b, cb in enumerate(coords):
            out = []
            for f, x, y in zip(tables, ca, cb):
                v = f.sums.get((x, y))
                if v is None:
                    break
                out.append(v)
            else:
                sums[(a, b)] = index_of[tuple(out)]
    labels = tuple(
        "(" + ",".join(f.label_of(x) for f, x in zip(tables, c)) + ")" for c in coords)
    name = "x".join(f.display() for f in tables)
    table = PeaTable(len(coords), zero, one, sums, labels, name)
    projections = tuple(tuple(c[k] for c in coords) for k in range(len(tables)))
    return Product(table, tables, coords, index_of, projections)


@dataclass(frozen=True)
class MorphismWitness:
    """A verified structure map: ``map[src_index] = target_index``.

    kind is "morphism" (unit and existing sums preserved) or
    "isomorphism" (additionally bijective with sum existence reflected).
    """

    map: tuple
    kind: str


def verify_morphism(s, t, witness):
    """Independently re-check a witness against both tables."""
    m = witness.map
    if len(m) != s.n or any(not 0 <= v < t.n for v in m):
        return False
    if m[s.one] != t.one:
        return False
    for (a, b), c in s.sums.items():
        v = t.sums.get((m[a], m[b]))
        if v is None or v != m[c]:
            return False
    if witness.kind == "isomorphism":
        if s.n != t.n or len(set(m)) != s.n:
            return False
        for a in range(s.n):
            for b in range(s.n):
                if (a, b) not in s.sums and (m[a], m[b]) in t.sums:
                    return False
    return True


def _signatures(t):
    p = derive_order(t)
    n = t.n
    row = [0] * n
    col = [0] * n
    target = [0] * n
    for (a, b), c in t.sums.items():
        row[a] += 1
        col[b] += 1
        target[c] += 1
    h = p.heights()
    return [
        (e == t.zero, e == t.one, row[e], col[e], target[e],
         bin(p.down[e]).count("1"), bin(p.up[e]).count("1"), h[e])
        for e in range(n)
    ]


def find_isomorphism(s, t):
    """Search for an isomorphism; None when there is none.

    Backtracking over bijections that respect zero, one and the
    per-element signature (degrees, target count, order profile); the
    found witness is re-verified independently before being returned.
    """
    if s.n != t.n:
        return None
    sig_s = _signatures(s)
    sig_t = _signatures(t)
    if sorted(sig_s) != sorted(sig_t):
        return None
    candidates = {e: [f for f in range(t.n) if sig_t[f] == sig_s[e]] for e in range(s.n)}
    order = sorted(range(s.n), key=lambda e: (len(candidates[e]), e))
    image = [-1] * s.n
    used = [False] * t.n

    def consistent(a, b):
        for x in range(s.n):
            ix = image[x] if x != a else b
            if ix == -1:
                continue
            for (p, q), (tp, tq) in (((a, x), (b, ix)), ((x, a), (ix, b))):
                v = s.sums.get((p, q))
                w = t.sums.get((tp, tq))
                if (v is None) != (w is None):
                    return False
                if v is not None and image[v] != -1 and image[v] != w:
                    return False
        return True

    def extend(k):
        if k == s.n:
            return True
        a = order[k]
        for b in candidates[a]:
            if used[b] or not consistent(a, b):
                continue
            image[a] = b
            used[b] = True
            if extend(k + 1):
                return True
            image[a] = -1
            used[b] = False
        return False

    if not extend(0):
        return None
    witness = MorphismWitness(tuple(image), "isomorphism")
    if not verify_morphism(s, t, witness):
        raise InvariantViolation("isomorphism search produced a bad witness")
    return witness


_CANONICAL_LIMIT = 10


def _canonical_flat(n, zero, one, sums):
    """Lexicographically least flat table over relabelings fixing 0 and 1.

    The normal form puts zero at index 0 and one at index n-1; the result
    is a tuple of n*n entries with -1 for undefined cells.
    """
    if n > _CANONICAL_LIMIT:
        raise ResourceError(f"canonical form over {n}-2 movable elements is out of bounds")
    mids = [e for e in range(n) if e != zero and e != one]
    best = None
    best_pi = None
    for perm in itertools.permutations(mids):
        pi = [0] * n
        pi[zero] = 0
        pi[one] = n - 1
        for pos, old in enumerate(perm, start=1):
            pi[old] = pos
        flat = [-1] * (n * n)
        for (a, b), c in sums.items():
            flat[pi[a] * n + pi[b]] = pi[c]
        key = tuple(flat)
        if best is None or key < best:
            best = key
            best_pi = pi
    return best, best_pi


def canonical_key(t):
    """Hashable canonical identity of the isomorphism class of t."""
    flat, _ = _canonical_flat(t.n, t.zero, t.one, t.sums)
    return (t.n, flat)


def canonicalize(t):
    """The canonical representative of t's isomorphism class.

    Zero lands at index 0 and one at n-1; labels follow their elements.
    """
    flat, pi = _canonical_flat(t.n, t.zero, t.one, t.sums)
    n = t.n
    sums = {}
    for idx, v in enumerate(flat):
        if v != -1:
            sums[(idx // n, idx % n)] = v
    labels = None
    if t.labels is not None:
        labels = tuple(t.labels[old] for old in sorted(range(n), key=lambda e: pi[e]))
    return PeaTable(n, 0, n - 1 if n > 1 else 0, sums, labels, t.name)


def pogroup_interval(u, *, max_elements=512, name=None):
    """The interval [0, u] in Z^k under coordinatewise order and addition.

    ``u`` is an int (k=1) or a sequence of non-negative ints; the sum of
    two interval elements is kept iff it stays below u.  Finiteness is
    automatic here, but the element count is capped by ``max_elements``.
    """
    if isinstance(u, int):
        u = (u,)
    u = tuple(u)
    if not u or any(not isinstance(c, int) for c in u):
        raise DomainError("u must be an int or a nonempty tuple of ints")
    if any(c < 0 for c in u):
        raise DomainError(f"u={u} is not above the group zero")
    size = 1
    for c in u:
        size *= c + 1
    if size > max_elements:
        raise ResourceError(f"interval has {size} elements, bound is {max_elements}")
    coords = list(itertools.product(*(range(c + 1) for c in u)))
    index_of = {g: i for i, g in enumerate(coords)}
    sums = {}
    for a, ga in enumerate(coords):
        for b, gb in enumerate(coords):
            total = tuple(x + y for x, y in zip(ga, gb))
            if all(x <= c for x, c in zip(total, u)):
                sums[(a, b)] = index_of[total]
    if len(u) == 1:
        labels = tuple(str(g[0]) for g in coords)
    else:
        labels = tuple("(" + ",".join(str(x) for x in g) + ")" for g in coords)
    return PeaTable(len(coords), 0, len(coords) - 1, sums, labels,
                    name or f"Z{len(u)}[0,{','.join(str(c) for c in u)}]")
