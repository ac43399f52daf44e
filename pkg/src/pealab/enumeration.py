"""Exhaustive generation of all finite algebras up to isomorphism.

Backtracks over partial sum tables with the defining laws used as pruning
rules, then keeps exactly the lexicographically least representative of
each isomorphism class, so every class is emitted once and the output
order is deterministic.

Search-space normal form: zero sits at index 0 and one at index n-1.  The
borders of the table are then forced (0 is a two-sided identity, sums
with 1 exist only against 0), which leaves the (n-2) x (n-2) interior to
decide.  A cell is either undefined or carries a value distinct from 0
and from both of its coordinates; each row and column holds pairwise
distinct values and exactly one occurrence of the unit.
"""

from __future__ import annotations

import os

from .core import PeaTable, _canonical_flat, verify_axioms
from .errors import DomainError, ResourceError

UNDEC = -2
UNDEF = -1

ENV_MAX_ELEMENTS = "PEALAB_MAX_ELEMENTS"
ENV_MAX_NODES = "PEALAB_MAX_NODES"


def default_budget():
    """Resource caps, overridable through the environment."""
    return (
        int(os.environ.get(ENV_MAX_ELEMENTS, "8")),
        int(os.environ.get(ENV_MAX_NODES, "50000000")),
    )


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit):
        self.nodes = 0
        self.limit = limit


class _Search:
    """Depth-first search over the interior cells of one table size."""

    def __init__(self, n, counter):
        self.n = n
        self.U = n - 1
        self.counter = counter
        size = n * n
        val = [UNDEC] * size
        for j in range(n):
            val[j] = j                      # 0 + j = j
        for i in range(n):
            val[i * n] = i                  # i + 0 = i
        for j in range(1, n):
            val[self.U * n + j] = UNDEF     # 1 + j undefined for j != 0
            val[j * n + self.U] = UNDEF     # j + 1 undefined for j != 0
        self.val = val
        self.cells = [(i, j) for i in range(1, n - 1) for j in range(1, n - 1)]
        row_used = [0] * n
        col_used = [0] * n
        pairs = [[] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                v = val[i * n + j]
                if v >= 0:
                    row_used[i] |= 1 << v
                    col_used[j] |= 1 << v
                    pairs[v].append((i, j))
        self.row_used = row_used
        self.col_used = col_used
        self.pairs = pairs
        # reflexive order closure; up[x] bit y set iff x <= y so far
        self.up = [1 << x for x in range(n)]
        self.down = [1 << x for x in range(n)]
        for x in range(1, n):
            self._add_edge(0, x, [])
            self._add_edge(x, self.U, [])

    def _add_edge(self, a, c, log):
        """Record a <= c and keep the closure transitive; False on a cycle."""
        up, down = self.up, self.down
        if up[a] >> c & 1:
            return True
        if up[c] >> a & 1:          # c <= a already: a cycle
            return False
        add_up = up[c]
        add_down = down[a]
        for x in _bits_of(down[a]):
            log.append((up, x, up[x]))
            up[x] |= add_up
        for y in _bits_of(add_up):
            log.append((down, y, down[y]))
            down[y] |= add_down
        return True

    def _tri(self, x, y, z):
        """Three-valued associativity check; True when still consistent."""
        n, val = self.n, self.val
        a = val[x * n + y]
        if a == UNDEC:
            return True
        b = val[y * n + z]
        if b == UNDEC:
            return True
        if a >= 0:
            left = val[a * n + z]
            if left == UNDEC:
                return True
        else:
            left = UNDEF
        if b >= 0:
            right = val[x * n + b]
            if right == UNDEC:
                return True
        else:
            right = UNDEF
        if (left >= 0) != (right >= 0):
            return False
        return left < 0 or left == right

    def _cell_ok(self, i, j):
        """Re-check every triple that consults cell (i, j)."""
        tri = self._tri
        for z in range(self.n):
            if not tri(i, j, z) or not tri(z, i, j):
                return False
        for (x, y) in self.pairs[i]:
            if not tri(x, y, j):
                return False
        for (y, z) in self.pairs[j]:
            if not tri(i, y, z):
                return False
        return True

    def _row_complete_ok(self, i):
        n = self.n
        if not self.row_used[i] >> self.U & 1:
            return False                    # no right complement for i
        # solvability, row side: every decided a+i needs e with i+e = a+i
        mask = self.row_used[i]
        for x in range(1, i + 1):
            c = self.val[x * n + i]
            if c >= 0 and not mask >> c & 1:
                return False
        return True

    def _leaf_tables(self):
        """Final filters on a fully decided table; yields the sums dict."""
        n, U, val = self.n, self.U, self.val
        for j in range(1, n - 1):
            if not self.col_used[j] >> U & 1:
                return
        # solvability, column side
        for i in range(1, n - 1):
            for j in range(1, n - 1):
                c = val[i * n + j]
                if c >= 0 and not self.col_used[i] >> c & 1:
                    return
        sums = {}
        for i in range(n):
            for j in range(n):
                v = val[i * n + j]
                if v >= 0:
                    sums[(i, j)] = v
        yield sums

    def run(self):
        yield from self._place(0)

    def _place(self, idx):
        if idx == len(self.cells):
            yield from self._leaf_tables()
            return
        i, j = self.cells[idx]
        n = self.n
        pos = i * n + j
        counter = self.counter
        row_end = j == n - 2
        # row j is complete once every row up to the current one is decided,
        # and then solvability pins candidate values to that row's sums
        row_j_vals = self.row_used[j] if j < i else None
        candidates = [UNDEF]
        taken = self.row_used[i] | self.col_used[j]
        for v in range(1, n):
            if v == i or v == j or taken >> v & 1:
                continue
            if row_j_vals is not None and not row_j_vals >> v & 1:
                continue
            candidates.append(v)
        for v in candidates:
            counter.nodes += 1
            if counter.nodes > counter.limit:
                raise ResourceError(
                    f"enumeration stopped after {counter.nodes - 1} nodes "
                    f"({ENV_MAX_NODES} cap)")
            self.val[pos] = v
            log = []
            ok = True
            if v >= 0:
                self.row_used[i] |= 1 << v
                self.col_used[j] |= 1 << v
                self.pairs[v].append((i, j))
                ok = self._add_edge(i, v, log) and self._add_edge(j, v, log)
            if ok:
                ok = self._cell_ok(i, j)
            if ok and row_end:
                ok = self._row_complete_ok(i)
            if ok:
                yield from self._place(idx + 1)
            for arr, k, old in reversed(log):
                arr[k] = old
            if v >= 0:
                self.row_used[i] &= ~(1 << v)
                self.col_used[j] &= ~(1 << v)
                self.pairs[v].pop()
            self.val[pos] = UNDEC


def _bits_of(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _tables_of_size(n, counter):
    if n == 1:
        yield PeaTable(1, 0, 0, {(0, 0): 0}, None, None)
        return
    for sums in _Search(n, counter).run():
        flat = [-1] * (n * n)
        for (a, b), c in sums.items():
            flat[a * n + b] = c
        canon, _ = _canonical_flat(n, 0, n - 1, sums)
        if tuple(flat) != canon:
            continue
        t = PeaTable(n, 0, n - 1, sums, None, None)
        # the incremental pruning is sound but deliberately lazy in spots;
        # the full axiom check is the final gate
        if verify_axioms(t).valid:
            yield t


def enumerate_peas(max_n, predicate=None, *, max_nodes=None):
    """Yield every algebra with at most max_n elements, one per iso class.

    Output is deterministic: sizes ascending, classes in search order,
    each named ``E<n>_<k>``.  A predicate only filters the output; the
    classes examined stay the same.  Exceeding the node budget (see
    PEALAB_MAX_NODES) raises ResourceError with the cutoff point.
    """
    env_elements, env_nodes = default_budget()
    if max_n < 1:
        raise DomainError("max_n must be at least 1")
    if max_n > env_elements:
        raise ResourceError(
            f"max_n={max_n} above the {ENV_MAX_ELEMENTS} cap of {env_elements}")
    counter = _Counter(max_nodes if max_nodes is not None else env_nodes)
    for n in range(1, max_n + 1):
        k = 0
        for t in _tables_of_size(n, counter):
            named = PeaTable(t.n, t.zero, t.one, t.sums, t.labels, f"E{n}_{k}")
            k += 1
            if predicate is None or predicate(named):
                yield named
