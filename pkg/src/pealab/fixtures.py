"""Built-in reference algebras.

The registry holds the standard small algebras plus one enumeration
discovery: NC5, the five-element algebra with cyclically linked
complements, which is the smallest non-commutative example.  Every entry
passes the axiom check at registration time.
"""

from __future__ import annotations

import os

from .core import PeaTable, direct_product, verify_axioms
from .errors import DomainError, InvariantViolation
from .fileformat import emit_pea


def _with_zero_sums(n, zero, extra):
    sums = {}
    for x in range(n):
        sums[(zero, x)] = x
        sums[(x, zero)] = x
    sums.update(extra)
    return sums


def _build():
    one_elt = PeaTable(1, 0, 0, {(0, 0): 0}, ("0",), "ONE")
    c2 = PeaTable(2, 0, 1, _with_zero_sums(2, 0, {}), ("0", "1"), "C2")
    m3 = PeaTable(3, 0, 2, _with_zero_sums(3, 0, {(1, 1): 2}),
                  ("0", "a", "1"), "M3")
    b4 = PeaTable(4, 0, 3, _with_zero_sums(4, 0, {(1, 2): 3, (2, 1): 3}),
                  ("0", "p", "q", "1"), "B4")
    mo2 = PeaTable(
        6, 0, 5,
        _with_zero_sums(6, 0, {(1, 2): 5, (2, 1): 5, (3, 4): 5, (4, 3): 5}),
        ("0", "a", "a'", "b", "b'", "1"), "MO2")
    prod = direct_product([c2, m3]).table
    c2xm3 = PeaTable(prod.n, prod.zero, prod.one, prod.sums, prod.labels, "C2xM3")
    # smallest non-commutative algebra: complements chain in a cycle,
    # a+c = b+a = c+b = 1, no sum in the reverse order
    nc5 = PeaTable(
        5, 0, 4,
        _with_zero_sums(5, 0, {(1, 3): 4, (2, 1): 4, (3, 2): 4}),
        ("0", "a", "b", "c", "1"), "NC5")
    return {t.name: t for t in (one_elt, c2, m3, b4, mo2, c2xm3, nc5)}


_REGISTRY = _build()
for _t in _REGISTRY.values():
    if not verify_axioms(_t).valid:
        raise InvariantViolation(f"built-in fixture {_t.name} fails the axioms")


def builtin_names():
    return sorted(_REGISTRY)


def builtin(name):
    t = _REGISTRY.get(name)
    if t is None:
        raise DomainError(
            f"no built-in algebra {name!r}; known: {', '.join(builtin_names())}")
    return t


def is_builtin(name):
    return name in _REGISTRY


def write_fixture_files(directory):
    """Materialize every built-in as a .pea file; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name in builtin_names():
        path = os.path.join(directory, f"{name}.pea")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(emit_pea(builtin(name)))
        paths.append(path)
    return paths
