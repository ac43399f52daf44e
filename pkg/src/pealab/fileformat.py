"""Line-oriented algebra files.

Grammar (UTF-8, '#' starts a comment, blank lines ignored):

    pea [<name>]
    elements <n>
    zero <i>
    one <i>
    label <i> <text>     zero or more
    sum <i> <j> <k>      one per defined sum; sums against zero are implied
    end

Indices in files are arbitrary; tables are normalized on load so that
zero sits at index 0 and one at index n-1, with the remaining elements
keeping their relative order.  Emission is canonical: sums sorted by
(i, j) with the implied zero sums omitted, so equal tables produce
byte-identical files.
"""

from __future__ import annotations

from .core import PeaTable, check_structure
from .errors import ParseError


def parse_pea(text):
    """Parse one algebra; raises ParseError with a line number on bad input.

    The result is structurally checked and normalized but not verified
    against the algebra laws: broken tables are representable on purpose
    so that verification can report on them.
    """
    name = None
    n = None
    zero = None
    one = None
    labels = {}
    sums = {}
    sum_lines = {}
    seen_pea = False
    seen_end = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if seen_end:
            raise ParseError("content after end", lineno)
        fields = line.split()
        word = fields[0]
        if word == "pea":
            if seen_pea:
                raise ParseError("second pea line", lineno)
            seen_pea = True
            name = line[len("pea"):].strip() or None
        elif not seen_pea:
            raise ParseError("file must start with a pea line", lineno)
        elif word == "elements":
            if n is not None:
                raise ParseError("second elements line", lineno)
            n = _int_field(fields, 1, lineno)
        elif word == "zero":
            zero = _int_field(fields, 1, lineno)
        elif word == "one":
            one = _int_field(fields, 1, lineno)
        elif word == "label":
            i = _int_field(fields, 1, lineno)
            text_label = line.split(None, 2)[2] if len(fields) >= 3 else ""
            if not text_label:
                raise ParseError("label needs text", lineno)
            labels[i] = text_label
        elif word == "sum":
            i = _int_field(fields, 1, lineno)
            j = _int_field(fields, 2, lineno)
            k = _int_field(fields, 3, lineno)
            if (i, j) in sums and sums[(i, j)] != k:
                raise ParseError(
                    f"sum {i} {j} redefined with a different value "
                    f"(first at line {sum_lines[(i, j)]})", lineno)
            sums[(i, j)] = k
            sum_lines[(i, j)] = lineno
        elif word == "end":
            seen_end = True
        else:
            raise ParseError(f"unknown directive {word!r}", lineno)
    if not seen_pea:
        raise ParseError("missing pea line", 1)
    if not seen_end:
        raise ParseError("missing end line", 1)
    if n is None:
        raise ParseError("missing elements line", 1)
    if zero is None:
        raise ParseError("missing zero line", 1)
    if one is None:
        raise ParseError("missing one line", 1)
    for i in set(labels) | {zero, one} | {x for ij in sums for x in ij} | set(sums.values()):
        if not 0 <= i < n:
            raise ParseError(f"index {i} out of range 0..{n - 1}", 1)
    # implied sums against zero, for cells not given explicitly
    for x in range(n):
        sums.setdefault((zero, x), x)
        sums.setdefault((x, zero), x)
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(i, str(i)) for i in range(n))
    table = PeaTable(n, zero, one, sums, label_tuple, name)
    check_structure(table)
    return _normalize(table)


def _int_field(fields, k, lineno):
    if len(fields) <= k:
        raise ParseError(f"{fields[0]} needs more fields", lineno)
    try:
        return int(fields[k])
    except ValueError:
        raise ParseError(f"expected an integer, got {fields[k]!r}", lineno) from None


def _normalize(t):
    """Relabel so zero is index 0 and one is index n-1, preserving order."""
    if t.n == 1 or (t.zero == 0 and t.one == t.n - 1):
        return t
    rest = [e for e in range(t.n) if e not in (t.zero, t.one)]
    new_order = [t.zero] + rest + [t.one]
    pi = {old: new for new, old in enumerate(new_order)}
    sums = {(pi[a], pi[b]): pi[c] for (a, b), c in t.sums.items()}
    labels = None
    if t.labels is not None:
        labels = tuple(t.labels[old] for old in new_order)
    return PeaTable(t.n, 0, t.n - 1, sums, labels, t.name)


def emit_pea(t):
    """Canonical text for a table; reparsing yields an equal table."""
    lines = []
    lines.append(f"pea {t.name}" if t.name else "pea")
    lines.append(f"elements {t.n}")
    lines.append(f"zero {t.zero}")
    lines.append(f"one {t.one}")
    if t.labels is not None:
        for i in range(t.n):
            lines.append(f"label {i} {t.labels[i]}")
    for (i, j) in sorted(t.sums):
        if i == t.zero or j == t.zero:
            continue
        lines.append(f"sum {i} {j} {t.sums[(i, j)]}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def load_pea(path):
    with open(path, encoding="utf-8") as handle:
        return parse_pea(handle.read())


def save_pea(t, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(emit_pea(t))
