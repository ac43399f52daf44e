"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (bad files, bad arguments,
invalid algebras), 2 when an internal invariant fails, meaning a law that
must hold was contradicted; 2 signals a bug in this package, never a
problem with the input.

Reports are deterministic: two runs over the same inputs emit identical
bytes.  Lines starting with the keywords verdict, violation, center,
cover, members, td, std, type-cover, restricted-type-cover, part,
refinement, witness, found, census, saved, isomorphic, map, element,
algebra-flags, input, k-set and f-set form the machine-readable subset of
each report.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import classes as cls
from . import decomposition as dec
from .center import center, central_cover
from .core import find_isomorphism, verify_axioms
from .enumeration import enumerate_peas
from .errors import (DomainError, InvariantViolation, ParseError, PeaError,
                     ResourceError, StructuralError)
from .fileformat import load_pea, save_pea
from .fixtures import builtin, is_builtin
from .tdsets import (as_tdset, bicommutant, closure_down, closure_gamma,
                     closure_sup, commutant, is_std, is_td, std_generated,
                     td_generated)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load(spec):
    if os.path.exists(spec):
        return load_pea(spec)
    if is_builtin(spec):
        return builtin(spec)
    raise DomainError(f"no such file or built-in algebra: {spec}")


def _resolve_element(t, token):
    if t.labels is not None and token in t.labels:
        return t.labels.index(token)
    try:
        e = int(token)
    except ValueError:
        raise DomainError(f"no element {token!r} in {t.display()}") from None
    if not 0 <= e < t.n:
        raise DomainError(f"index {e} out of range for {t.display()}")
    return e


def _resolve_set(t, text):
    tokens = [tok for tok in text.replace(",", " ").split() if tok]
    return frozenset(_resolve_element(t, tok) for tok in tokens)


def _members_csv(t, elems):
    return ",".join(t.label_of(e) for e in sorted(elems))


def _print_header(t, out):
    out(f"algebra {t.display()} elements={t.n}")


def _cmd_verify(args, out):
    status = 0
    for spec in args.files:
        t = _load(spec)
        _print_header(t, out)
        report = verify_axioms(t)
        for v in report.violations:
            out(f"violation {v.describe(t)}")
        verdict = "valid" if report.valid else "invalid"
        out(f"verdict {verdict} violations={len(report.violations)}")
        if not report.valid:
            status = 1
    return status


def _cmd_center(args, out):
    t = _load(args.file)
    _print_header(t, out)
    cs = center(t)
    out(f"center {_members_csv(t, cs.members)}")
    out("boolean-laws ok")  # center() refuses to return otherwise
    for e in range(t.n):
        out(f"cover {t.label_of(e)} = {t.label_of(cs.cover[e])}")
    return 0


def _cmd_cover(args, out):
    t = _load(args.file)
    _print_header(t, out)
    elems = range(t.n)
    if args.element is not None:
        elems = [_resolve_element(t, args.element)]
    for e in elems:
        out(f"cover {t.label_of(e)} = {t.label_of(central_cover(t, e))}")
    return 0


_CLOSURE_OPS = {
    "sup": closure_sup,
    "gamma": closure_gamma,
    "down": closure_down,
    "commutant": commutant,
    "bicommutant": bicommutant,
}


def _cmd_closure(args, out):
    t = _load(args.file)
    _print_header(t, out)
    q = _resolve_set(t, args.set)
    out(f"input {_members_csv(t, q)}")
    if args.op in _CLOSURE_OPS:
        members = _CLOSURE_OPS[args.op](t, q)
        out(f"members {_members_csv(t, members)}")
        out(f"td {str(is_td(t, members)).lower()}")
        out(f"std {str(is_std(t, members)).lower()}")
    else:
        generated = td_generated(t, q) if args.op == "td" else std_generated(t, q)
        out(f"members {_members_csv(t, generated.members)}")
        out(f"td {str(generated.td).lower()}")
        out(f"std {str(generated.std).lower()}")
        out(f"type-cover {t.label_of(generated.type_cover)}")
        out(f"restricted-type-cover {t.label_of(generated.restricted_type_cover)}")
    return 0


def _flags_text(pairs):
    return " ".join(f"{name}={str(value).lower()}" for name, value in pairs)


def _cmd_classify(args, out):
    t = _load(args.file)
    _print_header(t, out)
    profile = cls.class_profile(t)
    out("algebra-flags " + _flags_text(
        (name, profile.algebra[name]) for name in profile.algebra_flag_names()))
    elems = range(t.n)
    if args.element is not None:
        elems = [_resolve_element(t, args.element)]
    for e in elems:
        out(f"element {t.label_of(e)} " + _flags_text(
            (name, profile.element[name][e]) for name in profile.element_flag_names()))
    return 0


def _td_argument(t, text, out, tag):
    """A named class from the registry, or a file holding an element set."""
    if text in cls.CLASS_REGISTRY:
        tdset = cls.td_from_class(t, text)
    elif os.path.exists(text):
        with open(text, encoding="utf-8") as handle:
            body = handle.read()
        tokens = []
        for line in body.splitlines():
            tokens.extend(line.split("#", 1)[0].split())
        members = frozenset(_resolve_element(t, tok) for tok in tokens)
        tdset = as_tdset(t, members, name=os.path.basename(text))
    else:
        raise DomainError(f"{text!r} is neither a class name nor a set file")
    out(f"{tag} {tdset.name} members={_members_csv(t, tdset.members)}")
    return tdset


def _cmd_decompose(args, out):
    t = _load(args.file)
    _print_header(t, out)
    k = _td_argument(t, args.k, out, "k-set")
    f = None
    if args.f is not None:
        if args.mode == "three":
            raise DomainError("mode three uses only --k")
        f = _td_argument(t, args.f, out, "f-set")
    elif args.mode in ("six", "roman"):
        raise DomainError(f"mode {args.mode} needs --f")
    if args.mode == "three":
        report = dec.decompose_three(t, k)
    elif args.mode == "six":
        report = dec.decompose_six(t, k, f)
    else:
        report = dec.decompose_types(t, k, f)
    for i, part in enumerate(report.parts, start=1):
        out(f"part {i} center={t.label_of(part.center)} type={part.label}")
    for rname, relem in report.refinements:
        out(f"refinement {rname} center={t.label_of(relem)}")
    out(f"witness ok product={report.product.table.n}")
    return 0


def _cmd_enumerate(args, out):
    predicate = None
    if args.filter is not None:
        spec = cls.CLASS_REGISTRY.get(args.filter)
        if spec is None or spec.interval_predicate is None:
            raise DomainError(f"unknown filter class {args.filter!r}")
        predicate = spec.interval_predicate
    counts = {}
    found = []
    for t in enumerate_peas(args.max_size, predicate):
        counts[t.n] = counts.get(t.n, 0) + 1
        found.append(t)
        out(f"found {t.display()} elements={t.n}")
    for n in range(1, args.max_size + 1):
        out(f"census n={n} count={counts.get(n, 0)}")
    if args.save is not None:
        os.makedirs(args.save, exist_ok=True)
        for t in found:
            path = os.path.join(args.save, f"{t.display()}.pea")
            save_pea(t, path)
            out(f"saved {path}")
    return 0


def _cmd_isocheck(args, out):
    s = _load(args.first)
    t = _load(args.second)
    witness = find_isomorphism(s, t)
    if witness is None:
        out("isomorphic false")
    else:
        out("isomorphic true")
        out("map " + ",".join(str(v) for v in witness.map))
    return 0


def _build_parser():
    parser = _Parser(prog="pealab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="check the algebra laws")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("center", help="central elements, laws, cover table")
    p.add_argument("file")
    p.set_defaults(func=_cmd_center)

    p = sub.add_parser("cover", help="central covers")
    p.add_argument("file")
    p.add_argument("--element")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("closure", help="closure operators and TD/STD verdicts")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    p.add_argument("--op", required=True,
                   choices=sorted(_CLOSURE_OPS) + ["td", "std"])
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("classify", help="element and algebra class flags")
    p.add_argument("file")
    p.add_argument("--element")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("decompose", help="type decompositions")
    p.add_argument("file")
    p.add_argument("--k", required=True)
    p.add_argument("--f")
    p.add_argument("--mode", default="three", choices=["three", "six", "roman"])
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("enumerate", help="all algebras up to isomorphism")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--filter")
    p.add_argument("--save")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("isocheck", help="search for an isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_isocheck)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    def out(line):
        print(line)

    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"invariant-violation: {exc}", file=sys.stderr)
        return 2
    except (ParseError, StructuralError, DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PeaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
