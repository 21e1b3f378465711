"""Batch front end.

Builds rings from space descriptions, constructs and verifies
projector decompositions, composes correspondences and applies them to
classes, lifts decompositions into truncated parameter rings, checks
truncation stability, transports decompositions along the supported
surjections, and prints the closed-form dimension formulas.

Exit codes: 0 — every requested check passed; 1 — a verification
check failed (the machine report is still written); 2 — malformed
input or configuration. Human-readable text goes to standard output;
a machine-readable JSON document is written when --out is given.

Space descriptions may be given inline (a JSON object string) or as a
path to a JSON file. All other file arguments are paths. Failures
detected while assembling a ring from supplied tables are reported
under the name of the violated check ("pairing_nondegeneracy",
"lefschetz_range", or the specific ring axiom) with exit code 1, the
same way a failed verification is.
"""

import argparse
import json
import sys

from . import serialize
from .correspondences import act, compose, diagonal
from .equivariant import (
    GroupSpec,
    bottom_weight_restriction,
    equivariant_projective_torus,
    equivariant_trivial_action,
    lift_projectors,
    stabilization_check,
    verify_equivariant,
)
from .errors import (
    ChowKunnethError,
    DegeneratePairing,
    InvalidSpec,
    NonLefschetzRange,
    RingAxiomError,
)
from .kunneth import full_projectors, verify_ck
from .spaces import (
    barth_range,
    build_space,
    fano_delta,
    fano_delta_notes,
    kill_primitive_middle,
    rep_variety_dim,
)

__all__ = ["main"]


# -- shared plumbing -----------------------------------------------------------


def _spec_arg(text):
    """A space description: inline JSON object or a file path."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InvalidSpec(f"inline description is not well-formed JSON: {exc}")
    return serialize.read_document(text)


def _int_csv(text, flag):
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        try:
            out.append(int(part))
        except ValueError:
            raise InvalidSpec(f"{flag}: expected comma-separated integers, got {text!r}")
    if not out:
        raise InvalidSpec(f"{flag}: expected at least one integer")
    return out


def _report_wrapper(checks):
    return {"pass": all(e["pass"] for e in checks), "checks": checks}


def _residual_text(residual):
    parts = []
    for item in residual:
        labels, c = item[:-1], item[-1]
        if len(labels) == 1:
            parts.append(f"({c}) {labels[0]}")
        elif len(labels) == 2:
            parts.append(f"({c}) {labels[0]} x {labels[1]}")
        else:
            mono = "" if labels[2] == "1" else f" {labels[2]}"
            parts.append(f"({c}) {labels[0]} x {labels[1]}{mono}")
    return " + ".join(parts)


def _print_checks(checks):
    for e in checks:
        status = "PASS" if e["pass"] else "FAIL"
        line = f"{status} {e['check']}"
        indices = e.get("indices", [])
        if indices:
            line += " [" + ", ".join(str(i) for i in indices) + "]"
        if "basis_class" in e:
            line += f" on {e['basis_class']}"
        print(line)
        if not e["pass"]:
            if "residual_class" in e:
                print("  residual: " + _residual_text(e["residual_class"]))
            if "detail" in e:
                print("  " + e["detail"])
    passed = sum(1 for e in checks if e["pass"])
    print(f"{passed}/{len(checks)} checks passed")


def _write_out(args, doc):
    out = getattr(args, "out", None)
    if out:
        serialize.write_document(out, doc)


def _finish_verified(args, doc, checks):
    doc["report"] = _report_wrapper(checks)
    _print_checks(checks)
    _write_out(args, doc)
    return 0 if doc["report"]["pass"] else 1


def _group_from_flags(args):
    if args.rank < 1:
        raise InvalidSpec("--rank must be a positive integer")
    return GroupSpec(args.group, args.rank)


def _even_bound(value, flag):
    if value < 0 or value % 2:
        raise InvalidSpec(f"{flag} must be an even integer >= 0")
    return value


def _load_projector_file(path):
    return serialize.projector_set_from_document(
        serialize.read_document(path), where=path
    )


# -- subcommands ---------------------------------------------------------------


def _cmd_build(args):
    ring = build_space(_spec_arg(args.space))
    betti = [ring.rank(t) for t in range(2 * ring.dim + 1)]
    doc = {
        "space": serialize.space_document(ring),
        "dim": ring.dim,
        "rank": len(ring.basis),
        "betti": betti,
        "basis": [[label, degree] for label, degree in ring.basis],
    }
    print(
        f"built: dimension {ring.dim}, total rank {len(ring.basis)}, "
        "betti " + ",".join(str(b) for b in betti)
    )
    _write_out(args, doc)
    return 0


def _cmd_diagonal(args):
    ring = build_space(_spec_arg(args.space))
    delta = diagonal(ring)
    doc = serialize.correspondence_document(delta)
    print(
        f"diagonal: {len(delta.terms)} terms over a rank-{len(ring.basis)} ring, "
        f"degree shift {delta.shift}"
    )
    _write_out(args, doc)
    return 0


def _cmd_projectors(args):
    ring = build_space(_spec_arg(args.space))
    P = full_projectors(ring)
    doc = serialize.projector_set_document(P)
    indices = ", ".join(str(i) for i in P.indices())
    print(
        f"projectors at degrees [{indices}]"
        + (f"; remainder at {sorted(P.remainder_indices)}" if P.remainder_indices else "")
    )
    if args.verify:
        return _finish_verified(args, doc, verify_ck(P, jobs=args.jobs))
    _write_out(args, doc)
    return 0


def _cmd_verify(args):
    doc = serialize.read_document(args.input)
    if isinstance(doc, dict) and "model" in doc:
        family = serialize.family_from_document(doc, where=args.input)
        checks = verify_equivariant(family, jobs=args.jobs)
    elif isinstance(doc, dict) and "space" in doc:
        P = serialize.projector_set_from_document(doc, where=args.input)
        checks = verify_ck(P, jobs=args.jobs)
    else:
        raise InvalidSpec(
            f"{args.input}: not a projector document (expected a 'space' or 'model' field)"
        )
    _print_checks(checks)
    _write_out(args, _report_wrapper(checks))
    return 0 if all(e["pass"] for e in checks) else 1


def _cmd_compose(args):
    f = serialize.correspondence_from_document(
        serialize.read_document(args.first), where=args.first
    )
    g = serialize.correspondence_from_document(
        serialize.read_document(args.second), where=args.second
    )
    result = compose(f, g)
    doc = serialize.correspondence_document(result)
    print(
        f"composed (second after first): {len(result.terms)} terms, "
        f"degree shift {result.shift}"
    )
    _write_out(args, doc)
    return 0


def _cmd_act(args):
    corr = serialize.correspondence_from_document(
        serialize.read_document(args.correspondence), where=args.correspondence
    )
    source = corr.source
    raw = args.argument.strip()
    try:
        if raw.startswith("{"):
            try:
                coeffs = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise InvalidSpec(f"--argument is not well-formed JSON: {exc}")
            if not isinstance(coeffs, dict) or not coeffs:
                raise InvalidSpec("--argument must be a nonempty label -> coefficient object")
            vec = None
            for label, c in coeffs.items():
                if label not in source.label_index:
                    raise InvalidSpec(f"--argument: unknown source class {label!r}")
                part = source.basis_class(label).scale(
                    serialize.parse_fraction(c, f"--argument[{label}]")
                )
                vec = part if vec is None else vec + part
        else:
            if raw not in source.label_index:
                raise InvalidSpec(f"--argument: unknown source class {raw!r}")
            vec = source.basis_class(raw)
    except ValueError as exc:
        raise InvalidSpec(f"--argument: {exc}")
    image = act(corr, vec)
    items = sorted(image.label_dict().items())
    doc = {
        "degree": image.degree,
        "class": [[label, serialize.fraction_str(c)] for label, c in items],
    }
    text = " + ".join(f"({c}) {label}" for label, c in items) or "0"
    print(f"image in degree {image.degree}: {text}")
    _write_out(args, doc)
    return 0


def _make_model(args, base):
    group = _group_from_flags(args)
    _even_bound(args.bound, "--bound")
    if args.weights is not None:
        weights = _int_csv(args.weights, "--weights")
        if group != GroupSpec("multiplicative_torus", 1):
            raise InvalidSpec("--weights requires a rank-1 multiplicative torus")
        model = equivariant_projective_torus(weights, args.bound)
        if model.base != base:
            raise InvalidSpec(
                f"{len(weights)} weights act on a projective space of dimension "
                f"{len(weights) - 1}; the projector set lives elsewhere"
            )
        return model
    return equivariant_trivial_action(base, group, args.bound)


def _cmd_lift(args):
    if (args.input is None) == (args.space is None):
        raise InvalidSpec("pass exactly one of a projector file or --space")
    if args.space is not None:
        P = full_projectors(build_space(_spec_arg(args.space)))
    else:
        P = _load_projector_file(args.input)
    model = _make_model(args, P.ring)
    family = lift_projectors(P, model.group, model.N, model=model)
    doc = serialize.family_document(family)
    print(
        f"lifted {len(family.indices())} projectors into the bound-{model.N} model"
    )
    if args.verify:
        return _finish_verified(args, doc, verify_equivariant(family, jobs=args.jobs))
    _write_out(args, doc)
    return 0


def _cmd_stabilize(args):
    ring = build_space(_spec_arg(args.space))
    P = full_projectors(ring)
    group = _group_from_flags(args)
    _even_bound(args.n1, "--n1")
    _even_bound(args.n2, "--n2")
    if not 0 <= args.degrees <= args.n1 <= args.n2:
        raise InvalidSpec("bounds must satisfy 0 <= degrees <= n1 <= n2")
    ok = stabilization_check(ring, group, P, args.degrees, args.n1, args.n2)
    checks = [
        {
            "check": "stabilization",
            "indices": [args.degrees, args.n1, args.n2],
            "pass": ok,
        }
    ]
    _print_checks(checks)
    _write_out(args, _report_wrapper(checks))
    return 0 if ok else 1


def _cmd_restrict(args):
    doc = serialize.read_document(args.input)
    if isinstance(doc, dict) and "model" in doc:
        family = serialize.family_from_document(doc, where=args.input)
        restricted = bottom_weight_restriction(family.model, family)
        print("restricted the family along parameters -> 0")
    elif isinstance(doc, dict) and "space" in doc:
        P = serialize.projector_set_from_document(doc, where=args.input)
        _, q = kill_primitive_middle(P.ring)
        restricted = bottom_weight_restriction(q, P)
        print("transported the set along the primitive-middle-killing surjection")
    else:
        raise InvalidSpec(
            f"{args.input}: not a projector document (expected a 'space' or 'model' field)"
        )
    out_doc = serialize.projector_set_document(restricted)
    if args.verify:
        return _finish_verified(args, out_doc, verify_ck(restricted, jobs=args.jobs))
    _write_out(args, out_doc)
    return 0


def _cmd_formulas(args):
    if args.formula == "fano":
        degrees = _int_csv(args.degrees, "--degrees")
        value = fano_delta(args.n, degrees, args.r)
        notes = fano_delta_notes(args.n, degrees, args.r)
        print(f"delta = {value}")
        for note in notes:
            print(note)
        doc = {
            "formula": "fano_delta",
            "inputs": {"n": args.n, "degrees": degrees, "r": args.r},
            "value": value,
            "notes": notes,
        }
    elif args.formula == "rep":
        value = rep_variety_dim(args.g, args.n)
        print(f"dimension = {value}")
        doc = {
            "formula": "rep_variety_dim",
            "inputs": {"g": args.g, "n": args.n},
            "value": value,
        }
    else:
        value = barth_range(args.n, args.d)
        print(f"range = {value}")
        doc = {
            "formula": "barth_range",
            "inputs": {"n": args.n, "d": args.d},
            "value": value,
        }
    _write_out(args, doc)
    return 0


# -- parser --------------------------------------------------------------------


def _add_out(p):
    p.add_argument("--out", help="write the machine-readable JSON document here")


def _add_verify_flags(p):
    p.add_argument("--verify", action="store_true", help="run the exact checks")
    p.add_argument(
        "--jobs", type=int, default=None,
        help="evaluate independent checks on this many threads (same output)",
    )


def _add_group_flags(p):
    p.add_argument(
        "--group", choices=GroupSpec.KINDS, default="multiplicative_torus",
        help="acting group kind",
    )
    p.add_argument("--rank", type=int, default=1, help="group rank")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chowkunneth",
        description=(
            "Construct and verify exact projector decompositions of the "
            "diagonal for spaces given by finite rational cohomology tables."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a ring and print its shape")
    p.add_argument("--space", required=True, help="space description (inline JSON or path)")
    _add_out(p)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("diagonal", help="the diagonal self-correspondence")
    p.add_argument("--space", required=True, help="space description (inline JSON or path)")
    _add_out(p)
    p.set_defaults(func=_cmd_diagonal)

    p = sub.add_parser("projectors", help="construct the full projector set")
    p.add_argument("--space", required=True, help="space description (inline JSON or path)")
    _add_verify_flags(p)
    _add_out(p)
    p.set_defaults(func=_cmd_projectors)

    p = sub.add_parser("verify", help="verify a projector file (ordinary or lifted)")
    p.add_argument("input", help="projector set or family document")
    p.add_argument(
        "--jobs", type=int, default=None,
        help="evaluate independent checks on this many threads (same output)",
    )
    _add_out(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compose", help="compose two correspondence files")
    p.add_argument("first", help="applied first")
    p.add_argument("second", help="applied second; its source must match the first's target")
    _add_out(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("act", help="apply a correspondence to a class")
    p.add_argument("correspondence", help="correspondence document")
    p.add_argument(
        "--argument", required=True,
        help="a basis label, or an inline JSON object label -> coefficient",
    )
    _add_out(p)
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("lift", help="lift a projector set into a truncated model")
    p.add_argument("input", nargs="?", help="projector set document")
    p.add_argument("--space", help="build the set from this space instead")
    _add_group_flags(p)
    p.add_argument("--bound", type=int, required=True, help="even truncation bound N")
    p.add_argument("--weights", help="comma-separated torus weights (weighted model)")
    _add_verify_flags(p)
    _add_out(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("stabilize", help="compare lifts at two truncation bounds")
    p.add_argument("--space", required=True, help="space description (inline JSON or path)")
    _add_group_flags(p)
    p.add_argument("--degrees", type=int, required=True, help="compare through this degree")
    p.add_argument("--n1", type=int, required=True, help="smaller truncation bound")
    p.add_argument("--n2", type=int, required=True, help="larger truncation bound")
    _add_out(p)
    p.set_defaults(func=_cmd_stabilize)

    p = sub.add_parser(
        "restrict",
        help=(
            "restrict a lifted family to the base (parameters -> 0), or "
            "transport an ordinary set along the primitive-middle-killing surjection"
        ),
    )
    p.add_argument("input", help="projector set or family document")
    _add_verify_flags(p)
    _add_out(p)
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("formulas", help="closed-form dimension formulas")
    fsub = p.add_subparsers(dest="formula", required=True)

    q = fsub.add_parser("fano", help="expected Fano-scheme dimension bound")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--degrees", required=True, help="comma-separated degrees")
    q.add_argument("--r", type=int, required=True)
    _add_out(q)
    q.set_defaults(func=_cmd_formulas)

    q = fsub.add_parser("rep", help="surface-group representation variety dimension")
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    _add_out(q)
    q.set_defaults(func=_cmd_formulas)

    q = fsub.add_parser("barth", help="ambient-pinned cohomology range")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    _add_out(q)
    q.set_defaults(func=_cmd_formulas)

    return parser


def _math_failure(args, name, exc):
    checks = [{"check": name, "indices": [], "pass": False, "detail": str(exc)}]
    _print_checks(checks)
    _write_out(args, _report_wrapper(checks))
    return 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegeneratePairing as exc:
        return _math_failure(args, "pairing_nondegeneracy", exc)
    except RingAxiomError as exc:
        return _math_failure(args, exc.check, exc)
    except NonLefschetzRange as exc:
        return _math_failure(args, "lefschetz_range", exc)
    except ChowKunnethError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
