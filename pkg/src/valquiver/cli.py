"""Command line front end.

Every subcommand takes a quiver file first; output is ``key=value`` or bare
data lines.  Library errors exit with status 1 after printing
``error=<code>``; usage errors exit with status 2.
"""
from __future__ import annotations

import argparse
import sys

from . import oracles
from .cartan import cartan_matrix, is_finite_type, symmetrizer
from .errors import NotASink, QuiverError, UnorientedEdge
from .fileformat import load_quiver
from .preprojective import dim_of_sequence, enumerate_classes, realizable, realizing_witness
from .sequences import (
    canonical_form,
    is_equivalent,
    join,
    meet,
    multiplicity,
    principal_sequence,
    validate_admissible,
)
from .weyl import coxeter_power_lengths, is_reduced, word_length


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _vec(v) -> str:
    return " ".join(map(str, v))


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _orientation(qf):
    if qf.orientation is None:
        raise UnorientedEdge("quiver file has no arrow lines")
    return qf.orientation


def cmd_validate(qf, args):
    g = qf.graph
    out = ["ok=true", f"n={g.n}", f"symmetrizer={_vec(symmetrizer(g).d)}",
           f"finite_type={_bool(is_finite_type(g))}"]
    if qf.orientation is not None:
        out.append("orientation=" + " ".join(f"{s}->{e}" for s, e in qf.orientation.arrows))
    return out


def cmd_cartan(qf, args):
    return [_vec(row) for row in cartan_matrix(qf.graph).a]


def cmd_word_reduced(qf, args):
    return [f"reduced={_bool(is_reduced(cartan_matrix(qf.graph), args.letters))}"]


def cmd_word_length(qf, args):
    return [f"length={word_length(cartan_matrix(qf.graph), args.letters)}"]


def cmd_seq_validate(qf, args):
    s = validate_admissible(_orientation(qf), args.letters)
    return ["ok=true", f"length={len(s)}", f"multiplicity={_vec(multiplicity(s))}"]


def cmd_seq_canon(qf, args):
    return [str(canonical_form(validate_admissible(_orientation(qf), args.letters)))]


def _pair(qf, args):
    o = _orientation(qf)
    return validate_admissible(o, args.s), validate_admissible(o, args.t)


def cmd_seq_equiv(qf, args):
    return [f"equivalent={_bool(is_equivalent(*_pair(qf, args)))}"]


def cmd_seq_meet(qf, args):
    return [str(meet(*_pair(qf, args)))]


def cmd_seq_join(qf, args):
    return [str(join(*_pair(qf, args)))]


def cmd_seq_principal(qf, args):
    return [str(principal_sequence(_orientation(qf), args.r, args.x))]


def cmd_seq_realizable(qf, args):
    s = validate_admissible(_orientation(qf), args.letters)
    witness = realizing_witness(s)
    out = [f"realizable={_bool(realizable(s))}"]
    if witness is None:
        out.append("witness=none")
    else:
        out.append("witness=" + " ".join(f"{r},{x}" for r, x in witness))
    return out


def cmd_preproj_dim(qf, args):
    s = validate_admissible(_orientation(qf), args.letters)
    trace = dim_of_sequence(cartan_matrix(qf.graph), s)
    out = [f"{pos} {x} : {_vec(v)}" for pos, x, v in trace.steps()]
    out.append(f"dim={_vec(trace.dim)}" if trace.positive else f"zero_at={trace.zero_at}")
    return out


def cmd_preproj_enum(qf, args):
    return [str(c) for c in enumerate_classes(_orientation(qf), args.max_r)]


def cmd_coxeter_powers(qf, args):
    a = cartan_matrix(qf.graph)
    lengths = coxeter_power_lengths(a, args.perm, args.max_m)
    out = [f"m={m} len={ln} expected={m * a.n}" for m, ln in enumerate(lengths, start=1)]
    all_match = all(ln == m * a.n for m, ln in enumerate(lengths, start=1))
    out.append(f"weyl_infinite_consistent={_bool(all_match != is_finite_type(qf.graph))}")
    return out


def cmd_oracle(qf, args):
    if args.what == "bfs":
        table = oracles.bfs_lengths(cartan_matrix(qf.graph), args.cap)
        return [f"status={table.status()}", f"elements={len(table.lengths)}",
                f"max_length={table.max_length}"]
    o = _orientation(qf)
    if args.what == "enum":
        return [_vec(s) for s in oracles.enumerate_admissible(o, args.max_len)]
    validate_admissible(o, args.letters)
    return [_vec(s) for s in sorted(oracles.equivalence_closure(o, args.letters))]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valquiver",
        description="Valued quivers, admissible sequences and Weyl group words.",
    )
    visible = ("validate cartan word-reduced word-length seq-validate seq-canon seq-equiv "
               "seq-meet seq-join seq-principal seq-realizable preproj-dim preproj-enum "
               "coxeter-powers help").split()
    sub = parser.add_subparsers(dest="command", required=True, metavar="{" + ",".join(visible) + "}")

    def add(name, func, help_text=None, letters=False):
        kwargs = {"help": help_text} if help_text else {}
        p = sub.add_parser(name, **kwargs)
        p.add_argument("quiver", help="quiver file")
        if letters:
            p.add_argument("letters", nargs="*", type=int, help="vertices, x_1 first")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a quiver file")
    add("cartan", cmd_cartan, "print the Cartan matrix")
    add("word-reduced", cmd_word_reduced, "is the word reduced", letters=True)
    add("word-length", cmd_word_length, "length of the word's element", letters=True)
    add("seq-validate", cmd_seq_validate, "check admissibility", letters=True)
    add("seq-canon", cmd_seq_canon, "canonical form", letters=True)
    for name, func in (("seq-equiv", cmd_seq_equiv), ("seq-meet", cmd_seq_meet),
                       ("seq-join", cmd_seq_join)):
        p = add(name, func, name[4:] + " of two sequences")
        p.add_argument("--s", nargs="*", type=int, default=[], required=True)
        p.add_argument("--t", nargs="*", type=int, default=[], required=True)
    p = add("seq-principal", cmd_seq_principal, "principal sequence S_{r,x}")
    p.add_argument("r", type=_positive_int)
    p.add_argument("x", type=_positive_int)
    add("seq-realizable", cmd_seq_realizable, "is S the shortest sequence of a module",
        letters=True)
    add("preproj-dim", cmd_preproj_dim, "positivity trace of M(S)", letters=True)
    p = add("preproj-enum", cmd_preproj_enum, "list preprojective classes")
    p.add_argument("--max-r", type=_positive_int, required=True)
    p = add("coxeter-powers", cmd_coxeter_powers, "lengths of Coxeter element powers")
    p.add_argument("--perm", nargs="+", type=int, required=True)
    p.add_argument("--max-m", type=_positive_int, required=True)

    p = sub.add_parser("help", help="show help for a subcommand")
    p.add_argument("topic", nargs="?", choices=visible[:-1])
    p.set_defaults(func=None, commands=sub.choices)

    p = add("oracle", cmd_oracle)
    p.add_argument("what", choices=["bfs", "enum", "closure"])
    p.add_argument("letters", nargs="*", type=int)
    p.add_argument("--cap", type=_positive_int, default=10_000)
    p.add_argument("--max-len", type=int, default=4)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.func is None:
        target = parser
        if args.topic:
            target = args.commands[args.topic]
        print(target.format_help(), end="", file=out)
        return 0
    try:
        qf = load_quiver(args.quiver)
        lines = args.func(qf, args)
    except QuiverError as exc:
        print(f"error={exc.code}", file=out)
        if isinstance(exc, NotASink):
            print(f"position={exc.position}", file=out)
        print(f"message={exc}", file=sys.stderr)
        return 1
    for line in lines:
        print(line, file=out)
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
