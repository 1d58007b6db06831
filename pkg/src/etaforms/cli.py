"""Command-line front end: expansions, class groups, prime classification, Hecke images, coefficients, verification."""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .bqf import Form, discriminant, enumerate_class_group, genus_characters, GENUS_CHARACTERS
from .formulas import (
    COMPLETIONS,
    LEVELS,
    TARGETS,
    classify_prime,
    coefficient,
    completion_series,
    completion_tag,
    oracle_coefficient,
    target_series,
)
from .hecke import apply_Tp, eigen_check
from .qseries import EtaQuotientSpec, QSeries, eta_quotient, theta_form
from .verify import SUITES, run_suite

DEFAULT_ORDER = 400


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def parse_form(text: str) -> Form:
    try:
        a, b, c = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b,c but got {text!r}")
    f = Form(a, b, c)
    if a <= 0 or discriminant(f) >= 0:
        raise argparse.ArgumentTypeError(f"{text} is not positive definite")
    return f


def parse_eta(text: str) -> EtaQuotientSpec:
    """J:S^R,S^R,... for q^J prod E(q^S)^R (R defaults to 1)."""
    try:
        j, _, body = text.partition(":")
        factors = []
        for item in filter(None, body.split(",")):
            s, _, r = item.partition("^")
            factors.append((int(s), int(r) if r else 1))
        return EtaQuotientSpec.combine(int(j), factors)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad eta-quotient {text!r}: {exc}")


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _output_options() -> argparse.ArgumentParser:
    # accepted before or after the subcommand; defaults are filled in after parsing
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS, help="write output to PATH instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="etaforms", description=__doc__, parents=[_output_options()])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", parents=[_output_options()], help="q-expansion of an eta-quotient, theta series or completion")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--eta", type=parse_eta, metavar="J:S^R,...")
    src.add_argument("--form", type=parse_form, metavar="a,b,c")
    src.add_argument("--target", choices=sorted(TARGETS))
    src.add_argument("--completion", choices=COMPLETIONS + ("47", "71"))
    p.add_argument("--order", type=_positive)

    p = sub.add_parser("classgroup", parents=[_output_options()], help="reduced forms, structure and genera")
    p.add_argument("--disc", type=int, required=True)

    p = sub.add_parser("classify", parents=[_output_options()], help="which class pair represents a prime")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--p", type=_positive, required=True)

    p = sub.add_parser("hecke", parents=[_output_options()], help="apply T_p to a theta series or completion")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--p", type=_positive, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--form", type=parse_form, metavar="a,b,c")
    src.add_argument("--completion", choices=COMPLETIONS + ("47", "71"))
    p.add_argument("--order", type=_positive)

    p = sub.add_parser("coeff", parents=[_output_options()], help="closed-form coefficient for a level")
    p.add_argument("--level", type=int, choices=LEVELS, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--check", action="store_true", help="compare against the direct expansion")

    p = sub.add_parser("verify", parents=[_output_options()], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--order", type=_positive)
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def _order(args) -> int | None:
    if getattr(args, "order", None) is not None:
        return args.order
    env = os.environ.get("ETAFORMS_ORDER")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"ETAFORMS_ORDER must be an integer, got {env!r}")
        if n < 1:
            raise UsageError("ETAFORMS_ORDER must be >= 1")
        return n
    return None


def _series_lines(s: QSeries, fmt: str) -> list[str]:
    return s.to_records() if fmt == "records" else [s.to_text()]


def cmd_expand(args) -> tuple[int, list[str]]:
    N = _order(args) or DEFAULT_ORDER
    if args.eta is not None:
        s = eta_quotient(args.eta, N)
    elif args.form is not None:
        s = theta_form(args.form, N)
    elif args.target is not None:
        s = target_series(args.target, N)
    else:
        s = completion_series(args.completion, N)
    return 0, _series_lines(s, args.format)


def cmd_classgroup(args) -> tuple[int, list[str]]:
    cg = enumerate_class_group(args.disc)
    chars = GENUS_CHARACTERS.get(args.disc)
    lines = []
    if args.format == "text":
        lines.append(f"CL({args.disc}) = {cg.structure_name()}, h = {cg.order}")
    for f in cg.classes:
        genus = ""
        if chars is not None:
            genus = " ".join(f"{v:+d}" for v in genus_characters(f, chars))
        if args.format == "records":
            lines.append(f"disc={args.disc} form={f} order={cg.element_order(f)} genus={genus.replace(' ', ',')}")
        else:
            lines.append(f"{str(f):<16} order {cg.element_order(f):<3} {genus}".rstrip())
    return 0, lines


def cmd_classify(args) -> tuple[int, list[str]]:
    cl = classify_prime(args.disc, args.p)
    if args.format == "records":
        fields = {
            "disc": cl.discriminant,
            "p": cl.prime,
            "verdict": cl.verdict,
            "form": cl.form,
            "s_index": cl.s_index,
            "witness": None if cl.witness is None else "{},{}".format(*cl.witness),
            "method": cl.method,
        }
        return 0, [" ".join(f"{k}={v}" for k, v in fields.items() if v is not None)]
    return 0, [str(cl)]


def cmd_hecke(args) -> tuple[int, list[str]]:
    N = _order(args) or DEFAULT_ORDER
    if args.form is not None:
        if discriminant(args.form) != args.disc:
            raise UsageError(f"form {args.form} has discriminant {discriminant(args.form)}, not {args.disc}")
        s = theta_form(args.form, N)
    else:
        s = completion_series(completion_tag(args.completion), N)
    image = apply_Tp(s, args.disc, args.p)
    try:
        ev = eigen_check(s, args.disc, args.p)
    except ValueError:
        ev = None
    verdict = "none" if ev is None else str(ev)
    if args.format == "records":
        return 0, image.to_records() + [f"eigenvalue={verdict}"]
    return 0, [f"image: {image.to_text()}", f"eigenvalue: {verdict}"]


def cmd_coeff(args) -> tuple[int, list[str]]:
    value = coefficient(args.level, args.n)
    if not args.check:
        if args.format == "records":
            return 0, [f"level={args.level} n={args.n} formula={value}"]
        return 0, [str(value)]
    oracle = oracle_coefficient(args.level, args.n)
    ok = value == oracle
    verdict = "PASS" if ok else "FAIL"
    if args.format == "records":
        line = f"level={args.level} n={args.n} formula={value} oracle={oracle} verdict={verdict}"
    else:
        line = f"formula={value} oracle={oracle} {verdict}"
    return (0 if ok else 1), [line]


def cmd_verify(args) -> tuple[int, list[str]]:
    reports = run_suite(args.suite, _order(args), jobs=args.jobs)
    lines = []
    for r in reports:
        if args.format == "records":
            params = ",".join(str(p) for p in r.params)
            line = f"name={r.name} params={params} order={r.order} verdict={r.verdict}"
            if r.first_discrepancy is not None:
                n, lhs, rhs = r.first_discrepancy
                line += f" index={n} lhs={lhs} rhs={rhs}"
            lines.append(line)
        else:
            lines.append(r.line())
    failed = sum(not r.passed for r in reports)
    if args.format == "text":
        lines.append(f"{len(reports)} checks, {failed} failed")
    return (1 if failed else 0), lines


COMMANDS = {
    "expand": cmd_expand,
    "classgroup": cmd_classgroup,
    "classify": cmd_classify,
    "hecke": cmd_hecke,
    "coeff": cmd_coeff,
    "verify": cmd_verify,
}


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        args.format = getattr(args, "format", "text")
        args.out = getattr(args, "out", None)
        code, lines = COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return 0 if not exc.code else 2
    except ValueError as exc:
        print(f"etaforms: error: {exc}", file=stderr)
        return 2
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
