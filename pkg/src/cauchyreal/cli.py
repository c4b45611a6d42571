"""Command-line evaluator: exact enclosures, fuel-bounded sign and comparison.

Output is line-oriented key=value pairs on stdout; errors go to stderr in the
same shape.  Exit codes: 0 for a computed verdict (including unknown), 1 for
input that does not parse, 2 for a division that cannot certify its
denominator apart from zero.
"""

import argparse
import sys

from dataclasses import dataclass
from fractions import Fraction

from .expressions import ParseError, WitnessSearchError, build_real, parse
from .partiality import PENDING
from .rational import dyadic, format_rat
from .reals import compare_partial, is_positive

EXIT_OK = 0
EXIT_SYNTAX = 1
EXIT_WITNESS = 2


@dataclass(frozen=True)
class Enclosure:
    """An exact rational interval certified to contain a real."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, q):
        return self.lo <= q <= self.hi


def evaluate_enclosure(text, prec_exponent, witness_fuel=None):
    """Parse text and enclose its value within radius 2**-prec_exponent.

    Returns the midpoint's enclosure [m - eps, m + eps] where m is the
    eps-approximant; both endpoints are exact rationals.
    """
    if witness_fuel is None:
        witness_fuel = max(64, prec_exponent + 8)
    point = build_real(parse(text), witness_fuel)
    eps = dyadic(prec_exponent)
    mid = point.approximate(eps)
    return Enclosure(mid - eps, mid + eps)


def decimal_digits(prec_exponent):
    """Fractional digits needed to resolve 2**-prec_exponent: ceil(k*log10(2)).

    Computed exactly as the digit count of 2**k (log10(2) is irrational, so
    the ceiling never lands on an integer for k >= 1).
    """
    if prec_exponent <= 0:
        return 0
    return len(str(2 ** prec_exponent))


def format_decimal(q, digits, round_up):
    """q as a decimal string with the given fractional digits.

    Rounds toward -inf when round_up is false and toward +inf otherwise, so
    rendering an interval's endpoints outward keeps the printed interval an
    enclosure.  Display only; the rational endpoints are the authority.
    """
    scaled = Fraction(q) * 10 ** digits
    if round_up:
        n = -((-scaled.numerator) // scaled.denominator)
    else:
        n = scaled.numerator // scaled.denominator
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return sign + str(n)
    s = str(n).rjust(digits + 1, "0")
    return "%s%s.%s" % (sign, s[:-digits], s[-digits:])


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse's default exit code for usage errors collides with the
    # witness-failure code; fold usage problems into the syntax exit code.
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _ArgumentParser(prog="creal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression to an enclosure")
    p_eval.add_argument("expr")
    p_eval.add_argument("--prec", type=int, default=64, metavar="K",
                        help="enclosure radius 2**-K (default 64)")
    p_eval.add_argument("--witness-fuel", type=int, default=None, metavar="N",
                        help="division witness search budget (default max(64, K+8))")
    p_eval.add_argument("--format", choices=["rational", "decimal", "both"],
                        default="both", dest="fmt")

    p_sign = sub.add_parser("sign", help="semi-decide the sign of an expression")
    p_sign.add_argument("expr")
    p_sign.add_argument("--fuel", type=int, default=256, metavar="N",
                        help="sign search budget (default 256)")
    p_sign.add_argument("--witness-fuel", type=int, default=None, metavar="N")

    p_cmp = sub.add_parser("compare", help="semi-decide the order of two expressions")
    p_cmp.add_argument("a")
    p_cmp.add_argument("b")
    p_cmp.add_argument("--fuel", type=int, default=256, metavar="N")
    p_cmp.add_argument("--witness-fuel", type=int, default=None, metavar="N")

    return parser


def cmd_eval(expr, prec, witness_fuel, fmt, out):
    enclosure = evaluate_enclosure(expr, prec, witness_fuel)
    out.write("eps=%s\n" % format_rat(dyadic(prec)))
    if fmt in ("rational", "both"):
        out.write("lo=%s\n" % format_rat(enclosure.lo))
        out.write("hi=%s\n" % format_rat(enclosure.hi))
    if fmt in ("decimal", "both"):
        digits = decimal_digits(prec)
        out.write("lo.decimal=%s\n" % format_decimal(enclosure.lo, digits, False))
        out.write("hi.decimal=%s\n" % format_decimal(enclosure.hi, digits, True))
    return EXIT_OK


def cmd_sign(expr, fuel, witness_fuel, out):
    if witness_fuel is None:
        witness_fuel = max(64, fuel + 8)
    point = build_real(parse(expr), witness_fuel)
    outcome = is_positive(point).run(fuel)
    if outcome is PENDING:
        verdict = "unknown"
    else:
        verdict = "positive" if outcome.value else "negative"
    out.write("verdict=%s\n" % verdict)
    out.write("fuel=%d\n" % fuel)
    return EXIT_OK


def cmd_compare(a, b, fuel, witness_fuel, out):
    if witness_fuel is None:
        witness_fuel = max(64, fuel + 8)
    x = build_real(parse(a), witness_fuel)
    y = build_real(parse(b), witness_fuel)
    # Both orientations run at the same fuel; soundness of the strict
    # comparison means at most one can fire.
    forward = compare_partial(x, y).run(fuel)
    if forward is not PENDING:
        verdict = "lt" if forward.value else "gt"
    else:
        verdict = "unknown"
    out.write("verdict=%s\n" % verdict)
    out.write("fuel=%d\n" % fuel)
    return EXIT_OK


def main(argv=None, out=None, err=None):
    """Entry point; returns the exit code instead of raising SystemExit."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write("error=usage\n")
        err.write("message=%s\n" % exc)
        return EXIT_SYNTAX
    try:
        if args.command == "eval":
            return cmd_eval(args.expr, args.prec, args.witness_fuel, args.fmt, out)
        if args.command == "sign":
            return cmd_sign(args.expr, args.fuel, args.witness_fuel, out)
        return cmd_compare(args.a, args.b, args.fuel, args.witness_fuel, out)
    except ParseError as exc:
        err.write("error=syntax\n")
        err.write("position=%d\n" % exc.position)
        err.write("message=%s\n" % exc)
        return EXIT_SYNTAX
    except WitnessSearchError as exc:
        err.write("error=witness\n")
        err.write("fuel=%d\n" % exc.fuel)
        err.write("message=%s\n" % exc)
        return EXIT_WITNESS


def console_main():
    sys.exit(main())
