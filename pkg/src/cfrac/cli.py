"""Command-line surface: convergent tables, certified digits, certificates.

Subcommands: ``convergents``, ``digits``, ``certify``, ``verify``.  Data goes
to stdout (or ``--out FILE``); diagnostics go to stderr.  Exit codes: 0 on
success, 1 on domain errors (bad x/y, failed verification, digit cap), 2 on
usage errors (unknown flags, missing arguments, malformed certificate files).

Decimal rendering lives here and only here; the library underneath never
leaves exact rational arithmetic.  Digit strings are truncated, not rounded:
truncated digits are certifiable directly from a two-sided bound, and an
interval straddling a truncation boundary simply forces further refinement.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from pathlib import Path

from . import __version__
from .core import ConvergentState
from .errors import (
    CertificateFormatError,
    DepthCapError,
    DomainError,
    InvalidTermError,
    NonPositiveTermError,
    TailUnreachableError,
    ZeroScaleError,
)
from .expansions import e_simple_cf, exp_rational, tanh_integer_cf, tanh_rational
from .irrationality import (
    VERDICT_IRRATIONAL,
    VERDICT_NOT_APPLICABLE,
    IrrationalityCertificate,
    certify_irrational,
    verify_certificate,
)

MAX_DIGITS = 10_000

#: Canonical certificate schema: fixed key order, integers as decimal strings
#: so consumers without big integers cannot silently overflow.
CERTIFICATE_KEYS = (
    "x",
    "y",
    "reducedX",
    "reducedY",
    "tailIndex",
    "checkedPrefixDepth",
    "thresholdIndex",
    "verdict",
    "engineVersion",
)

PREVIEW_DIGITS = 20


@dataclass(frozen=True)
class DigitString:
    """A truncated decimal rendering whose digits are all certified correct."""

    sign: str
    integer_part: str
    fractional_part: str
    guaranteed_digits: int

    def render(self) -> str:
        prefix = "-" if self.sign == "-" else ""
        return f"{prefix}{self.integer_part}.{self.fractional_part}"


def decimal_preview(q: Fraction, sig: int = PREVIEW_DIGITS) -> str:
    """Truncated decimal with ``sig`` significant digits.  Display only."""
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    a, b = abs(q.numerator), q.denominator
    if a >= b:
        int_digits = len(str(a // b))
        places = max(sig - int_digits, 0)
        scaled = str(a * 10**places // b)
        if places == 0:
            return sign + scaled
        return sign + scaled[:-places] + "." + scaled[-places:]
    leading_zeros = 0
    while a * 10 ** (leading_zeros + 1) < b:
        leading_zeros += 1
    places = sig + leading_zeros
    scaled = str(a * 10**places // b).rjust(places, "0")
    return sign + "0." + scaled


def certified_digits(expr: str, x: int, y: int, digits: int) -> tuple[DigitString, int]:
    """Truncated decimal digits of e^(x/y) or tanh(x/y), all guaranteed.

    The evaluation tolerance is tightened until the certified interval
    [value - bound, value + bound] truncates to a single digit string, so
    every emitted digit is a correct digit of the true value.  Returns the
    digit string and the expansion depth that pinned it.
    """
    if not 1 <= digits <= MAX_DIGITS:
        raise DomainError(f"digits must be between 1 and {MAX_DIGITS}")
    evaluator = exp_rational if expr == "exp" else tanh_rational
    scale = 10**digits
    tol = Fraction(1, 10 ** (digits + 2))
    for _ in range(64):
        result = evaluator(x, y, tol)
        lo = result.value - result.error_bound
        hi = result.value + result.error_bound
        if lo > 0:
            n_lo = floor(lo * scale)
            if n_lo == floor(hi * scale):
                text = str(n_lo)
                integer_part = text[:-digits] if len(text) > digits else "0"
                fractional_part = text[-digits:].rjust(digits, "0")
                return DigitString("+", integer_part, fractional_part, digits), result.depth
        tol /= 10**4
    raise DomainError(f"could not pin {digits} digits for {expr}({x}/{y})")


def certificate_to_json(cert: IrrationalityCertificate) -> str:
    payload = {
        "x": str(cert.x),
        "y": str(cert.y),
        "reducedX": str(cert.reduced_x),
        "reducedY": str(cert.reduced_y),
        "tailIndex": str(cert.tail_index),
        "checkedPrefixDepth": str(cert.checked_prefix_depth),
        "thresholdIndex": str(cert.threshold_index),
        "verdict": cert.verdict,
        "engineVersion": __version__,
    }
    assert tuple(payload) == CERTIFICATE_KEYS
    return json.dumps(payload, indent=2) + "\n"


def certificate_from_json(text: str) -> IrrationalityCertificate:
    """Parse a serialized certificate, rejecting anything off-schema."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    missing = set(CERTIFICATE_KEYS) - payload.keys()
    if missing:
        raise CertificateFormatError(f"missing fields: {sorted(missing)}")
    unknown = payload.keys() - set(CERTIFICATE_KEYS)
    if unknown:
        raise CertificateFormatError(f"unknown fields: {sorted(unknown)}")

    def _int(key: str) -> int:
        value = payload[key]
        if not isinstance(value, str):
            raise CertificateFormatError(f"{key} must be a decimal string")
        try:
            return int(value)
        except ValueError as exc:
            raise CertificateFormatError(f"{key} is not an integer: {value!r}") from exc

    verdict = payload["verdict"]
    if verdict not in (VERDICT_IRRATIONAL, VERDICT_NOT_APPLICABLE):
        raise CertificateFormatError(f"unknown verdict: {verdict!r}")
    if not isinstance(payload["engineVersion"], str):
        raise CertificateFormatError("engineVersion must be a string")
    return IrrationalityCertificate(
        x=_int("x"),
        y=_int("y"),
        reduced_x=_int("reducedX"),
        reduced_y=_int("reducedY"),
        tail_index=_int("tailIndex"),
        checked_prefix_depth=_int("checkedPrefixDepth"),
        threshold_index=_int("thresholdIndex"),
        verdict=verdict,
    )


def certificate_to_text(cert: IrrationalityCertificate) -> str:
    lines = [
        f"x/y: {cert.x}/{cert.y} (reduced: {cert.reduced_x}/{cert.reduced_y})",
        f"verdict: {cert.verdict}",
    ]
    if cert.verdict == VERDICT_IRRATIONAL:
        lines += [
            f"tail index: {cert.tail_index}",
            f"threshold index: {cert.threshold_index}",
            f"checked prefix depth: {cert.checked_prefix_depth}",
        ]
    lines.append(f"statement: {cert.statement()}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _convergent_rows(cf, depth: int) -> list[dict]:
    state = ConvergentState.initial(cf.leading)
    rows = []
    prev = state.value
    for i in range(1, depth + 1):
        state = state.step(cf.term(i))
        value = state.value
        rows.append(
            {
                "index": i,
                "h": str(value.numerator),
                "k": str(value.denominator),
                "value": decimal_preview(value),
                "gap": str(abs(value - prev)),
            }
        )
        prev = value
    return rows


def _render_rows(rows: list[dict]) -> str:
    headers = {"index": "n", "h": "h", "k": "k", "value": "value", "gap": "gap"}
    cols = list(headers)
    widths = {
        c: max(len(headers[c]), *(len(str(row[c])) for row in rows)) for c in cols
    }
    lines = ["  ".join(headers[c].ljust(widths[c]) for c in cols).rstrip()]
    for row in rows:
        lines.append("  ".join(str(row[c]).ljust(widths[c]) for c in cols).rstrip())
    return "\n".join(lines) + "\n"


def cmd_convergents(args) -> int:
    if args.expansion == "tanh":
        if args.x is None or args.y is None:
            args.parser.error("--expansion tanh requires --x and --y")
        cf = tanh_integer_cf(args.x, args.y)
    else:
        cf = e_simple_cf()
    if args.depth < 1:
        raise DomainError("depth must be >= 1")
    rows = _convergent_rows(cf, args.depth)
    if args.format == "json":
        payload = {"expansion": args.expansion, "depth": args.depth, "convergents": rows}
        if args.expansion == "tanh":
            payload["x"] = str(args.x)
            payload["y"] = str(args.y)
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = _render_rows(rows)
    _emit(text, args.out)
    return 0


def cmd_digits(args) -> int:
    digit_string, depth = certified_digits(args.expr, args.x, args.y, args.digits)
    if args.format == "json":
        payload = {
            "expr": args.expr,
            "x": str(args.x),
            "y": str(args.y),
            "value": digit_string.render(),
            "sign": digit_string.sign,
            "integerPart": digit_string.integer_part,
            "fractionalPart": digit_string.fractional_part,
            "guaranteedDigits": digit_string.guaranteed_digits,
            "cfDepth": depth,
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = (
            f"{digit_string.render()}\n"
            f"guaranteed digits: {digit_string.guaranteed_digits}\n"
            f"expansion depth: {depth}\n"
        )
    _emit(text, args.out)
    return 0


def cmd_certify(args) -> int:
    cert = certify_irrational(args.x, args.y)
    text = certificate_to_json(cert) if args.format == "json" else certificate_to_text(cert)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        raw = Path(args.certificate).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read certificate: {exc}", file=sys.stderr)
        return 2
    cert = certificate_from_json(raw)
    depth = args.depth if args.depth is not None else cert.checked_prefix_depth
    outcome = verify_certificate(cert, depth)
    if outcome:
        print(f"certificate verified to depth {depth}: {cert.statement()}")
        return 0
    print(f"verification failed: {outcome.reason}", file=sys.stderr)
    if outcome.failed_index is not None:
        print(f"violated index: {outcome.failed_index}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfrac",
        description="Exact continued fractions: convergents, certified digits, irrationality certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convergents", help="table of exact convergents")
    p.add_argument("--expansion", choices=("e", "tanh"), required=True)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convergents, parser=p)

    p = sub.add_parser("digits", help="certified decimal digits of exp(x/y) or tanh(x/y)")
    p.add_argument("--expr", choices=("exp", "tanh"), required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_digits, parser=p)

    p = sub.add_parser("certify", help="emit an irrationality certificate for tanh(x/y) and e^(x/y)")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify, parser=p)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("certificate", help="path to a JSON certificate")
    p.add_argument("--depth", type=int)
    p.set_defaults(func=cmd_verify, parser=p)

    return parser


def run(argv=None) -> int:
    """Dispatch a command line; returns the exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except CertificateFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        DomainError,
        NonPositiveTermError,
        InvalidTermError,
        TailUnreachableError,
        ZeroScaleError,
        DepthCapError,
        ZeroDivisionError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
