"""
cli.py
======

Command-line front end for the lifting pipelines, enumerations and
ring-condition checkers.

Every subcommand writes a single JSON document to stdout.  The document
echoes the resolved request under ``"request"`` and is serialised with
sorted keys, so identical requests give byte-identical output.  Exit codes:

* ``0``: success, or a verdict that holds;
* ``1``: a verdict that fails;
* ``2``: malformed input, a guard violation or a contract violation; the
  document then carries ``{"error": {"code": ..., "message": ...}}``.

Example
-------
    python -m src.cli surjectivity --group sl --k 1 --ideals 2,3 --level 5 --weights "1,1;1,1"
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from .conditions import (
    lemma41_check,
    sap_check_small,
    sap_ge_converse_check,
    usc_check_finite,
    usc_refute_poly_example,
    usc_refute_zero_ideal,
    usc_witness,
)
from .config import Settings, using_config
from .errors import CongruenceLiftError, MalformedInputError
from .groups import RMatrix, elementary_decompose, enumerate_sl, ge_closure, gl_decompose, word_to_matrix
from .lifting import GroupKind, LiftCertificate, omega_lift, sigma_lift, verify_certificate
from .lifting.surjectivity import surjectivity
from .logging_setup import configure_logging
from .projective import WeightVector, canon, enumerate_pf, integer_ideal, make_point
from .rings import BaseRing, ProductRing, QuotRing

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports problems as :class:`MalformedInputError`."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise MalformedInputError(message)


# ----------------------------------------------------------------------
# Flat argument encodings
# ----------------------------------------------------------------------


def parse_int_list(text: str) -> List[int]:
    """``"2,3"`` -> ``[2, 3]``."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise MalformedInputError(f"expected comma-separated integers, got {text!r}") from exc


def parse_rows(text: str) -> List[List[int]]:
    """``"1,2;3,1"`` -> ``[[1, 2], [3, 1]]``."""
    rows = [parse_int_list(chunk) for chunk in text.split(";") if chunk.strip()]
    if not rows:
        raise MalformedInputError(f"expected semicolon-separated rows, got {text!r}")
    return rows


def parse_weights(text: str) -> List[WeightVector]:
    """``"1,1;1,2"`` -> one weight vector per row."""
    try:
        return [WeightVector.parse(chunk) for chunk in text.split(";") if chunk.strip()]
    except CongruenceLiftError:
        raise
    except ValueError as exc:
        raise MalformedInputError(f"malformed weights {text!r}: {exc}") from exc


def _quotient(modulus: int) -> QuotRing:
    return QuotRing.integers_mod(modulus)


def _read_document(path: str, stdin: TextIO) -> Dict[str, Any]:
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedInputError("a certificate document must be a JSON object")
    return data


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------
# Each handler returns (payload, verdict); ``None`` means no verdict.


def _lift(args: argparse.Namespace, settings: Settings, lift: Callable[..., LiftCertificate]):
    certificate = lift(parse_rows(args.rows), parse_int_list(args.ideals), args.level)
    return {"certificate": certificate.to_json(), "valid": certificate.valid}, certificate.valid


def cmd_lift_sl(args: argparse.Namespace, settings: Settings):
    return _lift(args, settings, omega_lift)


def cmd_lift_sp(args: argparse.Namespace, settings: Settings):
    return _lift(args, settings, sigma_lift)


def cmd_pf_enum(args: argparse.Namespace, settings: Settings):
    weights = WeightVector.parse(args.weights) if args.weights else WeightVector.ones(args.k + 1)
    points = enumerate_pf(args.k, weights, integer_ideal(args.ideal), guard=settings.pf_tuples)
    payload: Dict[str, Any] = {"count": len(points)}
    if not args.count_only:
        payload["points"] = [p.to_json() for p in points]
    return payload, None


def cmd_pf_canon(args: argparse.Namespace, settings: Settings):
    rep = parse_int_list(args.rep)
    weights = WeightVector.parse(args.weights) if args.weights else WeightVector.ones(len(rep))
    point = make_point(rep, integer_ideal(args.ideal), weights)
    return {"point": point.to_json(), "canonical": canon(point).to_json()}, None


def cmd_usc_check(args: argparse.Namespace, settings: Settings):
    moduli = parse_int_list(args.moduli)
    generators = parse_int_list(args.ideal)
    if len(moduli) != len(generators):
        raise MalformedInputError(f"{len(moduli)} factors but {len(generators)} ideal generators")
    ring = ProductRing.of(*(_quotient(m) for m in moduli))
    report = usc_check_finite(
        ring,
        generators,
        max_set_size=args.max_set_size or settings.usc_max_set_size,
        guard=settings.usc_candidates,
        n_jobs=settings.n_jobs,
    )
    return report.to_json(), report.verdict


def cmd_usc_witness(args: argparse.Namespace, settings: Settings):
    if args.poly_example is not None:
        record = usc_refute_poly_example(args.poly_example, guard=settings.usc_candidates)
        # the set {x, 3x^2 - 1} is unital, so a confirmed refutation is a failing USC verdict
        return {"refutation": record, "usc_holds": not record["all_non_units"]}, not record["all_non_units"]
    if not args.set:
        raise MalformedInputError("usc-witness needs --set or --poly-example")
    values = parse_int_list(args.set)
    if len(values) < 2:
        raise MalformedInputError("a unital set needs at least two elements")
    if args.ideal == 0:
        refutation = usc_refute_zero_ideal(values[0], values[1:])
        return {"refutation": refutation.to_json(), "usc_holds": not refutation.refuted}, not refutation.refuted
    witness = usc_witness(values[0], values[1:], integer_ideal(args.ideal))
    return {"witness": witness.to_json(), "recheck": witness.recheck(), "usc_holds": True}, witness.recheck()


def cmd_sap_check(args: argparse.Namespace, settings: Settings):
    if args.converse:
        if GroupKind(args.group) is not GroupKind.SL:
            raise MalformedInputError("--converse only applies to --group sl")
        report = sap_ge_converse_check(args.modulus, args.k + 1, guard=settings.group_candidates, n_jobs=settings.n_jobs)
    else:
        report = sap_check_small(args.group, args.k, args.modulus, guard=settings.group_candidates, n_jobs=settings.n_jobs)
    return report.to_json(), report.verdict


def cmd_ge_decompose(args: argparse.Namespace, settings: Settings):
    ring = BaseRing.integers() if args.modulus == 0 else _quotient(args.modulus)
    matrix = RMatrix.from_values(ring, parse_rows(args.matrix))
    payload: Dict[str, Any] = {"matrix": matrix.to_json()}
    if args.gl:
        word, d = gl_decompose(matrix)
        payload["determinant"] = d.to_json()
        rows = [list(r) for r in word_to_matrix(word).rows]
        rows[-1] = [e * d for e in rows[-1]]
        reproduced = RMatrix(ring, tuple(tuple(r) for r in rows))
    else:
        word = elementary_decompose(matrix)
        reproduced = word_to_matrix(word)
    payload["word"] = word.to_json()
    payload["length"] = len(word)
    payload["reproduces"] = reproduced == matrix
    return payload, payload["reproduces"]


def cmd_ge_check(args: argparse.Namespace, settings: Settings):
    q = _quotient(args.modulus)
    closure = ge_closure(q, args.n, cap=settings.closure_elements, strict=True)
    group = enumerate_sl(q, args.n, guard=settings.group_candidates)
    verdict = closure.matrices == frozenset(group)
    return {
        "ring": str(q),
        "n": args.n,
        "closure_size": closure.size,
        "group_order": len(group),
        "verdict": verdict,
    }, verdict


def cmd_lemma41_check(args: argparse.Namespace, settings: Settings):
    ideals = parse_int_list(args.ideals)
    if len(ideals) != 2:
        raise MalformedInputError(f"expected exactly two ideals, got {args.ideals!r}")
    first, second = ideals
    report = lemma41_check(
        first,
        second,
        kind=args.group,
        k=args.k,
        samples=args.samples or settings.samples,
        seed=args.seed,
        guard=settings.group_candidates,
    )
    return report.to_json(), report.verdict


def cmd_verify(args: argparse.Namespace, settings: Settings, stdin: Optional[TextIO] = None):
    data = _read_document(args.certificate, stdin or sys.stdin)
    # accept the full output of lift-sl / lift-sp as well as a bare certificate
    data = data.get("result", data)
    if not isinstance(data, dict):
        raise MalformedInputError("the result of a lift document must be a JSON object")
    data = data.get("certificate", data)
    certificate = LiftCertificate.from_json(data)
    ok = verify_certificate(certificate)
    return {"valid": ok, "group": data.get("group")}, ok


def cmd_surjectivity(args: argparse.Namespace, settings: Settings):
    kind = GroupKind(args.group)
    report = surjectivity(
        kind,
        args.k,
        parse_int_list(args.ideals),
        args.level,
        parse_weights(args.weights),
        samples=args.samples,
        seed=args.seed,
        n_jobs=settings.n_jobs,
    )
    return report.to_json(include_certificates=args.certificates), report.verdict


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def _add_group(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--group', choices=[g.value for g in GroupKind], default=GroupKind.SL.value,
                        help='Group family: sl for SL_{k+1}, sp for Sp_{2k}')
    parser.add_argument('--k', type=int, default=1, help='Rank parameter k')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='congruence-lift',
                     description='Exact lifting into congruence subgroups and small-ring checkers')
    parser.add_argument('--config', type=str, default=None,
                        help='Path to a YAML file overriding config/default.yaml')
    parser.add_argument('--log-level', type=str, default=None,
                        help='Log level for stderr output (overrides the configuration)')
    parser.add_argument('--timings', action='store_true',
                        help='Keep timing and memory statistics in the output')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    for name, handler, help_text in (
        ('lift-sl', cmd_lift_sl, 'Lift row residues into Gamma(J) of SL_{k+1}(Z)'),
        ('lift-sp', cmd_lift_sp, 'Lift row residues into Gamma(J) of Sp_2k(Z)'),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--rows', required=True, help='Rows such as "1,2;3,1"')
        p.add_argument('--ideals', required=True, help='Row ideal generators such as "2,3"')
        p.add_argument('--level', type=int, required=True, help='Level ideal generator J')
        p.set_defaults(handler=handler)

    p = sub.add_parser('pf-enum', help='Enumerate a weighted projective space over Z/n')
    p.add_argument('--k', type=int, required=True, help='Projective dimension')
    p.add_argument('--ideal', type=int, required=True, help='Ideal generator n')
    p.add_argument('--weights', default=None, help='Weights such as "1,2" (default all ones)')
    p.add_argument('--count-only', action='store_true', help='Only report the number of classes')
    p.set_defaults(handler=cmd_pf_enum)

    p = sub.add_parser('pf-canon', help='Canonical representative of a projective class')
    p.add_argument('--ideal', type=int, required=True, help='Ideal generator n')
    p.add_argument('--rep', required=True, help='Unital tuple such as "2,4"')
    p.add_argument('--weights', default=None, help='Weights such as "1,2" (default all ones)')
    p.set_defaults(handler=cmd_pf_canon)

    p = sub.add_parser('usc-check', help='Exhaustive USC check on a finite product of Z/m')
    p.add_argument('--moduli', required=True, help='Factor moduli such as "2,3"')
    p.add_argument('--ideal', required=True, help='One generator per factor; 0 is the zero ideal')
    p.add_argument('--max-set-size', type=int, default=None, help='Largest unital set scanned')
    p.set_defaults(handler=cmd_usc_check)

    p = sub.add_parser('usc-witness', help='USC witness over Z, or a checked refutation')
    p.add_argument('--set', default=None, help='Unital set, head first, such as "4,7"')
    p.add_argument('--ideal', type=int, default=0, help='Ideal generator; 0 asks for a zero-ideal refutation')
    p.add_argument('--poly-example', type=int, default=None, metavar='DEGREE',
                   help='Check the F_5[x] refutation for multipliers up to DEGREE')
    p.set_defaults(handler=cmd_usc_witness)

    p = sub.add_parser('sap-check', help='Lift and reduce every element of a small group')
    _add_group(p)
    p.add_argument('--modulus', type=int, required=True, help='Modulus n of Z/n')
    p.add_argument('--converse', action='store_true',
                   help='Also decompose each integral lift and reduce the word (sl only)')
    p.set_defaults(handler=cmd_sap_check)

    p = sub.add_parser('ge-decompose', help='Factor a matrix into elementary matrices')
    p.add_argument('--modulus', type=int, default=0, help='Modulus n; 0 works over Z')
    p.add_argument('--matrix', required=True, help='Matrix rows such as "0,-1;1,0"')
    p.add_argument('--gl', action='store_true', help='Allow a unit determinant other than 1')
    p.set_defaults(handler=cmd_ge_decompose)

    p = sub.add_parser('ge-check', help='Compare the elementary closure with SL_n(Z/m)')
    p.add_argument('--modulus', type=int, required=True, help='Modulus m')
    p.add_argument('--n', type=int, default=2, help='Matrix size')
    p.set_defaults(handler=cmd_ge_check)

    p = sub.add_parser('lemma41-check', help='Co-maximal intersection and product identities')
    _add_group(p)
    p.add_argument('--ideals', required=True, help='Two co-maximal generators such as "2,3"')
    p.add_argument('--samples', type=int, default=None, help='Number of sampled elements')
    p.add_argument('--seed', type=int, required=True, help='Random seed')
    p.set_defaults(handler=cmd_lemma41_check)

    p = sub.add_parser('verify', help='Recheck a certificate document')
    p.add_argument('--certificate', required=True, help='Path to the JSON document, or - for stdin')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('surjectivity', help='Lift every target of a projective product')
    _add_group(p)
    p.add_argument('--ideals', required=True, help='Row ideal generators such as "2,3"')
    p.add_argument('--level', type=int, required=True, help='Level ideal generator J')
    p.add_argument('--weights', required=True, help='One weight vector per row, such as "1,1;1,1"')
    p.add_argument('--samples', type=int, default=None, help='Sample this many targets instead of all')
    p.add_argument('--seed', type=int, default=None, help='Random seed (required with --samples)')
    p.add_argument('--certificates', action='store_true', help='Include every certificate in the output')
    p.set_defaults(handler=cmd_surjectivity)
    return parser


def _request(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    request = {k: v for k, v in vars(args).items() if k not in ("handler", "timings", "log_level")}
    request["guards"] = {
        "group_candidates": settings.group_candidates,
        "closure_elements": settings.closure_elements,
        "usc_candidates": settings.usc_candidates,
        "pf_tuples": settings.pf_tuples,
    }
    request["n_jobs"] = settings.n_jobs
    return request


def _strip_stats(payload: Dict[str, Any]) -> Dict[str, Any]:
    payload = dict(payload)
    payload.pop("stats", None)
    for key, value in payload.items():
        if isinstance(value, dict):
            payload[key] = _strip_stats(value)
    return payload


def _emit(document: Dict[str, Any], stdout: TextIO) -> None:
    stdout.write(json.dumps(document, indent=2, sort_keys=True, default=str))
    stdout.write("\n")


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stdin: Optional[TextIO] = None) -> int:
    """Parse ``argv``, dispatch and write the JSON document; returns the exit code."""
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    request: Dict[str, Any] = {"argv": list(argv) if argv is not None else sys.argv[1:]}
    try:
        args = build_parser().parse_args(argv)
        with using_config(args.config) as settings:
            configure_logging(args.log_level or settings.log_level)
            request = _request(args, settings)
            if args.handler is cmd_verify:
                payload, verdict = cmd_verify(args, settings, stdin)
            else:
                payload, verdict = args.handler(args, settings)
    except (CongruenceLiftError, ValueError) as exc:
        if not isinstance(exc, CongruenceLiftError):
            exc = MalformedInputError(str(exc))
        logger.debug("%s failed: %s", request.get("command"), exc)
        _emit({"request": request, "error": exc.to_dict()}, stdout)
        return EXIT_ERROR
    if not args.timings:
        payload = _strip_stats(payload)
    _emit({"request": request, "result": payload}, stdout)
    if verdict is None:
        return EXIT_OK
    return EXIT_OK if verdict else EXIT_FALSE


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
