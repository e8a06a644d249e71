"""Command-line front end.

Exit status: 0 provable / valid / done, 1 unprovable / invalid, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .calculus import Calculus, check_proof
from .export import dumps, loads, to_document, to_latex, to_text
from .oracle import ClosureTooLarge, saturate_oracle
from .prover import DEFAULT_MAX_NODES, Proved, prove
from .syntax import ParseError, parse_sequent, render_sequent
from .transform import (TransformError, eliminate_cuts, expand_to_minus, monotonize,
                        set_normalize)

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2

_CALCULI = {c.value: c for c in Calculus}


class _InputError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _InputError(f"cannot read {source}: {e.strerror}") from None


def _render_proof(proof, fmt: str) -> str:
    if fmt == "json":
        return dumps(proof)
    if fmt == "latex":
        return to_latex(proof)
    return to_text(proof)


def _prove_report(s, result, args) -> tuple[str, int]:
    out = [f"{result.status} {render_sequent(s)}"]
    if isinstance(result, Proved) and not args.quiet:
        out.append(_render_proof(result.proof, args.format).rstrip("\n"))
    if args.stats or not isinstance(result, Proved):
        out.append("stats: " + json.dumps(result.stats.as_dict(), sort_keys=True))
    return "\n".join(out) + "\n", EXIT_OK if result.proved else EXIT_NO


def _prove_record(s, result) -> dict:
    record = {"status": result.status, "sequent": render_sequent(s),
              "stats": result.stats.as_dict()}
    if isinstance(result, Proved):
        record["proof"] = to_document(result.proof)
    return record


def cmd_prove(args) -> int:
    inputs = list(args.sequent)
    if args.file:
        inputs += [ln.strip() for ln in _read(args.file).splitlines()
                   if ln.strip() and not ln.lstrip().startswith("#")]
    if not inputs:
        raise _InputError("nothing to prove: give a sequent or --file")
    sequents = [parse_sequent(t) for t in inputs]  # report syntax errors before searching
    if args.jobs > 1 and len(sequents) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(prove, sequents, [args.max_nodes] * len(sequents)))
    else:
        results = [prove(s, args.max_nodes) for s in sequents]
    if args.format == "json":
        records = [_prove_record(s, r) for s, r in zip(sequents, results)]
        doc = records[0] if len(records) == 1 else records
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        return max(EXIT_OK if r.proved else EXIT_NO for r in results)
    status = EXIT_OK
    for s, r in zip(sequents, results):
        text, code = _prove_report(s, r, args)
        sys.stdout.write(text)
        status = max(status, code)
    return status


def cmd_check(args) -> int:
    proof = loads(_read(args.proof))
    verdict = check_proof(_CALCULI[args.calculus], proof)
    print(verdict)
    return EXIT_OK if verdict else EXIT_NO


def _transform(fn, args) -> int:
    proof = loads(_read(args.proof))
    result = fn(proof)
    text = _render_proof(result, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_elim_cut(args) -> int:
    return _transform(eliminate_cuts, args)


def cmd_monotonize(args) -> int:
    return _transform(monotonize, args)


def cmd_set_normalize(args) -> int:
    return _transform(set_normalize, args)


def cmd_expand(args) -> int:
    cal = _CALCULI[args.calculus]
    return _transform(lambda t: expand_to_minus(t, cal), args)


def cmd_oracle(args) -> int:
    s = parse_sequent(args.sequent)
    verdict = saturate_oracle(s, args.limit)
    print(f"{'DERIVABLE' if verdict else 'NOT DERIVABLE'} {render_sequent(s)}")
    return EXIT_OK if verdict else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iel", description="Prover and proof toolkit for IEL.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="decide sequents or formulas")
    p.add_argument("sequent", nargs="*", help="'F1, F2 |- G', or a formula G")
    p.add_argument("--file", help="read one sequent per line ('-' for stdin)")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--stats", action="store_true", help="print search statistics")
    p.add_argument("--quiet", action="store_true", help="print the verdict only")
    p.add_argument("--jobs", type=int, default=1, help="prove several inputs in parallel")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check", help="check a JSON proof document")
    p.add_argument("proof", help="proof document path ('-' for stdin)")
    p.add_argument("--calculus", choices=sorted(_CALCULI), required=True)
    p.set_defaults(func=cmd_check)

    for name, func, helptext in (
            ("elim-cut", cmd_elim_cut, "eliminate cuts, giving an ielg- proof"),
            ("monotonize", cmd_monotonize, "make every rule instance monotone"),
            ("set-normalize", cmd_set_normalize, "collapse antecedents of a monotone proof to sets"),
            ("expand", cmd_expand, "rewrite an ielg+ or ielg++ proof into ielg-")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("proof", help="proof document path ('-' for stdin)")
        p.add_argument("--format", choices=["text", "json", "latex"], default="json")
        p.add_argument("-o", "--output", help="write here instead of stdout")
        if name == "expand":
            p.add_argument("--calculus", choices=["ielg+", "ielg++"], default="ielg++")
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", help="decide one sequent by forward saturation")
    p.add_argument("sequent")
    p.add_argument("--limit", type=int, default=14, help="largest closure size accepted")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, _InputError, TransformError, ClosureTooLarge, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
