"""Command-line entry point: ``heckeinv {characters,eigenvalues,verify,casimir,trace}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import defaultdict
from pathlib import Path

from . import casimir as cas
from .characters import character_table, class_character, class_word
from .diagrams import Partition, fundamental_eigenvalue, partitions_of
from .errors import HeckeError, MalformedSpectrum, TooManyRows
from .laurent import parse_laurent, to_delta_series
from .murphy import murphy_product_trace

log = logging.getLogger("heckeinv")

DEFAULT_LIMIT = 10
OUT_DIR_ENV = "HECKEINV_OUT_DIR"


class UsageError(Exception):
    pass


def _check_n(n: int, limit: int) -> None:
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    if n > limit:
        raise UsageError(f"n={n} exceeds the safety limit {limit}; raise it with --limit")


def _emit(text: str, args, default_name: str) -> None:
    out = args.out
    if out is None and os.environ.get(OUT_DIR_ENV):
        out = str(Path(os.environ[OUT_DIR_ENV]) / default_name)
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n")
    log.info("wrote %s", path)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def cmd_characters(args) -> int:
    _check_n(args.n, args.limit)
    table = character_table(args.n)
    if args.format == "csv":
        text = table.to_csv()
    else:
        text = _dump(table.to_json())
    _emit(text, args, f"characters_{args.n}.{args.format}")
    return 0


def eigenvalue_report(n: int) -> dict:
    parts = partitions_of(n)
    rows = []
    by_poly = defaultdict(list)
    by_q1 = defaultdict(list)
    for g in parts:
        lam = fundamental_eigenvalue(g)
        at1 = lam(1)
        rows.append({"partition": str(g), "eigenvalue": str(lam), "coeffs": lam.to_json(), "at_q1": str(at1)})
        by_poly[lam].append(str(g))
        by_q1[at1].append(str(g))
    return {
        "n": n,
        "eigenvalues": rows,
        "generic_collisions": [v for v in by_poly.values() if len(v) > 1],
        "q1_collisions": [v for v in by_q1.values() if len(v) > 1],
    }


def cmd_eigenvalues(args) -> int:
    _check_n(args.n, args.limit)
    report = eigenvalue_report(args.n)
    if args.format == "csv":
        lines = ["partition,eigenvalue,at_q1"]
        lines += [f"\"{r['partition']}\",{r['eigenvalue']},{r['at_q1']}" for r in report["eigenvalues"]]
        text = "\n".join(lines)
    else:
        text = _dump(report)
    _emit(text, args, f"eigenvalues_{args.n}.{args.format}")
    return 0


def verification_report(n: int, inject_fault: bool = False) -> dict:
    from . import oracle

    records = []

    def add(check, ok, **detail):
        records.append({"check": check, "ok": bool(ok), **detail})

    for g in partitions_of(n):
        m = oracle.build_irrep(g)
        if inject_fault and m.n >= 2:
            G0 = m.generators[0]
            bumped = G0 + oracle.Matrix.identity(m.dim).scale(1)
            m = oracle.IrrepMatrices(m.shape, m.dim, (bumped,) + m.generators[1:], m.basis)
        rep = oracle.verify_relations(m)
        for r in rep.records:
            records.append({"irrep": str(g), **r})
        for mu in partitions_of(n):
            a = class_character(g, mu)
            b = oracle.word_trace(m, class_word(mu, n))
            add("character_vs_oracle", a == b, irrep=str(g), cls=str(mu), pipeline=str(a), oracle=str(b))
        for p in range(2, n + 1):
            a = murphy_product_trace(g, (p,))
            b = oracle.murphy_matrix(m, p).trace().to_laurent()
            add("murphy_trace_vs_oracle", a == b, irrep=str(g), p=p)
        for N in range(max(2, len(g) + 1), 6):
            rel = cas.hecke_casimir_relation_check(g, N)
            add("hecke_casimir_relation", rel["equal"], irrep=str(g), N=N)
    if 2 <= n <= 5:
        rep = oracle.verify_projection(partitions_of(n))
        for r in rep.records:
            records.append(r)
    return {"n": n, "ok": all(r["ok"] for r in records), "records": records}


def cmd_verify(args) -> int:
    _check_n(args.n, args.limit)
    report = verification_report(args.n, inject_fault=args.inject_fault)
    _emit(_dump(report), args, f"verify_{args.n}.json")
    if not report["ok"]:
        first = next(r for r in report["records"] if not r["ok"])
        print(f"verification failed: {json.dumps(first)}", file=sys.stderr)
        return 1
    return 0


def cmd_casimir(args) -> int:
    N = args.N
    if N < 2:
        raise UsageError("N must be at least 2")
    if args.decode is not None:
        try:
            v = parse_laurent(args.decode)
            g = cas.decode_spectrum(v, N)
        except (ValueError, MalformedSpectrum) as exc:
            raise UsageError(f"cannot decode {args.decode!r}: {exc}") from None
        _emit(_dump({"N": N, "spectrum": str(v), "diagram": str(g)}), args, f"casimir_decode_{N}.json")
        return 0
    if args.partition is None:
        raise UsageError("give a partition or --decode POLY")
    g = _partition_arg(args.partition)
    try:
        lam = cas.casimir_eigenvalue(g, N)
    except TooManyRows as exc:
        raise UsageError(str(exc)) from None
    series = to_delta_series(lam, args.order)
    relation = cas.hecke_casimir_relation_check(g, N)
    out = {
        "N": N,
        "diagram": str(g),
        "eigenvalue": str(lam),
        "coeffs": lam.to_json(),
        "delta_series": series.to_json(),
        "relation": relation,
    }
    _emit(_dump(out), args, f"casimir_{N}.json")
    return 0 if relation["equal"] else 1


def cmd_trace(args) -> int:
    g = _partition_arg(args.partition)
    value = murphy_product_trace(g, args.indices)
    _emit(_dump({"diagram": str(g), "indices": list(args.indices), "trace": str(value), "coeffs": value.to_json()}),
          args, "trace.json")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckeinv", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="output path (default: stdout or $%s)" % OUT_DIR_ENV)
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="safety bound on n")

    p = sub.add_parser("characters", help="character table of H_n(q)")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("eigenvalues", help="fundamental-invariant eigenvalues and collisions")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_eigenvalues)

    p = sub.add_parser("verify", help="check the pipeline against explicit matrices")
    p.add_argument("n", type=int)
    common(p, fmt=False)
    p.add_argument("--inject-fault", action="store_true", help="perturb g_1 to exercise the failure path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("casimir", help="SU_q(N) Casimir eigenvalue or decoding")
    p.add_argument("N", type=int)
    p.add_argument("partition", nargs="?")
    p.add_argument("--decode", metavar="POLY")
    p.add_argument("--order", type=int, default=2, help="delta-series truncation order")
    common(p, fmt=False)
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("trace", help="trace of a non-consecutive Murphy product")
    p.add_argument("partition")
    p.add_argument("indices", type=int, nargs="*")
    common(p, fmt=False)
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    if getattr(args, "limit", DEFAULT_LIMIT) > DEFAULT_LIMIT:
        log.warning("safety limit raised to %d; table sizes grow quickly", args.limit)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"heckeinv: error: {exc}", file=sys.stderr)
        return 2
    except HeckeError as exc:
        if isinstance(exc, (ValueError, IndexError)):
            print(f"heckeinv: error: {exc}", file=sys.stderr)
            return 2
        print(f"heckeinv: internal failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
