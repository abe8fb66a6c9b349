"""Command-line interface.

Exit codes: 0 hamiltonian / valid, 1 non-hamiltonian, 2 invalid input or
failed verification, 3 unknown (search budget exhausted).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import oracle
from .classify import classify, rankin_hamiltonian
from .construct import DEFAULT_ORACLE_BUDGET, build
from .core import CertParseError, InvalidInstanceError, decode_cert, encode_cert, normalize, to_dot, verify_cycle

EXIT_OK, EXIT_NONHAM, EXIT_INVALID, EXIT_UNKNOWN = 0, 1, 2, 3

CSV_HEADER = ["n", "c", "verdict", "method", "verified", "us"]


def cmd_decide(args) -> int:
    try:
        inst = normalize(args.n, args.c)
    except InvalidInstanceError as e:
        print(f"invalid: {e.describe()}")
        return EXIT_INVALID
    cls = classify(inst)
    if cls.hamiltonian:
        print("hamiltonian")
        return EXIT_OK
    print(f"non-hamiltonian: {cls.witness}")
    return EXIT_NONHAM


def cmd_construct(args) -> int:
    res = build(args.n, args.c, args.oracle_budget)
    if not res.is_cycle:
        print(res.reason, file=sys.stdout if res.kind == "non-hamiltonian" else sys.stderr)
        return {"non-hamiltonian": EXIT_NONHAM, "invalid": EXIT_INVALID}.get(res.kind, EXIT_UNKNOWN)
    cert = res.cert
    if args.format == "vertices":
        text = " ".join(map(str, cert.vertices())) + "\n"
    elif args.format == "dot":
        text = to_dot(cert.instance, cert)
    else:
        text = encode_cert(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"method: {res.method.value}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
    try:
        cert = decode_cert(text)
    except CertParseError as e:
        print(f"parse error: {e}")
        return EXIT_INVALID
    violation = verify_cycle(cert)
    if violation is not None:
        print(f"rejected: {violation}")
        return EXIT_INVALID
    print(f"ok: hamiltonian cycle of {cert.instance}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        res = oracle.solve(args.n, args.steps, args.budget)
    except ValueError as e:
        print(f"invalid: {e}")
        return EXIT_INVALID
    if res.found:
        print("found: " + " ".join(map(str, res.tour())))
        return EXIT_OK
    if res.status is oracle.Status.NONE_EXHAUSTIVE:
        print(f"none: exhaustive search, {res.nodes} nodes")
        return EXIT_NONHAM
    print(f"budget-exceeded: {res.nodes} nodes")
    return EXIT_UNKNOWN


def cmd_rankin(args) -> int:
    try:
        ok, wit = rankin_hamiltonian(args.n, args.a, args.b)
    except ValueError as e:
        print(f"invalid: {e}")
        return EXIT_INVALID
    if ok:
        print(f"hamiltonian (s={wit.s}, t={wit.t})")
        return EXIT_OK
    print("non-hamiltonian")
    return EXIT_NONHAM


def survey_row(n: int, c: int, budget: int = DEFAULT_ORACLE_BUDGET, timing: bool = True) -> list:
    t0 = time.perf_counter()
    res = build(n, c, budget)
    verified = res.is_cycle and verify_cycle(res.cert) is None
    us = round((time.perf_counter() - t0) * 1e6) if timing else 0
    verdict = "hamiltonian" if res.is_cycle else res.kind
    method = res.method.value if res.method else ""
    return [n, c, verdict, method, str(verified).lower(), us]


def _survey_row_star(task):
    return survey_row(*task)


def survey_tasks(n_min: int, n_max: int, cs=None, budget=DEFAULT_ORACLE_BUDGET, timing=True):
    for n in range(max(n_min, 5), n_max + 1):
        for c in range(1, n) if cs is None else sorted({c % n for c in cs}):
            if c in (0, 2, 3):
                continue
            yield (n, c, budget, timing)


def survey_csv(n_min: int, n_max: int, cs=None, jobs: int = 1, budget=DEFAULT_ORACLE_BUDGET, timing=True) -> str:
    tasks = list(survey_tasks(n_min, n_max, cs, budget, timing))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_survey_row_star, tasks, chunksize=64))
    else:
        rows = [survey_row(*t) for t in tasks]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_survey(args) -> int:
    cs = None if args.c_all or not args.c else args.c
    text = survey_csv(args.n_min, args.n_max, cs, args.jobs, args.oracle_budget, not args.no_timing)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_dot(args) -> int:
    try:
        inst = normalize(args.n, args.c)
    except InvalidInstanceError as e:
        print(f"invalid: {e.describe()}")
        return EXIT_INVALID
    cert = None
    if args.cycle:
        res = build(args.n, args.c, args.oracle_budget)
        cert = res.cert
    sys.stdout.write(to_dot(inst, cert))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circham", description="Hamiltonian cycles in Circ(n; 2, 3, c).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="print the hamiltonicity verdict")
    p.add_argument("n", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="construct a verified hamiltonian cycle")
    p.add_argument("n", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--format", choices=["steps", "vertices", "dot"], default="steps")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate file ('-' for stdin)")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search on Circ(n; steps)")
    p.add_argument("n", type=int)
    p.add_argument("steps", type=int, nargs="+")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("rankin", help="decide the outdegree-2 circulant Circ(n; a, b)")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_rankin)

    p = sub.add_parser("survey", help="build and verify every instance in a range, as CSV")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=36)
    p.add_argument("--c", type=int, action="append", help="restrict to these c values (repeatable)")
    p.add_argument("--c-all", action="store_true", help="every valid c (default unless --c is given)")
    p.add_argument("--csv", metavar="FILE")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.add_argument("--no-timing", action="store_true", help="write 0 in the us column for byte-stable output")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("dot", help="DOT description of the digraph")
    p.add_argument("n", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--cycle", action="store_true", help="highlight a constructed hamiltonian cycle")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
