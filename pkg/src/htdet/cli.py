"""Command line front end: ``htdet <command> ...``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bfile, hessenberg, paths, sequences, trudi, verify
from .report import reports_to_json
from .series import GF_IDS, gf_catalog

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _seq_id(text: str):
    try:
        return sequences.parse_sequence_id(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cmd_seq(args) -> int:
    prefix = sequences.prefix(args.id, args.max_n + 1 - sequences.OFFSETS[args.id], args.source)
    if args.format == "bfile":
        sys.stdout.write(bfile.format_bfile(prefix))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(prefix.items())
        sys.stdout.write(buf.getvalue())
    else:
        print(json.dumps({
            "id": prefix.id.value,
            "source": prefix.source,
            "offset": prefix.offset,
            "values": [str(v) for v in prefix.values],
        }))
    return EXIT_OK


def _cmd_det(args) -> int:
    a0 = 1 if args.plus else -1
    entries = [sequences.value(args.sequence, k) for k in range(args.offset, args.offset + args.max_n)]
    for n, d in enumerate(hessenberg.det_prefixes(a0, entries), start=1):
        print(n, d)
    return EXIT_OK


def _cmd_trudi(args) -> int:
    entries = [sequences.value(args.sequence, k) for k in range(args.offset, args.offset + args.n)]
    if args.mode == "partitions":
        value = trudi.trudi_partition_sum(args.a0, entries)
    else:
        value = trudi.trudi_composition_sum(args.a0, entries, cap=args.cap)
    print(value)
    return EXIT_OK


def _cmd_series(args) -> int:
    ps = gf_catalog(args.gf_id, args.order)
    print(ps.to_json() if args.json else ps)
    return EXIT_OK


def _cmd_paths(args) -> int:
    if args.action == "count":
        print(paths.family_cardinality(args.family, args.n))
    else:
        print(paths.family_signed_sum(args.family, args.n))
    if args.dump:
        for member in paths.enumerate_family(args.family, args.n):
            if isinstance(member, tuple):
                print(" | ".join(str(p) for p in member), file=sys.stderr)
            else:
                print(member, file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    routes = None
    if args.routes:
        routes = [r.strip() for r in args.routes.split(",") if r.strip()]
        bad = set(routes) - set(verify.ROUTES)
        if bad:
            raise UsageError(f"unknown route(s): {', '.join(sorted(bad))}")
    try:
        reports, status = verify.run_all(
            max_n=args.max_n, routes=routes, identities=args.identity or None, workers=args.workers
        )
    except verify.UnknownIdentity as exc:
        raise UsageError(exc.args[0]) from None
    for r in reports:
        print(r.summary(), file=sys.stderr)
    if args.json:
        text = reports_to_json(reports, timing=args.timing) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    failed = [r.identity for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} identities pass", file=sys.stderr)
    return EXIT_OK if status == 0 else EXIT_FAIL


def _cmd_oeis(args) -> int:
    try:
        report = bfile.oeis_crosscheck(args.id, "remote" if args.remote else "fixture")
    except OSError as exc:
        print(f"could not fetch b-file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.summary(), file=sys.stderr)
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    if args.json:
        print(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="htdet", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("seq", help="print a sequence prefix")
    q.add_argument("id", type=_seq_id)
    q.add_argument("--max-n", type=int, default=20)
    q.add_argument("--format", choices=("json", "csv", "bfile"), default="bfile")
    q.add_argument("--source", choices=tuple(sequences.SOURCES), default=None)
    q.set_defaults(func=_cmd_seq)

    q = sub.add_parser("det", help="Hessenberg-Toeplitz determinants D_1..D_N")
    sign = q.add_mutually_exclusive_group(required=True)
    sign.add_argument("--plus", action="store_true", help="a0 = +1")
    sign.add_argument("--minus", action="store_true", help="a0 = -1")
    q.add_argument("--sequence", type=_seq_id, required=True)
    q.add_argument("--offset", type=int, default=1, help="a_1 = seq[offset]")
    q.add_argument("--max-n", type=int, default=10)
    q.set_defaults(func=_cmd_det)

    q = sub.add_parser("trudi", help="evaluate Trudi's formula")
    q.add_argument("--a0", type=int, choices=(1, -1), required=True)
    q.add_argument("--sequence", type=_seq_id, required=True)
    q.add_argument("--offset", type=int, default=1, help="a_1 = seq[offset]")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mode", choices=("partitions", "compositions"), default="partitions")
    q.add_argument("--cap", type=int, default=None, help="composition cap")
    q.set_defaults(func=_cmd_trudi)

    q = sub.add_parser("series", help="expand a catalogued generating function")
    q.add_argument("gf_id", choices=GF_IDS)
    q.add_argument("--order", type=int, default=10)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_series)

    q = sub.add_parser("paths", help="count or sign-sum a lattice path family")
    q.add_argument("action", choices=("count", "signed-sum"))
    q.add_argument("--family", choices=paths.FAMILIES, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--dump", action="store_true", help="list members on stderr")
    q.set_defaults(func=_cmd_paths)

    q = sub.add_parser("verify", help="run the identity registry")
    q.add_argument("--identity", action="append", metavar="ID")
    q.add_argument("--max-n", type=int, default=None)
    q.add_argument("--routes", default=None, help="comma-separated route names")
    q.add_argument("--json", metavar="FILE", help="write the JSON report ('-' for stdout)")
    q.add_argument("--timing", action="store_true", help="include wall time in JSON")
    q.add_argument("--workers", type=int, default=1)
    q.set_defaults(func=_cmd_verify)

    q = sub.add_parser("oeis", help="compare against OEIS b-files")
    osub = q.add_subparsers(dest="oeis_command", required=True)
    c = osub.add_parser("check")
    c.add_argument("id", type=_seq_id)
    c.add_argument("--remote", action="store_true", help="fetch from oeis.org instead of fixtures")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_oeis)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"htdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, paths.EnumerationCapExceeded, trudi.CompositionCapExceeded) as exc:
        print(f"htdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
