"""Command-line front end.

Exit codes: 0 ok, 1 violations (or a failed closure / cycle check),
2 malformed input, 3 non-invertible element.  Reports go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileio, quiddity
from .errors import (ClosureViolation, DescriptorMismatch, ExprSyntaxError,
                     LocalRelationViolation, NotInvertible, RetriesExhausted,
                     UnknownSymbol)
from .expr import parse as parse_expr
from .expr import pit_equal
from .frieze import generate_fan, verify_all, verify_local
from .matrices import RingMatrix
from .propagation import is_neg_identity, monodromy
from .quasidet import quasidet, tame_scan
from .rings import parse_ring

OK, VIOLATION, FORMAT, NONINVERTIBLE = 0, 1, 2, 3


def _print_report(report):
    for line in report.lines():
        print(line)
    print(report.summary())
    return OK if report.ok else VIOLATION


def cmd_verify(args):
    fr = fileio.load_frieze(args.path)
    report = verify_local(fr) if args.scope == "local" else verify_all(fr)
    return _print_report(report)


def cmd_tame(args):
    return _print_report(tame_scan(fileio.load_frieze(args.path)))


def cmd_monodromy(args):
    fr = fileio.load_frieze(args.path)
    mon = monodromy(fr)
    print(json.dumps(mon.render()))
    if is_neg_identity(mon):
        print("monodromy = -id")
        return OK
    print("monodromy != -id")
    return VIOLATION


def cmd_complete(args):
    q = fileio.load_cycle(args.seed)
    fr = quiddity.complete(q)
    fileio.save_frieze(fr, args.out)
    print(f"wrote {args.out} (m={fr.m}, ring={fr.ring.spec})")
    return OK


def _emit_cycle(q, out):
    if out:
        fileio.save_cycle(q, out)
        print(f"wrote {out} (m={q.m})")
    else:
        sys.stdout.write(fileio.save_cycle(q))


def cmd_quiddity(args):
    if args.action == "extract":
        _emit_cycle(quiddity.extract(fileio.load_frieze(args.path)), args.out)
        return OK
    q = fileio.load_cycle(args.path)
    if args.action == "verify":
        ok = quiddity.verify_cycle(q)
        print(f"m={q.m}: {'quiddity cycle' if ok else 'not a quiddity cycle'}")
        return OK if ok else VIOLATION
    if args.at is None:
        raise _Usage("reduce needs --at")
    _emit_cycle(quiddity.reduce_at(q, args.at), args.out)
    return OK


def cmd_generate(args):
    ring = parse_ring(args.ring)
    fr = generate_fan(args.m, ring, seed=args.seed, max_coeff=args.max_coeff, ones=args.ones)
    fileio.save_frieze(fr, args.out)
    print(f"wrote {args.out} (m={fr.m}, ring={ring.spec}, seed={args.seed})")
    return OK


def _ints(text):
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise _Usage(f"expected comma-separated integers, got {text!r}") from None


def cmd_quasidet(args):
    fr = fileio.load_frieze(args.path)
    rows, cols, pos = _ints(args.rows), _ints(args.cols), _ints(args.pos)
    if len(rows) != len(cols) or len(rows) not in (2, 3) or len(pos) != 2:
        raise _Usage("need 2 or 3 rows and columns and a position i,j")
    try:
        a = RingMatrix(fr.ring, [[fr.ext(r, c) for c in cols] for r in rows])
    except IndexError as exc:
        raise _Usage(str(exc)) from None
    print(json.dumps(a.render()))
    print(json.dumps(fr.ring.render(quasidet(a, *pos))))
    return OK


def cmd_pit(args):
    lhs, rhs = parse_expr(args.lhs), parse_expr(args.rhs)
    same = pit_equal(lhs, rhs, trials=args.trials, dim=args.dim, seed=args.seed)
    print("equal" if same else "not equal")
    return OK if same else VIOLATION


class _Usage(ValueError):
    pass


def build_parser():
    p = argparse.ArgumentParser(prog="ncfrieze", description="Noncommutative frieze toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check triangle and exchange relations")
    s.add_argument("path")
    s.add_argument("--scope", choices=("local", "all"), default="local")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("tame", help="check |M|_{3,3} = 0 on all neighbouring 3x3 blocks")
    s.add_argument("path")
    s.set_defaults(func=cmd_tame)

    s = sub.add_parser("monodromy", help="product of the mu-factors")
    s.add_argument("path")
    s.set_defaults(func=cmd_monodromy)

    s = sub.add_parser("complete", help="rebuild a frieze from a seed file")
    s.add_argument("seed")
    s.add_argument("out")
    s.set_defaults(func=cmd_complete)

    s = sub.add_parser("quiddity", help="extract, verify or reduce quiddity cycles")
    s.add_argument("action", choices=("extract", "verify", "reduce"))
    s.add_argument("path")
    s.add_argument("--at", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_quiddity)

    s = sub.add_parser("generate", help="random frieze from a fan triangulation")
    s.add_argument("kind", choices=("fan",))
    s.add_argument("out")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--ring", default="quaternion")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-coeff", type=int, default=3)
    s.add_argument("--ones", action="store_true", help="use 1 for every sampled value")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("quasidet", help="quasideterminant of a block of the extended pattern")
    s.add_argument("path")
    s.add_argument("--rows", required=True, help="e.g. 0,1,2")
    s.add_argument("--cols", required=True, help="e.g. 3,4,5")
    s.add_argument("--pos", default="3,3", help="1-based position i,j")
    s.set_defaults(func=cmd_quasidet)

    s = sub.add_parser("pit", help="probabilistic identity test in the free skew field")
    s.add_argument("lhs")
    s.add_argument("--rhs", required=True)
    s.add_argument("--trials", type=int, default=5)
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_pit)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ClosureViolation, LocalRelationViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    except (NotInvertible, RetriesExhausted) as exc:
        print(f"error: not invertible: {exc}", file=sys.stderr)
        return NONINVERTIBLE
    except (fileio.FormatError, ExprSyntaxError, UnknownSymbol, DescriptorMismatch,
            _Usage, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FORMAT


if __name__ == "__main__":
    sys.exit(main())
