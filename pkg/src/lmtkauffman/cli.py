"""Command line front end.

Verbs: compute, gtau, lmt, verify, corpus.  Output is key=value lines;
--porcelain suppresses the human comment lines so scripts can parse the
rest as-is.  Exit status 0 on success, 1 on unreadable or invalid input
and on verification failure, 2 when an internal invariant breaks.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import corpus
from .braid import random_closure
from .diagram import Diagram, DiagramError, InternalInvariantError, parse_pd
from .kauffman import EmptyDiagramError, f_oriented, lambda_poly, specialized_f
from .laurent import PolySyntaxError, SpecializationError
from .lmt import lmt_rhs, verify_all
from .transfer import g_tau


def _read_diagram(path: str) -> Diagram:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pd(fh.read())


def _parse_mask(bits: str | None, d: Diagram) -> int:
    if bits is None:
        return 0
    com = d.num_components
    if len(bits) != com or any(ch not in "01" for ch in bits):
        raise DiagramError(
            f"orientation mask must be {com} chars of 0/1, one per component"
        )
    mask = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            mask |= 1 << i
    return mask


def _header(args, path: str, d: Diagram) -> None:
    if not args.porcelain:
        print(f"# {path}: {len(d.crossings)} crossings, {d.num_components} components")


def cmd_compute(args) -> int:
    d = _read_diagram(args.path)
    mask = _parse_mask(args.orientation, d)
    _header(args, args.path, d)
    lam = lambda_poly(d)
    print(f"lambda={lam}")
    if args.oriented:
        print(f"writhe={d.writhe(mask)}")
        print(f"f={f_oriented(d, mask)}")
    if args.specialize:
        if args.oriented:
            print(f"f_specialized={specialized_f(d, mask)}")
        else:
            print(f"lambda_specialized={lam.substitute_z()}")
    return 0


def cmd_gtau(args) -> int:
    d = _read_diagram(args.path)
    _header(args, args.path, d)
    print(f"gtau={g_tau(d)}")
    return 0


def cmd_lmt(args) -> int:
    d = _read_diagram(args.path)
    mask = _parse_mask(args.orientation, d)
    _header(args, args.path, d)
    print(f"lmt_rhs={lmt_rhs(d, mask)}")
    return 0


def _verify_targets(args) -> list[tuple[str, Diagram]]:
    if args.corpus:
        return [(e.name, e.diagram()) for e in corpus.CORPUS]
    if args.random is not None:
        rng = random.Random(args.seed)
        return [
            (f"random[{i}]", random_closure(rng, args.max_crossings))
            for i in range(args.random)
        ]
    if args.path is None:
        raise DiagramError("verify needs a path, --corpus, or --random N")
    return [(args.path, _read_diagram(args.path))]


def cmd_verify(args) -> int:
    failures = 0
    checks = 0
    for name, d in _verify_targets(args):
        for r in verify_all(d, subject=name):
            checks += 1
            if args.porcelain:
                print(f"{r.subject}.{r.claim}={'pass' if r.passed else 'fail'}")
                if not r.passed:
                    print(f"{r.subject}.{r.claim}.lhs={r.lhs}")
                    print(f"{r.subject}.{r.claim}.rhs={r.rhs}")
            elif not r.passed:
                print(f"FAIL {r.subject} {r.claim}: lhs={r.lhs} rhs={r.rhs}")
            else:
                print(f"PASS {r.subject} {r.claim}")
            if not r.passed:
                failures += 1
    if args.porcelain:
        print(f"result={'pass' if failures == 0 else 'fail'}")
    else:
        print(f"# {checks} checks, {failures} failures")
    return 0 if failures == 0 else 1


def cmd_corpus(args) -> int:
    if args.action == "list":
        for e in corpus.CORPUS:
            if args.porcelain:
                print(e.name)
            else:
                d = e.diagram()
                print(
                    f"{e.name:22s} crossings={len(d.crossings)} "
                    f"components={e.components} {e.notes}"
                )
        return 0
    try:
        entry = corpus.get(args.name)
    except KeyError:
        print(f"error: no corpus entry named {args.name!r}", file=sys.stderr)
        return 1
    sys.stdout.write(entry.pd_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lmtkauffman",
        description="Exact framed-link polynomial computation and identity checks.",
    )
    p.add_argument(
        "--porcelain",
        action="store_true",
        help="machine-readable output only (key=value lines)",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    pc = sub.add_parser("compute", help="polynomial of a diagram file")
    pc.add_argument("path")
    pc.add_argument("--oriented", action="store_true", help="also print a^(-writhe) * lambda")
    pc.add_argument("--specialize", action="store_true", help="also evaluate at z = -a - a^-1")
    pc.add_argument("--orientation", metavar="BITS", help="component reversal mask, e.g. 01")
    pc.set_defaults(fn=cmd_compute)

    pg = sub.add_parser("gtau", help="orientation sum of a diagram file")
    pg.add_argument("path")
    pg.set_defaults(fn=cmd_gtau)

    pl = sub.add_parser("lmt", help="sublink side of the specialization formula")
    pl.add_argument("path")
    pl.add_argument("--orientation", metavar="BITS", help="component reversal mask")
    pl.set_defaults(fn=cmd_lmt)

    pv = sub.add_parser("verify", help="run every identity check")
    pv.add_argument("path", nargs="?", help="diagram file to verify")
    pv.add_argument("--corpus", action="store_true", help="verify the built-in corpus")
    pv.add_argument("--random", type=int, metavar="N", help="verify N random braid closures")
    pv.add_argument("--max-crossings", type=int, default=8, metavar="K")
    pv.add_argument("--seed", type=int, default=0, metavar="S")
    pv.set_defaults(fn=cmd_verify)

    pk = sub.add_parser("corpus", help="list or print the built-in diagrams")
    pk.add_argument("action", choices=["list", "show"])
    pk.add_argument("name", nargs="?")
    pk.set_defaults(fn=cmd_corpus)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verb == "corpus" and args.action == "show" and args.name is None:
        print("error: corpus show needs a name", file=sys.stderr)
        return 1
    try:
        return args.fn(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DiagramError, PolySyntaxError, EmptyDiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InternalInvariantError, SpecializationError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
