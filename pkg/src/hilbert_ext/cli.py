"""Command line entry point: ``hilbert-ext <command> ...``.

Exit status is 0 on success, 1 when a check fails and 2 for usage or file errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import _bits
from .algebra import Variety, enrich, validate
from .duality import phi
from .enumeration import HARD_CAP, enumerate_algebras
from .extensions import CertificationError, Construction, extend
from .filters import PreconditionError, upper_covers
from .io import AlgebraDocument, DocumentError, MorphismDocument, load_algebra, load_morphism, write
from .morphisms import Morphism, lift
from .verify import SUITES

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _out(line: str = "") -> None:
    print(line)


# ----------------------------------------------------------------- commands


def cmd_validate(args) -> int:
    doc = load_algebra(args.file, check=False)
    variety = Variety.parse(args.variety) if args.variety else doc.variety
    alg = doc.algebra
    try:
        alg = enrich(alg, variety)
    except ValueError as exc:
        _out(f"FAIL {alg.name or args.file} as {variety.value}: {exc}")
        return FAILED
    report = validate(alg, variety)
    if report.ok:
        _out(f"PASS {alg.name or args.file} is a {variety.value} algebra of size {alg.size}")
        return OK
    _out(f"FAIL {alg.name or args.file} as {variety.value}")
    for failure in report.failures:
        _out(f"  {failure.describe(alg)}")
    return FAILED


def cmd_dual(args) -> int:
    alg = load_algebra(args.file).algebra
    X, images = phi(alg)
    _out(f"X(H): {len(X)} irreducible filters")
    for i in range(len(X)):
        covers = upper_covers(X, i)
        above = ", ".join(f"P{j}" for j in covers) if covers else "-"
        _out(f"  P{i} = {X.show(i)}  covered by {above}")
    _out("phi:")
    width = max(len(alg.label(a)) for a in alg.elements)
    for a in alg.elements:
        pts = ",".join(f"P{i}" for i in _bits.members(images[a]))
        _out(f"  {alg.label(a):>{width}} -> {{{pts}}}")
    return OK


def cmd_extend(args) -> int:
    doc = load_algebra(args.file)
    tag = Construction(args.target)
    try:
        ext = extend(doc.algebra, tag)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    _out(f"{tag.value} extension of {doc.algebra.name or args.file}: size {len(ext)}")
    _out(f"points: {len(ext.points)}")
    for a in doc.algebra.elements:
        k = ext.embedding[a]
        _out(f"  {doc.algebra.label(a)} -> {k} = {ext.points.show_points(ext.members[k])}")
    if args.emit:
        path = write(args.emit, AlgebraDocument(ext.presented, tag.variety))
        _out(f"wrote {path}")
    return OK


def cmd_lift(args) -> int:
    doc = load_morphism(args.file)
    tag = Construction(args.target)
    try:
        lifted = lift(doc.morphism, tag)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    except CertificationError as exc:
        _out(f"FAIL lift: {exc}")
        return FAILED
    f = doc.morphism
    _out(f"f = {list(f.map)}")
    _out(f"f^{tag.value} : {len(lifted.source_ext)} -> {len(lifted.target_ext)}")
    _out(f"  map {list(lifted.map)}")
    for a in f.dom.elements:
        s, t = lifted.source_ext.embedding[a], lifted.target_ext.embedding[f.map[a]]
        _out(f"  e({f.dom.label(a)}) = {s} -> {lifted.map[s]}  e(f({f.dom.label(a)})) = {t}")
    ok = lifted.intertwines()
    _out(f"intertwining: {'PASS' if ok else 'FAIL'}")
    if args.emit:
        path = write(args.emit, MorphismDocument(lifted.as_morphism()))
        _out(f"wrote {path}")
    return OK if ok else FAILED


def cmd_enumerate(args) -> int:
    variety = Variety.parse(args.variety)
    if args.size > HARD_CAP[variety]:
        raise UsageError(f"--size {args.size} exceeds the cap {HARD_CAP[variety]} for {variety.value}")
    cat = enumerate_algebras(variety, args.size)
    for n, count in cat.counts.items():
        _out(f"size {n}: {count}")
    _out(f"total: {len(cat)}")
    if args.emit:
        out = Path(args.emit)
        for alg in cat:
            write(out / f"{alg.name}.json", AlgebraDocument(alg, variety))
        _out(f"wrote {len(cat)} documents to {out}")
    return OK


def _suite_args(name: str, args) -> dict:
    kw = {"max_size": args.max_size}
    if name.startswith("adjunction") and args.max_target_size is not None:
        kw["max_target_size"] = args.max_target_size
    return kw


def _dump_witness(witness, directory: Path, stem: str) -> Optional[Path]:
    if isinstance(witness, Morphism):
        return write(directory / f"{stem}.json", MorphismDocument(witness))
    if witness is not None:
        return write(directory / f"{stem}.json", AlgebraDocument(witness, Variety.HIL))
    return None


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        start = time.perf_counter()
        reports = SUITES[name](**_suite_args(name, args))
        _out(f"== {name} (max size {args.max_size}, {time.perf_counter() - start:.1f}s)")
        for k, rep in enumerate(reports):
            _out(f"{'PASS' if rep.ok else 'FAIL'} {rep.name} [{rep.checked} cases]")
            for note in rep.notes:
                _out(f"     {note}")
            if rep.ok:
                continue
            failed += 1
            for what in rep.failures[:5]:
                _out(f"     counterexample: {what}")
            for m, witness in enumerate(rep.witnesses):
                path = _dump_witness(witness, Path(args.out), f"{name}-{k}-{m}")
                if path is not None:
                    _out(f"     wrote {path}")
    _out(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}")
    return FAILED if failed else OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbert-ext", description="Finite Hilbert algebras and their free extensions.")
    sub = parser.add_subparsers(dest="command", required=True)
    varieties = [v.value for v in Variety]
    targets = [c.value for c in Construction]

    p = sub.add_parser("validate", help="check the axioms of an algebra document")
    p.add_argument("file")
    p.add_argument("--variety", choices=varieties)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dual", help="print the irreducible filters and the phi table")
    p.add_argument("file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("extend", help="build a free extension")
    p.add_argument("file")
    p.add_argument("--target", choices=targets, required=True)
    p.add_argument("--emit", metavar="OUT")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("lift", help="lift a morphism to the extensions")
    p.add_argument("file", metavar="MORPHISM_FILE")
    p.add_argument("--target", choices=targets, required=True)
    p.add_argument("--emit", metavar="OUT")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("enumerate", help="list algebras up to isomorphism")
    p.add_argument("--variety", choices=varieties, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--emit", metavar="DIR")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--max-target-size", type=int)
    p.add_argument("--out", default="counterexamples", help="directory for counterexample documents")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (DocumentError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
