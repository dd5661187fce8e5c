"""Command-line surface: load objects, run suites, emit reports.

Commands: check, transmute, quantize, twist, verify-iso, zoo.  Exit code 0
means every check passed, 1 means some check failed (the report carries a
witness), 2 means an input could not be parsed or bound.  Identical inputs
produce byte-identical structured reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    QuantumGroupoid,
    WeakBialgebra,
    check_quantum_groupoid,
    check_weak_bialgebra,
)
from .errors import (
    AntipodeNotInvertible,
    ParseError,
    PreconditionUnmet,
    TwistAxiomFailure,
    WeakHopfError,
)
from .modules import BraidContext, coherence_report, regular_module
from .quantize import quantize, verify_quantization
from .linalg import format_frac
from .report import VerificationReport, Witness
from .serialization import (
    ParsedCocycle,
    ParsedModule,
    ParsedMorphism,
    ParsedQT,
    parse,
    serialize_cocycle,
    serialize_presentation,
    serialize_qt,
    serialize_quantum_groupoid,
)
from .structures import (
    canonical_r,
    check_quasitriangular,
    check_weak_cocycle,
    conjugator_elements,
    derived_r_identities,
    drinfeld_identities,
)
from .transmute import QGMorphism, check_morphism, transmute, verify_braided_hopf
from .twisting import check_conjugator_coproduct, twist, verify_isomorphism
from . import zoo
from .modules import check_module


class _InputError(Exception):
    """Maps to exit code 2."""


def _load_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError("cannot read %s: %s" % (path, exc)) from exc


def _load_object(path: str, want: str):
    """Load an object from a file or from the builtin corpus (zoo:NAME)."""
    if path.startswith("zoo:"):
        name = path[4:]
        try:
            fx = zoo.fixture(name)
        except KeyError as exc:
            raise _InputError(str(exc)) from exc
        if want == "algebra":
            return fx.algebra
        if want == "qt":
            return ParsedQT(fx.algebra.basis_names, fx.qt)
        if want == "cocycle":
            return ParsedCocycle(fx.algebra.basis_names, fx.cocycle)
        raise _InputError("cannot take %s from a fixture" % want)
    text = _load_text(path)
    try:
        return parse(text)
    except ParseError as exc:
        raise _InputError("%s: %s" % (path, exc)) from exc


def _require_groupoid(obj, path):
    if isinstance(obj, QuantumGroupoid):
        return obj
    raise _InputError("%s: expected a quantum-groupoid document" % path)


def _bind_qt(obj, H, path):
    if not isinstance(obj, ParsedQT):
        raise _InputError("%s: expected a qt-structure document" % path)
    if obj.basis_names != tuple(H.basis_names):
        raise _InputError("%s: basis does not match the algebra" % path)
    return obj.structure

def _bind_cocycle(obj, H, path):
    if not isinstance(obj, ParsedCocycle):
        raise _InputError("%s: expected a cocycle document" % path)
    if obj.basis_names != tuple(H.basis_names):
        raise _InputError("%s: basis does not match the algebra" % path)
    return obj.structure


class _Output:
    def __init__(self, fmt, out_path):
        self.fmt = fmt
        self.out_path = out_path
        self.lines = []
        self.json_objects = []
        self.json_checks = []
        self.json_extra = {}

    def note(self, text):
        self.lines.append(text)

    def add_report(self, object_id, report: VerificationReport):
        if self.fmt == "text":
            for line in report.to_lines():
                self.lines.append(
                    line if not object_id else "%s (%s)" % (line, object_id)
                )
        for entry in report.to_dict():
            entry["object"] = object_id
            self.json_checks.append(entry)

    def add_document(self, title, text):
        if self.fmt == "text":
            self.lines.append("-- %s --" % title)
            self.lines.append(text.rstrip("\n"))
        self.json_extra.setdefault("documents", []).append(
            {"title": title, "text": text}
        )

    def render(self, exit_code):
        if self.fmt == "structured":
            payload = {
                "objects": self.json_objects,
                "checks": self.json_checks,
                "exit": exit_code,
            }
            payload.update(self.json_extra)
            body = json.dumps(payload, indent=2) + "\n"
        else:
            body = "\n".join(self.lines) + "\n" if self.lines else ""
        if self.out_path:
            with open(self.out_path, "w", encoding="utf-8") as fh:
                fh.write(body)
        else:
            sys.stdout.write(body)


def _emit(out: _Output, object_id, report, state):
    out.add_report(object_id, report)
    if not report.passed:
        state["failed"] = True
    return state["failed"] and state["fail_fast"]


def _cmd_check(args) -> int:
    out = _Output(args.format, args.out)
    state = {"failed": False, "fail_fast": args.fail_fast}
    algebras = []
    pending_qt = []
    pending_cocycle = []
    pending_morphism = []
    pending_module = []

    for path in args.inputs:
        if path.startswith("zoo:"):
            fx_alg = _load_object(path, "algebra")
            out.json_objects.append(path)
            algebras.append((path, fx_alg))
            pending_qt.append((path, _load_object(path, "qt")))
            pending_cocycle.append((path, _load_object(path, "cocycle")))
            continue
        try:
            obj = _load_object(path, "any")
        except _InputError:
            raise
        out.json_objects.append(path)
        if isinstance(obj, QuantumGroupoid) or isinstance(obj, WeakBialgebra):
            algebras.append((path, obj))
        elif isinstance(obj, ParsedQT):
            pending_qt.append((path, obj))
        elif isinstance(obj, ParsedCocycle):
            pending_cocycle.append((path, obj))
        elif isinstance(obj, ParsedMorphism):
            pending_morphism.append((path, obj))
        elif isinstance(obj, ParsedModule):
            pending_module.append((path, obj))

    def find_algebra(names, path):
        for _, alg in algebras:
            if tuple(alg.basis_names) == tuple(names) and isinstance(
                alg, QuantumGroupoid
            ):
                return alg
        raise _InputError(
            "%s: no loaded quantum groupoid matches its basis" % path
        )

    def stages():
        for path, alg in algebras:
            base = alg.base if isinstance(alg, QuantumGroupoid) else alg
            yield path, lambda b=base: check_weak_bialgebra(b)
            if isinstance(alg, QuantumGroupoid):
                yield path, lambda a=alg: check_quantum_groupoid(a)
        for path, pqt in pending_qt:
            H = find_algebra(pqt.basis_names, path)
            qt = pqt.structure
            yield path, lambda H=H, qt=qt: check_quasitriangular(H, qt)
            yield path, lambda H=H, qt=qt: derived_r_identities(H, qt)
            yield path, lambda H=H, qt=qt: drinfeld_identities(H, qt)
            if args.with_hexagons:
                def hexes(H=H, qt=qt):
                    M = regular_module(H)
                    return coherence_report(BraidContext.psi(H, qt), M, M, M)

                yield path, hexes
        for path, pwc in pending_cocycle:
            H = find_algebra(pwc.basis_names, path)
            wc = pwc.structure
            yield path, lambda H=H, wc=wc: check_weak_cocycle(H, wc)
            yield path, lambda H=H, wc=wc: check_conjugator_coproduct(H, wc)
            # the conjugator product is recorded, never asserted
            _, _, product = conjugator_elements(H, wc)
            value = " ".join(format_frac(x) for x in product)
            out.note("conjugator product v v^-1 = [%s] (%s)" % (value, path))
            out.json_extra.setdefault("conjugator_products", []).append(
                {"object": path, "value": value.split()}
            )
            if args.with_hexagons and H.is_cocommutative:
                def phi_hexes(H=H, wc=wc):
                    M = regular_module(H)
                    return coherence_report(BraidContext.phi(H, wc), M, M, M)

                yield path, phi_hexes
        for path, pm in pending_morphism:
            src = find_algebra(pm.basis_names, path)
            dst = find_algebra(pm.target_basis_names, path)
            f = QGMorphism(src, dst, pm.matrix)
            yield path, lambda f=f: check_morphism(f)
        for path, pm in pending_module:
            H = find_algebra(pm.algebra_basis_names, path)
            yield path, lambda pm=pm, H=H: check_module(pm.bind(H))

    for path, runner in stages():
        if _emit(out, path, runner(), state):
            break

    code = 1 if state["failed"] else 0
    out.render(code)
    return code


def _cmd_transmute(args) -> int:
    out = _Output(args.format, args.out)
    H = _require_groupoid(_load_object(args.algebra, "algebra"), args.algebra)
    qt = _bind_qt(_load_object(args.qt, "qt"), H, args.qt)
    target = None
    morphism = None
    if args.target:
        target = _require_groupoid(_load_object(args.target, "algebra"), args.target)
    if args.morphism:
        pm = _load_object(args.morphism, "morphism")
        if not isinstance(pm, ParsedMorphism):
            raise _InputError("%s: expected a morphism document" % args.morphism)
        dst = target if target is not None else H
        if pm.basis_names != tuple(H.basis_names) or pm.target_basis_names != tuple(
            dst.basis_names
        ):
            raise _InputError("%s: morphism endpoints do not match" % args.morphism)
        morphism = QGMorphism(H, dst, pm.matrix)

    failed = False
    rep = check_quasitriangular(H, qt)
    out.add_report(args.qt, rep)
    failed = failed or not rep.passed
    if morphism is not None:
        rep = check_morphism(morphism)
        out.add_report(args.morphism, rep)
        failed = failed or not rep.passed
    if not failed:
        p = transmute(H, qt, target, morphism)
        rep = verify_braided_hopf(p, BraidContext.psi(H, qt))
        out.add_report(args.algebra, rep)
        failed = failed or not rep.passed
        out.add_document("presentation", serialize_presentation(p))
    code = 1 if failed else 0
    out.render(code)
    return code


def _cmd_quantize(args) -> int:
    out = _Output(args.format, args.out)
    H = _require_groupoid(_load_object(args.algebra, "algebra"), args.algebra)
    wc = _bind_cocycle(_load_object(args.cocycle, "cocycle"), H, args.cocycle)
    failed = False
    rep = check_weak_cocycle(H, wc)
    out.add_report(args.cocycle, rep)
    failed = failed or not rep.passed
    if not failed:
        p = quantize(H, wc)
        rep = verify_quantization(p, wc)
        out.add_report(args.algebra, rep)
        failed = failed or not rep.passed
        out.add_document("presentation", serialize_presentation(p))
    code = 1 if failed else 0
    out.render(code)
    return code


def _cmd_twist(args) -> int:
    out = _Output(args.format, args.out)
    H = _require_groupoid(_load_object(args.algebra, "algebra"), args.algebra)
    qt = _bind_qt(_load_object(args.qt, "qt"), H, args.qt)
    wc = _bind_cocycle(_load_object(args.cocycle, "cocycle"), H, args.cocycle)
    try:
        pair = twist(H, qt, wc)
    except TwistAxiomFailure as exc:
        rep = VerificationReport("twist")
        rep.add(exc.check_name, False, Witness((), (), (), str(exc)))
        out.add_report(args.algebra, rep)
        out.render(1)
        return 1
    twisted, qt_t = pair.twisted
    out.add_report(args.algebra, check_weak_bialgebra(twisted.base))
    out.add_report(args.algebra, check_quantum_groupoid(twisted))
    out.add_report(args.algebra, check_quasitriangular(twisted, qt_t))
    out.add_document("twisted-algebra", serialize_quantum_groupoid(twisted))
    out.add_document("twisted-qt", serialize_qt(twisted, qt_t))
    out.render(0)
    return 0


def _cmd_verify_iso(args) -> int:
    out = _Output(args.format, args.out)
    H = _require_groupoid(_load_object(args.algebra, "algebra"), args.algebra)
    wc = _bind_cocycle(_load_object(args.cocycle, "cocycle"), H, args.cocycle)
    try:
        qt = canonical_r(H)
        result = verify_isomorphism(H, qt, wc)
    except (PreconditionUnmet, WeakHopfError) as exc:
        raise _InputError(str(exc)) from exc
    out.add_report(args.algebra, result.report)
    left = serialize_presentation(result.quantized)
    right = serialize_presentation(result.twisted_transmuted)
    equal = left == right
    out.json_extra["presentations_equal"] = equal
    if args.format == "text":
        out.note("presentations: %s" % ("equal" if equal else "distinct"))
    code = 0 if result.report.passed else 1
    out.render(code)
    return code


def _cmd_zoo(args) -> int:
    out = _Output(args.format, args.out)
    if not args.emit:
        for name in zoo.fixture_names():
            fx = zoo.fixture(name)
            out.note("%-10s dim %-3d %s" % (name, fx.algebra.dim, fx.description))
            out.json_objects.append(
                {"name": name, "dim": fx.algebra.dim, "description": fx.description}
            )
        out.render(0)
        return 0
    try:
        fx = zoo.fixture(args.emit)
    except KeyError as exc:
        raise _InputError(str(exc)) from exc
    if not args.out_dir:
        raise _InputError("zoo emit needs --out-dir")
    import os

    os.makedirs(args.out_dir, exist_ok=True)
    paths = {}
    for suffix, text in (
        ("qg", serialize_quantum_groupoid(fx.algebra)),
        ("qt", serialize_qt(fx.algebra, fx.qt)),
        ("coc", serialize_cocycle(fx.algebra, fx.cocycle)),
    ):
        path = os.path.join(args.out_dir, "%s.%s" % (fx.name, suffix))
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        paths[suffix] = path
        out.note("wrote %s" % path)
    out.json_extra["paths"] = paths
    out.render(0)
    return 0


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "structured"), default="text")
    sub.add_argument("--fail-fast", action="store_true")
    sub.add_argument("--with-hexagons", action="store_true")
    sub.add_argument("--out", default=None)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="weakhopf",
        description="Exact-arithmetic workbench for finite quantum groupoids.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run axiom suites on the given objects")
    p.add_argument("inputs", nargs="+", help="paths or zoo:NAME")
    _add_common(p)

    p = sub.add_parser("transmute", help="braided Hopf structure on a centralizer")
    p.add_argument("--algebra", required=True)
    p.add_argument("--qt", required=True)
    p.add_argument("--target", default=None)
    p.add_argument("--morphism", default=None)
    _add_common(p)

    p = sub.add_parser("quantize", help="cocycle-deformed structure on a centralizer")
    p.add_argument("--algebra", required=True)
    p.add_argument("--cocycle", required=True)
    _add_common(p)

    p = sub.add_parser("twist", help="twist a quasitriangular quantum groupoid")
    p.add_argument("--algebra", required=True)
    p.add_argument("--qt", required=True)
    p.add_argument("--cocycle", required=True)
    _add_common(p)

    p = sub.add_parser(
        "verify-iso",
        help="compare quantization with the twisted transmutation (canonical R)",
    )
    p.add_argument("--algebra", required=True)
    p.add_argument("--cocycle", required=True)
    _add_common(p)

    p = sub.add_parser("zoo", help="list or emit builtin fixtures")
    p.add_argument("emit", nargs="?", default=None, help="fixture name to emit")
    p.add_argument("--out-dir", default=None)
    _add_common(p)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "check": _cmd_check,
        "transmute": _cmd_transmute,
        "quantize": _cmd_quantize,
        "twist": _cmd_twist,
        "verify-iso": _cmd_verify_iso,
        "zoo": _cmd_zoo,
    }[args.command]
    try:
        return handler(args)
    except _InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except AntipodeNotInvertible as exc:
        rep = VerificationReport("quantum-groupoid")
        rep.add("antipode-invertible", False, Witness((), (), (), str(exc)))
        out = _Output(args.format, getattr(args, "out", None))
        out.add_report("", rep)
        out.render(1)
        return 1
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except WeakHopfError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
