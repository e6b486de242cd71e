"""Command-line surface: batch commands with deterministic text reports.

Exit codes: 0 for success / all-PASS reports, 1 when any check FAILs,
2 for input errors (with a position diagnostic where available).
`--format tsv` mirrors every line as tab-separated fields for scripts.
"""

import argparse
import sys
from fractions import Fraction

from . import bialgebra, graded, letterplace, nbar_dual, semilattice
from .errors import ParseError, SizeLimitError
from .extnat import parse_point
from .reporting import FAIL, PASS


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class Output:
    def __init__(self, stream, fmt):
        self.stream = stream
        self.fmt = fmt

    def emit(self, human, record=None):
        if self.fmt == "tsv":
            fields = record if record is not None else (human,)
            self.stream.write("\t".join(str(f) for f in fields) + "\n")
        else:
            self.stream.write(human + "\n")

    def emit_report(self, report):
        for line in report.lines:
            self.emit(line.render(), (line.kind, line.name, line.status, line.witness))


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_slat(path):
    return semilattice.parse_semilattice(_read(path), source=path)


def _parse_rationals(text):
    return [Fraction(part) for part in text.split(",") if part != ""]


def _parse_int_list(text):
    return [int(part) for part in text.split(",") if part != ""]


def _parse_element(algebra, text):
    coords = {}
    for part in text.split(","):
        if not part:
            continue
        label, sep, value = part.partition(":")
        if not sep:
            raise _UsageError(f"element coordinate {part!r} needs label:rational")
        coords[label] = Fraction(value)
    return algebra.element_from_labels(coords)


def _char_by_name(s, name):
    chars = semilattice.characters(s)
    for i, ch in enumerate(chars):
        if semilattice.character_label(i) == name:
            return ch
    raise _UsageError(f"no character named {name!r} (have f1..f{len(chars)})")


def _cmd_slat(args, out):
    if args.slat_cmd == "check":
        try:
            s = _load_slat(args.file)
        except semilattice.SemilatticeError as exc:
            out.emit("valid: no", ("valid", "no"))
            out.emit(f"error: {exc}", ("error", str(exc)))
            return 1
        out.emit(f"elements: {' '.join(s.elements)}", ("elements", " ".join(s.elements)))
        out.emit(f"identity: {s.label(s.identity)}", ("identity", s.label(s.identity)))
        out.emit("valid: yes", ("valid", "yes"))
        return 0

    s = _load_slat(args.file)
    if args.slat_cmd == "order":
        for i, j in semilattice.induced_order(s):
            if i != j:
                out.emit(f"{s.label(i)} <= {s.label(j)}", ("order", s.label(i), s.label(j)))
        return 0
    if args.slat_cmd == "characters":
        for i, ch in enumerate(semilattice.characters(s)):
            name = semilattice.character_label(i)
            out.emit(f"{name}: {ch.bits()}", (name, ch.bits()))
        return 0
    if args.slat_cmd == "dual":
        text = semilattice.print_semilattice(semilattice.dual_semilattice(s))
        for line in text.rstrip("\n").split("\n"):
            out.emit(line)
        return 0
    if args.slat_cmd == "double-dual":
        try:
            iso = semilattice.double_dual_iso(s)
        except semilattice.DoubleDualError as exc:
            out.emit(f"isomorphism: FAIL {exc}", ("isomorphism", "FAIL", str(exc)))
            return 1
        for i in range(len(s)):
            target = iso.target.label(iso.apply(i))
            out.emit(f"{s.label(i)} -> {target}", ("map", s.label(i), target))
        out.emit("isomorphism: OK", ("isomorphism", "OK"))
        return 0
    if args.slat_cmd == "ev-rank":
        r = semilattice.ev_matrix_rank(s)
        full = r == len(s)
        out.emit(f"rank: {r}", ("rank", r))
        out.emit(f"size: {len(s)}", ("size", len(s)))
        out.emit(f"full-rank: {'yes' if full else 'no'}", ("full-rank", "yes" if full else "no"))
        return 0 if full else 1
    raise _UsageError(f"unknown slat command {args.slat_cmd!r}")


def _cmd_balg(args, out):
    s = _load_slat(args.file)
    if args.balg_cmd == "axioms":
        report = bialgebra.check_bialgebra_axioms(s)
        out.emit_report(report)
        status = PASS if report.passed else FAIL
        out.emit(f"axioms: {status}", ("axioms", status))
        return 0 if report.passed else 1
    if args.balg_cmd == "quotient":
        pairs = []
        for piece in (args.glue or "").split(","):
            if not piece:
                continue
            a, sep, b = piece.partition("=")
            if not sep:
                raise _UsageError(f"glue pair {piece!r} needs a=b")
            pairs.append((a, b))
        congruence = bialgebra.congruence_closure(s, pairs)
        result = bialgebra.quotient_grouplikes(s, congruence)
        for ci, members in enumerate(congruence.classes):
            label = congruence.class_label(ci)
            names = " ".join(s.label(m) for m in members)
            out.emit(f"class {label}: {names}", ("class", label, names))
        out.emit_report(result.report)
        status = PASS if result.report.passed else FAIL
        out.emit(f"quotient: {status}", ("quotient", status))
        return 0 if result.report.passed else 1
    raise _UsageError(f"unknown balg command {args.balg_cmd!r}")


def _cmd_graded(args, out):
    if args.graded_cmd == "ut":
        labels = _parse_int_list(args.labels)
        algebra = graded.ut_graded(args.size, labels)
        if labels == list(range(1, args.size + 1)):
            ref = f"chain{args.size}.slat"  # matches the bundled corpus file
        else:
            ref = "chain-" + "-".join(str(v) for v in labels) + ".slat"
        text = graded.print_graded(algebra, ref)
        for line in text.rstrip("\n").split("\n"):
            out.emit(line)
        return 0

    algebra = graded.parse_graded_file(args.file)
    if args.graded_cmd == "verify":
        report = graded.verify_grading(algebra)
        out.emit_report(report)
        status = PASS if report.passed else FAIL
        out.emit(f"grading: {status}", ("grading", status))
        return 0 if report.passed else 1
    if args.graded_cmd == "act":
        if not args.char or args.element is None:
            raise _UsageError("act needs --char and --element")
        ch = _char_by_name(algebra.grading, args.char)
        element = _parse_element(algebra, args.element)
        image = graded.act_character(ch, element)
        text = graded.format_algebra_element(image)
        out.emit(text, ("result", text))
        return 0
    if args.graded_cmd == "module-algebra":
        report = graded.check_module_algebra(algebra)
        out.emit_report(report)
        status = PASS if report.passed else FAIL
        out.emit(f"module-algebra: {status}", ("module-algebra", status))
        return 0 if report.passed else 1
    if args.graded_cmd == "action-table":
        action = graded.dual_monoid_action(algebra)
        for name in action.labels:
            matrix = action.matrices[name]
            images = []
            for j, b in enumerate(algebra.basis):
                column = {i: matrix.at(i, j) for i in range(algebra.dim)
                          if matrix.at(i, j) != 0}
                images.append(f"{b} -> {graded.format_algebra_element(algebra.element(column))}")
            out.emit(f"gamma {name}: {', '.join(images)}",
                     ("gamma", name, "; ".join(images)))
        out.emit_report(action.report)
        status = PASS if action.report.passed else FAIL
        out.emit(f"action: {status}", ("action", status))
        return 0 if action.report.passed else 1
    raise _UsageError(f"unknown graded command {args.graded_cmd!r}")


def _nbar_functional(args):
    prefix = _parse_rationals(args.prefix) if args.prefix else []
    return nbar_dual.StepFunctional(prefix, Fraction(args.tail))


def _cmd_nbar(args, out):
    if args.nbar_cmd == "det":
        result = nbar_dual.special_det(_parse_rationals(args.row))
        out.emit(f"det: {result.det}", ("det", result.det))
        out.emit(f"closed-form: {result.closed_form}", ("closed-form", result.closed_form))
        out.emit("agree: yes", ("agree", "yes"))
        met = "met" if result.preconditions_met else "violated"
        out.emit(f"preconditions: {met}", ("preconditions", met))
        nz = "yes" if result.nonzero else "no"
        out.emit(f"nonzero: {nz}", ("nonzero", nz))
        return 0

    f = _nbar_functional(args)
    if args.nbar_cmd == "is-char":
        threshold = nbar_dual.is_character(f)
        if threshold is None:
            out.emit("character: no", ("character", "no"))
        else:
            out.emit("character: yes", ("character", "yes"))
            out.emit(f"threshold: {threshold}", ("threshold", threshold))
        return 0
    if args.nbar_cmd == "decompose":
        coeffs = nbar_dual.grouplike_decompose(f)
        points = sorted(coeffs, reverse=True)
        body = " ".join(f"{p}:{coeffs[p]}" for p in points)
        out.emit(body, tuple(f"{p}:{coeffs[p]}" for p in points))
        ok = nbar_dual.verify_decomposition(f, coeffs)
        out.emit(f"verified: {'OK' if ok else 'FAIL'}", ("verified", "OK" if ok else "FAIL"))
        return 0 if ok else 1
    if args.nbar_cmd == "translate-basis":
        basis = nbar_dual.translate_span_basis(f)
        points = " ".join(str(p) for p in basis.breakpoints)
        out.emit(f"breakpoints:{(' ' + points) if points else ''}", ("breakpoints", points))
        tail = str(basis.tail_point) if basis.tail_point is not None else "none"
        out.emit(f"tail-point: {tail}", ("tail-point", tail))
        out.emit(f"dimension: {basis.dimension}", ("dimension", basis.dimension))
        out.emit("verified: OK", ("verified", "OK"))
        return 0
    raise _UsageError(f"unknown nbar command {args.nbar_cmd!r}")


def _lp_context(args):
    odd_letters = _parse_int_list(args.odd_letters) if args.odd_letters else []
    odd_places = _parse_int_list(args.odd_places) if args.odd_places else []
    return letterplace.ParityContext.make(odd_letters, odd_places)


def _cmd_lp(args, out):
    ctx = _lp_context(args)
    if args.lp_cmd == "mul":
        if len(args.expr) != 2:
            raise _UsageError("mul needs exactly two expressions")
        p = letterplace.parse_poly(args.expr[0], ctx)
        q = letterplace.parse_poly(args.expr[1], ctx)
        text = letterplace.format_poly(p * q)
        out.emit(text, ("product", text))
        return 0
    if args.lp_cmd == "weight":
        p = letterplace.parse_poly(" ".join(args.expr), ctx)
        components = letterplace.weight_components(p)
        if not components:
            out.emit("0", ("weight", "", "0"))
        for w, part in components.items():
            text = letterplace.format_poly(part)
            out.emit(f"{w}: {text}", ("weight", w, text))
        return 0
    if args.lp_cmd == "act":
        if args.z is None:
            raise _UsageError("act needs --z")
        z = parse_point(args.z)
        p = letterplace.parse_poly(" ".join(args.expr), ctx)
        text = letterplace.format_poly(letterplace.act_min(z, p))
        out.emit(text, ("result", text))
        return 0
    if args.lp_cmd == "embed":
        try:
            letters = [int(x) for x in args.expr]
        except ValueError:
            raise _UsageError("embed takes letter indices") from None
        if any(x < 1 for x in letters):
            raise _UsageError("letter indices start at 1")
        text = letterplace.format_poly(letterplace.embed_word(letters, ctx))
        out.emit(text, ("result", text))
        return 0
    raise _UsageError(f"unknown lp command {args.lp_cmd!r}")


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "tsv"), default="human")

    parser = _ArgumentParser(prog="semidual", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    slat = top.add_parser("slat", help="finite semilattice commands")
    slat_sub = slat.add_subparsers(dest="slat_cmd", required=True)
    for name in ("check", "order", "characters", "dual", "double-dual", "ev-rank"):
        sub = slat_sub.add_parser(name, parents=[common])
        sub.add_argument("file")
        sub.set_defaults(func=_cmd_slat)

    balg = top.add_parser("balg", help="monoid-algebra bialgebra commands")
    balg_sub = balg.add_subparsers(dest="balg_cmd", required=True)
    axioms = balg_sub.add_parser("axioms", parents=[common])
    axioms.add_argument("file")
    axioms.set_defaults(func=_cmd_balg)
    quotient = balg_sub.add_parser("quotient", parents=[common])
    quotient.add_argument("file")
    quotient.add_argument("--glue", default="", help="pairs a=b[,c=d] to identify")
    quotient.set_defaults(func=_cmd_balg)

    gr = top.add_parser("graded", help="graded finite-dimensional algebra commands")
    gr_sub = gr.add_subparsers(dest="graded_cmd", required=True)
    for name in ("verify", "act", "module-algebra", "action-table"):
        sub = gr_sub.add_parser(name, parents=[common])
        sub.add_argument("file")
        sub.add_argument("--char")
        sub.add_argument("--element")
        sub.set_defaults(func=_cmd_graded)
    ut = gr_sub.add_parser("ut", parents=[common])
    ut.add_argument("--size", type=int, required=True)
    ut.add_argument("--labels", required=True)
    ut.set_defaults(func=_cmd_graded)

    nbar = top.add_parser("nbar", help="finite dual of the max-monoid")
    nbar_sub = nbar.add_subparsers(dest="nbar_cmd", required=True)
    for name in ("is-char", "decompose", "translate-basis"):
        sub = nbar_sub.add_parser(name, parents=[common])
        sub.add_argument("--prefix", default="")
        sub.add_argument("--tail", required=True)
        sub.set_defaults(func=_cmd_nbar)
    ndet = nbar_sub.add_parser("det", parents=[common])
    ndet.add_argument("--row", required=True)
    ndet.set_defaults(func=_cmd_nbar)

    lp = top.add_parser("lp", help="letterplace superalgebra commands")
    lp_sub = lp.add_subparsers(dest="lp_cmd", required=True)
    for name in ("mul", "weight", "act", "embed"):
        sub = lp_sub.add_parser(name, parents=[common])
        sub.add_argument("expr", nargs="+")
        sub.add_argument("--odd-letters", default="")
        sub.add_argument("--odd-places", default="")
        sub.add_argument("--z")
        sub.set_defaults(func=_cmd_lp)

    return parser


def run(argv, out_stream=None, err_stream=None):
    out_stream = out_stream if out_stream is not None else sys.stdout
    err_stream = err_stream if err_stream is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = Output(out_stream, args.format)
        return args.func(args, out)
    except _UsageError as exc:
        err_stream.write(f"error: {exc}\n")
        return 2
    except ParseError as exc:
        err_stream.write(f"{exc}\n")
        return 2
    except (semilattice.SemilatticeError, bialgebra.NotACongruenceError,
            bialgebra.ParentMismatchError, graded.BadLabelsError,
            graded.CharacterMismatchError, letterplace.ContextMismatchError,
            SizeLimitError) as exc:
        err_stream.write(f"error: {exc}\n")
        return 2
    except (OSError, ValueError) as exc:
        err_stream.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run(sys.argv[1:]))
