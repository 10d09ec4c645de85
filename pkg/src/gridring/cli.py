"""Command-line surface.

Subcommands operate on complex documents (JSON files) and on parameter
sequences in the text form ``C(-U[2,1], +V[2,1])``.  Exit codes: 0 success,
1 parse or validation error, 2 not knotlike, 3 internal verification
failure.
"""

from __future__ import annotations

import argparse
import sys

from . import examples, io_json
from .complexes import (
    FUVComplex,
    NotKnotlikeError,
    base_change,
    dual,
    reduce,
    tensor,
    validate,
    validate_fuv,
)
from .invariants import report
from .localeq import VerificationError, standard_representative
from .ring import EQUAL, LESS
from .standard import format_spec, lex_compare, parse_spec
from .io_json import DocumentError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_KNOTLIKE = 2
EXIT_VERIFICATION = 3


def _load_complex(path):
    doc = io_json.load_document(path)
    C, dy = io_json.document_to_complex(doc)
    bad = validate_fuv(C) if isinstance(C, FUVComplex) else validate(C)
    if bad:
        raise DocumentError("%s: %s" % (path, "; ".join(bad)))
    return C, dy


def _load_spec_arg(arg):
    """A spec from either the C(...) literal form or a document path."""
    if arg.strip().startswith("C("):
        return parse_spec(arg)
    C, dy = _load_complex(arg)
    if isinstance(C, FUVComplex):
        C = base_change(C)
    return standard_representative(C, dy)[0]


def _emit(args, payload, text):
    if args.json:
        sys.stdout.write(io_json.dump_json(payload))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_validate(args):
    doc = io_json.load_document(args.file)
    C, _dy = io_json.document_to_complex(doc)
    bad = validate_fuv(C) if isinstance(C, FUVComplex) else validate(C)
    if bad:
        _emit(args, {"ok": False, "violations": bad}, "\n".join(bad))
        return EXIT_INVALID
    _emit(args, {"ok": True, "violations": []}, "ok")
    return EXIT_OK


def cmd_reduce(args):
    C, dy = _load_complex(args.file)
    if isinstance(C, FUVComplex):
        raise DocumentError("reduce expects a base-S document; run basechange first")
    R = reduce(C)
    doc = io_json.complex_to_document(R, dy)
    _emit(args, doc, io_json.dump_json(doc))
    return EXIT_OK


def cmd_basechange(args):
    C, dy = _load_complex(args.file)
    if not isinstance(C, FUVComplex):
        raise DocumentError("basechange expects a base-FUV document")
    doc = io_json.complex_to_document(base_change(C), dy)
    _emit(args, doc, io_json.dump_json(doc))
    return EXIT_OK


def cmd_standardize(args):
    C, dy = _load_complex(args.file)
    if args.dy is not None:
        dy = args.dy
    if isinstance(C, FUVComplex):
        C = base_change(C)
    spec, fwd, back, applied = standard_representative(C, dy)
    payload = {
        "spec": io_json.spec_to_document(spec),
        "specText": format_spec(spec),
        "appliedShift": list(applied),
        "verified": True,
        "forward": fwd.to_json(),
        "backward": back.to_json(),
    }
    _emit(args, payload, format_spec(spec))
    return EXIT_OK


def cmd_tensor(args):
    A, dya = _load_complex(args.a)
    B, dyb = _load_complex(args.b)
    if isinstance(A, FUVComplex) or isinstance(B, FUVComplex):
        raise DocumentError("tensor expects base-S documents")
    doc = io_json.complex_to_document(tensor(A, B), dya + dyb)
    _emit(args, doc, io_json.dump_json(doc))
    return EXIT_OK


def cmd_dual(args):
    C, dy = _load_complex(args.file)
    if isinstance(C, FUVComplex):
        raise DocumentError("dual expects a base-S document")
    doc = io_json.complex_to_document(dual(C), -dy)
    _emit(args, doc, io_json.dump_json(doc))
    return EXIT_OK


def cmd_compare(args):
    sa = _load_spec_arg(args.a)
    sb = _load_spec_arg(args.b)
    c = lex_compare(sa, sb)
    word = "equal" if c == EQUAL else ("less" if c == LESS else "greater")
    _emit(args, {"order": word, "a": format_spec(sa), "b": format_spec(sb)}, word)
    return EXIT_OK


def _report_text(spec, rep):
    lines = ["spec           %s" % format_spec(spec)]
    if rep.phi.entries:
        for (s, e), c in rep.phi.entries:
            lines.append("phi[%s,(%d,%d)]   %+d" % (s.value, e[0], e[1], c))
    else:
        lines.append("phi            0 everywhere")
    lines.append("tau            %d%s" % (rep.tau, "" if rep.symmetric else "  (asymmetric spec; formula value)"))
    eps = "0" if rep.epsilon_zero else "%+d (sign convention: sgn b_1)" % rep.epsilon_sign
    lines.append("epsilon        %s" % eps)
    lines.append("N              %d" % rep.big_n)
    lines.append("genus bound    >= %s" % rep.genus_lb)
    lines.append("unknotting     >= %d" % rep.unknotting_lb)
    lines.append("P_U, P_V       %d, %d" % (rep.p_u, rep.p_v))
    lines.append("symmetric      %s" % ("yes" if rep.symmetric else "no"))
    lines.append("obstructions   lspace=%s seifert+=%s seifert-=%s" % (
        rep.lspace_obstruction, rep.seifert_pos_obstruction, rep.seifert_neg_obstruction,
    ))
    return "\n".join(lines)


def cmd_invariants(args):
    spec = _load_spec_arg(args.target)
    rep = report(spec)
    payload = {"spec": io_json.spec_to_document(spec), "specText": format_spec(spec)}
    payload.update(rep.to_json())
    _emit(args, payload, _report_text(spec, rep))
    return EXIT_OK


def cmd_example(args):
    if args.which == "zhou":
        if args.n is None:
            raise DocumentError("example zhou needs --n")
        C = examples.example_zhou(args.n)
    else:
        C = examples.example_cable()
    emit = args.emit
    if emit == "fuv":
        doc = io_json.complex_to_document(C)
        _emit(args, doc, io_json.dump_json(doc))
        return EXIT_OK
    if emit == "x":
        doc = io_json.complex_to_document(base_change(C))
        _emit(args, doc, io_json.dump_json(doc))
        return EXIT_OK
    spec = standard_representative(base_change(C))[0]
    _emit(
        args,
        {"spec": io_json.spec_to_document(spec), "specText": format_spec(spec)},
        format_spec(spec),
    )
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="gridring",
        description="Exact computations with chain complexes over grid rings.",
    )
    ap.add_argument("--json", action="store_true", help="emit a single JSON object")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a complex document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reduce", help="cancel unit entries of a base-S document")
    p.add_argument("file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("basechange", help="extend scalars of a base-FUV document into X")
    p.add_argument("file")
    p.set_defaults(func=cmd_basechange)

    p = sub.add_parser("standardize", help="compute the standard representative")
    p.add_argument("file")
    p.add_argument("--dy", type=int, default=None, help="correction-term shift")
    p.set_defaults(func=cmd_standardize)

    p = sub.add_parser("tensor", help="tensor product of two base-S documents")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("dual", help="dual of a base-S document")
    p.add_argument("file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("compare", help="order two complexes or specs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("invariants", help="invariant report for a file or C(...) literal")
    p.add_argument("target", metavar="FILE|SPEC")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("example", help="built-in example complexes")
    p.add_argument("which", choices=["zhou", "cable"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--emit", choices=["fuv", "x", "spec"], default="fuv")
    p.set_defaults(func=cmd_example)
    return ap


def run(argv):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (DocumentError, ValueError) as exc:
        if isinstance(exc, NotKnotlikeError):
            sys.stderr.write("not knotlike: %s\n" % exc)
            return EXIT_NOT_KNOTLIKE
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INVALID
    except VerificationError as exc:
        sys.stderr.write("internal verification failure: %s\n" % exc)
        return EXIT_VERIFICATION


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
