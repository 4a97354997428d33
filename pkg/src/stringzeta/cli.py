"""Command-line front end.

Every subcommand takes a presentation file, or the name of a bundled
example (``gp23``, ``kronecker2``, ``sb1``), and prints plain-text tables
in right-to-left string notation.  Output depends only on the input and
the options.

Exit codes: 0 ok, 2 validation failure, 3 parse error, 4 resource limit,
5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .analytics import (
    DOMESTIC, classify, counting_report, pnt_constants, pnt_ratio_table, zeta_coefficients,
)
from .corpus import load_presentation
from .errors import (
    ConvergenceError, InternalConsistencyError, PreconditionError, PresentationError,
    ResourceLimitError, ValidationError,
)
from .polynomial import spectral_radius
from .presentation import (
    normalize_relations, prepare, tilde_presentation, validate_string_algebra, validate_zero_relation,
)
from .report import analyze
from .state_graph import adjacency, build_state_graph, export_dot, reciprocal_char_poly, scc_decompose, trace_powers
from .strings import DEFAULT_CAP, band_class_of, enumerate_bands, enumerate_strings, format_word, inverse

EXIT_OK, EXIT_VALIDATION, EXIT_PARSE, EXIT_RESOURCE, EXIT_INTERNAL = 0, 2, 3, 4, 5


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _table(header, rows):
    cols = list(zip(header, *rows)) if rows else [(h,) for h in header]
    widths = [max(len(str(x)) for x in col) for col in cols]
    out = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        out.append("  ".join(str(x).rjust(w) for x, w in zip(r, widths)).rstrip())
    return "\n".join(out)


def _word(w, args):
    return format_word(w, upper=args.uppercase, powers=True)


def _write(path, text, out):
    if path == "-":
        out.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load(args, string_algebra=False):
    return prepare(load_presentation(args.input), require_string_algebra=string_algebra)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_validate(args, out):
    p = tilde_presentation(normalize_relations(load_presentation(args.input)))
    report = validate_string_algebra(p)
    if not report.admissible:
        report = validate_zero_relation(p)
    print(f"admissible: {'yes' if report.admissible else 'no'}", file=out)
    print(f"string algebra: {'yes' if report.string_algebra else 'no'}", file=out)
    if report.window_N is not None:
        print(f"window N: {report.window_N}", file=out)
    for d in report.diagnostics:
        print(f"[{d.code}] {d.message}", file=out)
    return EXIT_OK if report.admissible else EXIT_VALIDATION


def cmd_strings(args, out):
    p = _load(args)
    words = enumerate_strings(p, args.length, args.max_strings)
    print(f"# {len(words)} strings of length {args.length}", file=out)
    for w in words:
        print(_word(w, args), file=out)
    return EXIT_OK


def cmd_bands(args, out):
    p = _load(args)
    bands = enumerate_bands(p, args.max_length, args.max_strings)
    rows = [(b.length, _word(b.representative, args),
             _word(band_class_of(inverse(b.representative)).representative, args),
             _word(b.inverse_pair_id, args))
            for b in bands]
    print(f"# {len(bands)} band classes of length <= {args.max_length}", file=out)
    print(_table(["length", "band", "inverse", "pair"], rows), file=out)
    return EXIT_OK


def cmd_graph(args, out):
    p = _load(args)
    g = build_state_graph(p, args.max_strings)
    scc = scc_decompose(g)
    print(f"window N: {g.window}", file=out)
    print(f"vertices: {len(g.vertices)}", file=out)
    print(f"arrows: {len(g.arrows)}", file=out)
    rows = [(i, len(c.vertices), c.period, "yes" if c.is_simple_cycle else "no",
             c.reciprocal_char_poly.pretty(),
             " ".join(format_word(g.vertices[v], upper=args.uppercase, powers=True) for v in c.vertices))
            for i, c in enumerate(scc) if c.nontrivial]
    print(_table(["component", "size", "period", "cycle", "det(I − tA_i)", "vertices"], rows), file=out)
    if args.dot:
        _write(args.dot, export_dot(g, upper=args.uppercase, name=p.name or "state_graph"), out)
    return EXIT_OK


def cmd_zeta(args, out):
    p = _load(args)
    A = adjacency(build_state_graph(p, args.max_strings))
    recip = reciprocal_char_poly(A)
    N = trace_powers(A, args.terms)
    z = zeta_coefficients(recip, args.terms, N)
    print(f"det(I − tA) = {recip.pretty()}", file=out)
    print(_table(["m", "zeta_m"], list(enumerate(z))), file=out)
    return EXIT_OK


def cmd_mu(args, out):
    p = _load(args, string_algebra=True)
    A = adjacency(build_state_graph(p, args.max_strings))
    c = counting_report(trace_powers(A, args.terms), True)
    rows = [(m, c.N[m], c.pi[m], c.mu[m]) for m in range(1, args.terms + 1)]
    print(_table(["m", "N_m", "pi(m)", "mu(m)"], rows), file=out)
    return EXIT_OK


def cmd_classify(args, out):
    p = _load(args, string_algebra=True)
    g = build_state_graph(p, args.max_strings)
    scc = scc_decompose(g)
    c = classify(scc)
    R = spectral_radius(reciprocal_char_poly(adjacency(g)))
    print(f"verdict: {c.verdict}", file=out)
    print(f"spectral radius R: {R.radius:.12f}", file=out)
    print(f"growth: {c.growth}", file=out)
    print(f"mu-series rational: {'yes' if c.rationality else 'no'}", file=out)
    if c.verdict == DOMESTIC:
        print(f"band classes: {c.band_count}", file=out)
        for b in c.bands:
            print(f"  {_word(b.representative, args)}", file=out)
        print(f"mu(t) = {c.closed_form()}", file=out)
    else:
        ev = c.evidence
        print(f"witness: component {ev['component']}, vertex "
              f"{format_word(ev['branch_vertex'], upper=args.uppercase)} "
              f"has {ev['out_degree']} arrows inside it", file=out)
    return EXIT_OK


def cmd_pnt(args, out):
    if args.start > args.stop:
        raise PreconditionError("--from must not exceed --to")
    p = _load(args)
    g = build_state_graph(p, args.max_strings)
    consts = pnt_constants(scc_decompose(g))
    print(f"R = {consts.R:.12f}  C = {consts.C}  L = {consts.L}", file=out)
    if not consts.applicable:
        raise PreconditionError("the asymptotic needs R > 1; not applicable to this algebra")
    c = counting_report(trace_powers(adjacency(g), args.stop * consts.L), False)
    rows = [(r.m, r.m * consts.L, r.pi, f"{r.ratio:.9f}")
            for r in pnt_ratio_table(c.pi, consts, range(args.start, args.stop + 1))]
    print(_table(["m", "mL", "pi(mL)", "ratio"], rows), file=out)
    return EXIT_OK


def cmd_report(args, out):
    p = load_presentation(args.input)
    rep = analyze(p, terms=args.terms, pnt_range=(args.start, args.stop))
    _write(args.json, rep.to_json(), out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="presentation file or bundled name (gp23, kronecker2, sb1)")
    common.add_argument("--uppercase", action="store_true",
                        help="write inverse syllables as capitals (A for a⁻¹)")
    common.add_argument("--max-strings", type=_positive, default=DEFAULT_CAP,
                        help="give up (exit 4) when one length has more strings than this")

    parser = argparse.ArgumentParser(prog="stringzeta", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="check admissibility and string-algebra conditions")
    s = sub.add_parser("strings", parents=[common], help="list the strings of one length")
    s.add_argument("--length", type=_positive, required=True)
    s = sub.add_parser("bands", parents=[common], help="list band classes by brute force")
    s.add_argument("--max-length", type=_positive, required=True)
    s = sub.add_parser("graph", parents=[common], help="state graph summary and DOT export")
    s.add_argument("--dot", metavar="PATH", help="write Graphviz DOT here ('-' for stdout)")
    s = sub.add_parser("zeta", parents=[common], help="det(I - tA) and zeta coefficients")
    s.add_argument("--terms", type=_positive, default=20)
    s = sub.add_parser("mu", parents=[common], help="N, pi and mu tables")
    s.add_argument("--terms", type=_positive, default=20)
    sub.add_parser("classify", parents=[common], help="domestic or non-domestic")
    s = sub.add_parser("pnt", parents=[common], help="prime-number-theorem ratio table")
    s.add_argument("--from", dest="start", type=_positive, default=1)
    s.add_argument("--to", dest="stop", type=_positive, default=30)
    s = sub.add_parser("report", parents=[common], help="full JSON report")
    s.add_argument("--json", metavar="PATH", required=True, help="output path ('-' for stdout)")
    s.add_argument("--terms", type=_positive, default=20)
    s.add_argument("--from", dest="start", type=_positive, default=1)
    s.add_argument("--to", dest="stop", type=_positive, default=30)
    return parser


COMMANDS = {
    "validate": cmd_validate, "strings": cmd_strings, "bands": cmd_bands, "graph": cmd_graph,
    "zeta": cmd_zeta, "mu": cmd_mu, "classify": cmd_classify, "pnt": cmd_pnt, "report": cmd_report,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (PresentationError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=err)
        return EXIT_PARSE
    except ValidationError as e:
        print(f"error: {e}", file=err)
        return EXIT_VALIDATION
    except PreconditionError as e:
        print(f"error: {e}", file=err)
        return EXIT_VALIDATION
    except ResourceLimitError as e:
        print(f"error: {e}", file=err)
        return EXIT_RESOURCE
    except (InternalConsistencyError, ConvergenceError) as e:
        print(f"internal error: {e}", file=err)
        return EXIT_INTERNAL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
