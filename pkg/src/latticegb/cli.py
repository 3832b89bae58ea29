"""Command line interface.

Exit codes:

=====  =========================================================
0      success (``gbasis``/``saturate``: the basis is complete)
1      usage or input error
2      ``gbasis``/``saturate``: basis truncated at ``--max-degree``
3      ``gbasis``: witness of non-saturation found;
       ``verify-kernel``: binomial is not in the kernel
4      ``oracle-compare``: some degree does not match
=====  =========================================================
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import dataclass

from . import __version__
from .algebra import Grading, degree_of
from .engine import (
    NotSaturated,
    TruncatedGB,
    buchberger,
    format_stats_line,
    interreduce,
    prepare_generators,
    saturate,
)
from .errors import DegreeOutOfRangeError, LatticeGBError
from .formats import (
    default_names,
    parse_symbolic,
    parse_terms,
    parse_vector_file,
    render_monomial,
    render_symbolic,
    render_vector_file,
)
from .oracle import (
    build_toric_matrix,
    compare_truncated,
    toric_kernel_contains,
)
from .reduction import monomial_normal_form

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_TRUNCATED = 2
EXIT_WITNESS = 3
EXIT_MISMATCH = 4


@dataclass
class WitnessReport:
    witness: tuple
    symbolic: str
    witness_degree: int
    extraction_degree: int
    pre_reduction: tuple
    cofactor: str
    truncation: int
    basis_size: int
    stats: object

    @classmethod
    def from_outcome(cls, outcome, stats, names):
        w = outcome.witness
        return cls(
            witness=w.vector,
            symbolic=render_symbolic(w.vector, names),
            witness_degree=w.degree,
            extraction_degree=outcome.extracted_degree,
            pre_reduction=outcome.pre_reduction,
            cofactor=render_monomial(outcome.cofactor, names),
            truncation=outcome.extracted_degree,
            basis_size=sum(1 for b in outcome.basis if b.degree < outcome.extracted_degree),
            stats=stats.totals(),
        )

    def lines(self):
        t = self.stats
        return [
            "status: not-saturated",
            f"witness: {self.symbolic}",
            "witness_vector: " + " ".join(map(str, self.witness)),
            f"witness_degree: {self.witness_degree}",
            f"extraction_degree: {self.extraction_degree}",
            "pre_reduction: " + " ".join(map(str, self.pre_reduction)),
            f"cofactor: {self.cofactor}",
            f"truncated_basis: {self.basis_size} element{'' if self.basis_size == 1 else 's'}, "
            f"{self.truncation}-truncated",
            f"stats: added={t.added} spairs={t.spairs} pruned_coprime={t.pruned_coprime} "
            f"pruned_gm={t.pruned_gm} zero_reductions={t.zero_reductions}",
        ]


def _names(arg, n):
    if arg is None:
        return default_names(n)
    names = [s.strip() for s in arg.split(",")]
    if len(names) != n:
        raise LatticeGBError(f"--names lists {len(names)} names, problem has {n} variables")
    return names


def _load(path):
    with open(path) as fh:
        return parse_vector_file(fh.read())


def _stats_printer(args, out):
    if not args.stats:
        return None

    def on_degree(d, ds, size):
        print(format_stats_line(d, ds, size), file=out, flush=True)

    return on_degree


def _print_basis(basis, names, out):
    print(f"basis: {len(basis)}", file=out)
    for b in basis:
        print(render_symbolic(b.vector, names), file=out)


def _write_basis(args, problem, basis, note):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(render_vector_file(problem, [b.vector for b in basis], comment=note))


def cmd_gbasis(args, out, err):
    problem = _load(args.file)
    names = _names(args.names, problem.n)
    grading, order = problem.grading, problem.order
    outcome, stats = buchberger(problem.generators, grading, order, mode=args.mode,
                                max_degree=args.max_degree, prune=not args.no_prune,
                                on_degree=_stats_printer(args, out))
    if args.stats:
        print(f"# wall_time={stats.wall_time:.3f}s", file=err)
    if isinstance(outcome, NotSaturated):
        report = WitnessReport.from_outcome(outcome, stats, names)
        for line in report.lines():
            print(line, file=out)
        return EXIT_WITNESS
    basis = list(outcome.basis)
    if args.reduce:
        basis = interreduce(basis, grading, order)
    if isinstance(outcome, TruncatedGB):
        print(f"status: truncated at degree {outcome.bound}", file=out)
        note = f"{outcome.bound}-truncated Groebner basis"
    else:
        print("status: completed", file=out)
        note = "Groebner basis"
    _print_basis(basis, names, out)
    _write_basis(args, problem, basis, note)
    return EXIT_TRUNCATED if isinstance(outcome, TruncatedGB) else EXIT_OK


def cmd_saturate(args, out, err):
    problem = _load(args.file)
    names = _names(args.names, problem.n)
    grading, order = problem.grading, problem.order
    count = 0

    def on_witness(ns):
        nonlocal count
        count += 1
        print(f"witness {count}: {render_symbolic(ns.witness.vector, names)} "
              f"(degree {ns.witness.degree}, extracted at {ns.extracted_degree})",
              file=out, flush=True)

    start = time.perf_counter()
    result = saturate(problem.generators, grading, order, max_degree=args.max_degree,
                      prune=not args.no_prune, on_witness=on_witness,
                      on_degree=_stats_printer(args, out))
    if args.stats:
        print(f"# wall_time={time.perf_counter() - start:.3f}s", file=err)
    truncated = isinstance(result.outcome, TruncatedGB)
    basis = list(result.basis)
    if args.reduce:
        basis = interreduce(basis, grading, order)
    print(f"witnesses: {len(result.witnesses)}", file=out)
    print(f"status: truncated at degree {result.outcome.bound}" if truncated
          else "status: completed", file=out)
    _print_basis(basis, names, out)
    _write_basis(args, problem, basis, "saturated generating set")
    return EXIT_TRUNCATED if truncated else EXIT_OK


def cmd_nf(args, out, err):
    problem = _load(args.file)
    names = _names(args.names, problem.n)
    gb = _load(args.gb)
    if gb.n != problem.n:
        raise LatticeGBError(f"--gb file has {gb.n} variables, problem has {problem.n}")
    basis, _ = prepare_generators(gb.generators, problem.grading, problem.order)
    lead, trail = parse_terms(args.binomial, names)
    d = problem.grading(lead)
    if problem.grading(trail) != d:
        raise LatticeGBError("binomial is not homogeneous for the grading")
    if args.bound is not None and d >= args.bound:
        raise DegreeOutOfRangeError(f"degree {d} is not below the truncation bound {args.bound}")
    # plain reduction of each monomial; sat steps would change the question
    a, b = monomial_normal_form(lead, basis), monomial_normal_form(trail, basis)
    member = a == b
    if member:
        print("normal form: 0", file=out)
    else:
        print(f"normal form: {render_monomial(a, names)} - {render_monomial(b, names)}",
              file=out)
    print(f"MEMBER: {'yes' if member else 'no'}", file=out)
    return EXIT_OK


def cmd_verify_kernel(args, out, err):
    try:
        dims = tuple(int(s) for s in args.dims.split(","))
    except ValueError:
        raise LatticeGBError(f"--dims must be I,J,K, got {args.dims!r}") from None
    if len(dims) != 3:
        raise LatticeGBError(f"--dims must be I,J,K, got {args.dims!r}")
    A = build_toric_matrix(*dims)
    names = list(A.col_labels)
    v = parse_symbolic(args.binomial, names)
    grading = Grading.standard(len(names))
    homogeneous = grading(v) == 0
    inside = toric_kernel_contains(A, v)
    print(f"variables: {len(names)}", file=out)
    print(f"degree: {degree_of(v, grading)}", file=out)
    print(f"homogeneous: {'yes' if homogeneous else 'no'}", file=out)
    print(f"IN KERNEL: {'yes' if inside else 'no'}", file=out)
    return EXIT_OK if inside else EXIT_WITNESS


def cmd_oracle_compare(args, out, err):
    problem = _load(args.file)
    grading, order = problem.grading, problem.order
    outcome, _ = buchberger(problem.generators, grading, order, mode="check",
                            max_degree=args.max_degree)
    bound = args.max_degree
    if isinstance(outcome, NotSaturated):
        bound = min(bound, outcome.extracted_degree)
        print(f"# witness found at degree {outcome.extracted_degree}; "
              f"comparing degrees below {bound}", file=out)
    result = compare_truncated(outcome.basis, problem.generators, grading, order, bound)
    for s, ok in result.items():
        print(f"deg={s} {'MATCH' if ok else 'MISMATCH'}", file=out)
    return EXIT_OK if all(result.values()) else EXIT_MISMATCH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latticegb",
        description="Groebner bases and saturation checks for binomial ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="vector problem file")
        p.add_argument("--max-degree", type=int, default=None, metavar="D",
                       help="process only items of degree < D")
        p.add_argument("--out", metavar="FILE", help="write the basis as a vector file")
        p.add_argument("--stats", action="store_true", help="print per-degree statistics")
        p.add_argument("--names", help="comma separated variable names (default x1..xn)")
        p.add_argument("--reduce", action="store_true",
                       help="interreduce the basis before printing")
        p.add_argument("--no-prune", action="store_true",
                       help="disable the coprime and minimal-syzygy S-pair criteria")

    p = sub.add_parser("gbasis", help="compute a (truncated) Groebner basis")
    common(p)
    p.add_argument("--mode", choices=("check", "saturated"), default="check")
    p.set_defaults(func=cmd_gbasis)

    p = sub.add_parser("saturate", help="add witnesses until check mode completes")
    common(p)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("nf", help="plain normal form and ideal membership")
    p.add_argument("file", help="vector problem file (grading and term order)")
    p.add_argument("--gb", required=True, help="vector file holding a Groebner basis")
    p.add_argument("--binomial", required=True)
    p.add_argument("--names")
    p.add_argument("--bound", type=int, default=None,
                   help="truncation degree of the --gb basis")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("verify-kernel", help="check a binomial against x_ijk -> u_ij v_ik w_jk")
    p.add_argument("--dims", required=True, help="table dimensions I,J,K")
    p.add_argument("--binomial", required=True, help="binomial in the variables xijk")
    p.set_defaults(func=cmd_verify_kernel)

    p = sub.add_parser("oracle-compare",
                       help="compare truncated initial ideals with brute-force linear algebra")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True, metavar="D")
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out, err)
    except (LatticeGBError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
