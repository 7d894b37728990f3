"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 hypothesis violated (descent on
non-quasi-amplified data), 4 honest incompleteness (search failed, field
too large, no positive-cone witness).
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .common import (FieldTooLarge, HypothesisViolated, InputError,
                     NoneInPositiveCone, NotContractible, NotInvariant,
                     NotIsometry, BadSignature, SearchFailed,
                     TranslationUnsupported, EntropyClass)
from .serialize import (envelope, float_to_rat, load_problem, parse_int,
                        parse_number, parse_int_matrix, parse_rat_matrix,
                        poly_from_record, radius_record, rat_str)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_HYPOTHESIS = 3
EXIT_INCOMPLETE = 4

_INVALID = (InputError, NotIsometry, BadSignature, NotInvariant,
            NotContractible, TranslationUnsupported)
_INCOMPLETE = (SearchFailed, FieldTooLarge, NoneInPositiveCone)


def _abelian_spec(record):
    from .abelian import EndoSpec
    n = parse_int(record.get("n"), "n")
    matrix = parse_int_matrix(record.get("matrix"), "matrix")
    return EndoSpec(n, matrix, bool(record.get("has_translation", False)))


def _lattice_iso(record):
    from .hyperlattice import QuadLattice, verify_isometry
    gram = parse_int_matrix(record.get("gram"), "gram")
    matrix = parse_int_matrix(record.get("matrix"), "matrix")
    lattice = QuadLattice(gram, len(gram))
    return verify_isometry(lattice, matrix)


def _cone_endo(record):
    from .conedyn import ConeEndo, PolyCone
    dim = parse_int(record.get("dim"), "dim")
    gens = parse_rat_matrix(record.get("generators"), "generators")
    matrix = parse_rat_matrix(record.get("matrix"), "matrix")
    cone = PolyCone(dim, gens)
    return ConeEndo(matrix, cone)


def _require_kind(record, kind):
    if record["kind"] != kind:
        raise InputError(f"expected a {kind!r} problem file, "
                         f"got {record['kind']!r}")


# -- command handlers: each returns (result dict, human lines) -------------------

def cmd_classify_abelian(record, args):
    _require_kind(record, "abelian")
    from .abelian import classify
    spec = _abelian_spec(record)
    report = classify(spec)
    result = {
        "degree": report.degree,
        "amplified": report.amplified,
        "pcd": report.pcd,
        "entropy": report.entropy.value,
        "dense_orbit": report.dense_orbit,
        "spectral_radius": radius_record(report.spectral_radius),
        "matrix_radius": (None if report.matrix_radius is None
                          else radius_record(report.matrix_radius)),
    }
    lines = [f"degree        {report.degree}",
             f"amplified     {str(report.amplified).lower()}",
             f"pcd           {str(report.pcd).lower()}",
             f"entropy       {report.entropy.value}",
             f"dense_orbit   {str(report.dense_orbit).lower()}"]
    return result, lines


def cmd_fix_count(record, args):
    _require_kind(record, "abelian")
    from .abelian import fix_count
    spec = _abelian_spec(record)
    count = fix_count(spec, args.m)
    result = {"m": args.m,
              "fix_count": "Infinite" if count is None else count}
    return result, [f"fix_count(f^{args.m})  {result['fix_count']}"]


def cmd_torsion_oracle(record, args):
    _require_kind(record, "abelian")
    from .abelian import torsion_fixed_count, torsion_fixed_count_bruteforce
    spec = _abelian_spec(record)
    count = torsion_fixed_count(spec, args.m, args.torsion)
    result = {"m": args.m, "N": args.torsion, "fixed_in_torsion": count}
    lines = [f"fixed points of f^{args.m} in A[{args.torsion}]  {count}"]
    if args.brute_force:
        brute = torsion_fixed_count_bruteforce(spec, args.m, args.torsion)
        result["brute_force"] = brute
        result["agree"] = brute == count
        lines.append(f"brute force  {brute}  agree={result['agree']}")
    return result, lines


def cmd_classify_lattice(record, args):
    _require_kind(record, "lattice")
    from .hyperlattice import (entropy_class, null_fixed_witness,
                               positive_entropy_witness, finite_order_test)
    iso = _lattice_iso(record)
    report = entropy_class(iso)
    result = {"entropy": report.entropy.value,
              "spectral_radius": radius_record(report.spectral_radius)}
    lines = [f"entropy       {report.entropy.value}"]
    if report.entropy == EntropyClass.NULL:
        order = finite_order_test(iso)
        result["finite_order"] = order
        k, v, qv = null_fixed_witness(iso)
        result["null_witness"] = {"power": k, "vector": list(v),
                                  "q_value": qv}
        lines.append(f"finite_order  {order}")
        lines.append(f"fixed vector  power={k} v={list(v)} q(v)={qv}")
    else:
        result["salem_verdict"] = report.salem_verdict.value
        lines.append(f"salem         {report.salem_verdict.value}")
        if args.max_degree is not None:
            import exactdyn.hyperlattice as hl
            old = hl.FIELD_DEGREE_BOUND
            hl.FIELD_DEGREE_BOUND = args.max_degree
            try:
                cert = positive_entropy_witness(iso)
            finally:
                hl.FIELD_DEGREE_BOUND = old
        else:
            cert = positive_entropy_witness(iso)
        result["witness"] = {
            "min_poly": [rat_str(c) for c in cert.min_poly.coeffs],
            "a_interval": [rat_str(cert.a_interval[0]),
                           rat_str(cert.a_interval[1])],
            "a": [rat_str(c) for c in cert.a_coeffs],
            "d1": [[rat_str(c) for c in e] for e in cert.d1],
            "d2": [[rat_str(c) for c in e] for e in cert.d2],
            "q_d1_d2": [rat_str(c) for c in cert.q_d1_d2],
            "q_d1_plus_d2": [rat_str(c) for c in cert.q_d1_plus_d2],
        }
        lines.append(f"q(D1,D2)      {[rat_str(c) for c in cert.q_d1_d2]}")
        lines.append(f"q(D1+D2)      "
                     f"{[rat_str(c) for c in cert.q_d1_plus_d2]}")
    return result, lines


def cmd_descend_cone(record, args):
    _require_kind(record, "cone")
    from .conedyn import descend
    endo = _cone_endo(record)
    big = record.get("big")
    if big is None:
        raise InputError("descend-cone needs a 'big' vector in the file")
    trace = descend(endo, [parse_number(v) for v in big])
    result = {
        "steps": [{"ray": list(s.ray),
                   "quotient_map": [[rat_str(v) for v in row]
                                    for row in s.quotient_map],
                   "induced_matrix": [[rat_str(v) for v in row]
                                      for row in s.induced_matrix]}
                  for s in trace.steps],
        "big_class_path": [[rat_str(v) for v in b]
                           for b in trace.big_class_path],
        "final_amplified": trace.final_amplified,
        "final_dim": trace.final_endo.cone.dim,
    }
    lines = [f"contractions  {len(trace.steps)}",
             f"final dim     {trace.final_endo.cone.dim}",
             f"amplified     {str(trace.final_amplified).lower()}"]
    return result, lines


def cmd_poly_analyze(record, args):
    _require_kind(record, "poly")
    from .intpoly import root_location_summary
    p = poly_from_record(record)
    summary = root_location_summary(p)
    result = {"degree": summary.degree,
              "unit_circle_roots": summary.distinct_unit_circle_roots,
              "real_roots_gt_one": summary.distinct_real_roots_gt_one,
              "cyclotomic_divisors": sorted(summary.cyclotomic_divisors),
              "reciprocal": summary.is_reciprocal}
    lines = [f"degree              {summary.degree}",
             f"unit-circle roots   {summary.distinct_unit_circle_roots}",
             f"real roots > 1      {summary.distinct_real_roots_gt_one}",
             f"cyclotomic divisors {sorted(summary.cyclotomic_divisors)}",
             f"reciprocal          {str(summary.is_reciprocal).lower()}"]
    return result, lines


def cmd_salem_check(record, args):
    _require_kind(record, "poly")
    from .intpoly import salem_check
    p = poly_from_record(record)
    verdict = salem_check(p)
    return {"verdict": verdict.value}, [f"salem  {verdict.value}"]


_COMMANDS = {
    "classify-abelian": cmd_classify_abelian,
    "fix-count": cmd_fix_count,
    "torsion-oracle": cmd_torsion_oracle,
    "classify-lattice": cmd_classify_lattice,
    "descend-cone": cmd_descend_cone,
    "poly-analyze": cmd_poly_analyze,
    "salem-check": cmd_salem_check,
}

_DEFAULT_COMMAND = {"abelian": "classify-abelian",
                    "lattice": "classify-lattice",
                    "cone": "descend-cone",
                    "poly": "poly-analyze"}


def _run_single(command: str, path: str, args) -> tuple[int, str, list[str]]:
    """Returns (exit code, machine line, human lines)."""
    try:
        record = load_problem(path)
        result, lines = _COMMANDS[command](record, args)
        return EXIT_OK, envelope(__version__, record, command, result), lines
    except _INVALID as exc:
        return EXIT_INVALID, "", [f"error: {exc}"]
    except HypothesisViolated as exc:
        return EXIT_HYPOTHESIS, "", [f"hypothesis violated: {exc}"]
    except _INCOMPLETE as exc:
        return EXIT_INCOMPLETE, "", [f"incomplete: {exc}"]


def _batch_worker(item):
    path, args_dict = item
    args = argparse.Namespace(**args_dict)
    try:
        record = load_problem(path)
        command = _DEFAULT_COMMAND[record["kind"]]
        if record["kind"] == "cone" and record.get("big") is None:
            raise InputError("cone file without 'big' vector")
        result, _ = _COMMANDS[command](record, args)
        line = envelope(__version__, record, command, result)
        return path, EXIT_OK, line, _summary_key(record["kind"], result)
    except _INVALID as exc:
        return path, EXIT_INVALID, "", f"invalid: {exc}"
    except HypothesisViolated:
        return path, EXIT_HYPOTHESIS, "", "hypothesis_violated"
    except _INCOMPLETE:
        return path, EXIT_INCOMPLETE, "", "incomplete"


def _summary_key(kind: str, result: dict) -> str:
    if kind == "abelian":
        return (f"abelian amplified={result['amplified']} "
                f"pcd={result['pcd']} entropy={result['entropy']}")
    if kind == "lattice":
        return f"lattice entropy={result['entropy']}"
    if kind == "cone":
        return f"cone final_amplified={result['final_amplified']}"
    return "poly"


def cmd_batch(args) -> int:
    import os
    paths = sorted(os.path.join(args.directory, name)
                   for name in os.listdir(args.directory)
                   if name.endswith(".json"))
    args_dict = {"m": args.m, "torsion": args.torsion,
                 "brute_force": False, "max_degree": args.max_degree}
    items = [(p, args_dict) for p in paths]
    if args.parallel and args.parallel > 1 and items:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            outcomes = list(pool.map(_batch_worker, items))
    else:
        outcomes = [_batch_worker(item) for item in items]
    outcomes.sort(key=lambda t: t[0])
    machine_lines = []
    counts: dict[str, int] = {}
    worst = EXIT_OK
    for path, code, line, key in outcomes:
        counts[key] = counts.get(key, 0) + 1
        if line:
            machine_lines.append(line)
        if code != EXIT_OK:
            worst = max(worst, code)
            print(f"{path}: {key}", file=sys.stderr)
    for key in sorted(counts):
        print(f"{counts[key]:6d}  {key}")
    print(f"{len(outcomes):6d}  total")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            for line in machine_lines:
                fh.write(line + "\n")
    return worst


def cmd_generate_corpus(args) -> int:
    from .corpus import generate
    paths = generate(args.kind, args.count, args.seed, args.directory,
                     n=args.n)
    print(f"wrote {len(paths)} files to {args.directory}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactdyn",
        description="Exact dynamical classification of integer matrices, "
                    "hyperbolic-lattice isometries, and cone maps.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--json", metavar="PATH",
                       help="write the machine-readable envelope here")
        p.add_argument("--verbose", action="store_true")
        p.add_argument("--max-degree", type=int, default=16,
                       help="refuse number fields beyond this degree")
        p.add_argument("--m", type=int, default=1,
                       help="iterate exponent for fixed-point commands")
        p.add_argument("--torsion", "--N", dest="torsion", type=int,
                       default=1, metavar="N", help="torsion level")
        p.add_argument("--brute-force", action="store_true",
                       help="cross-check the torsion count by enumeration")

    for name in _COMMANDS:
        add_common(sub.add_parser(name))

    b = sub.add_parser("batch")
    b.add_argument("directory")
    b.add_argument("--parallel", type=int, default=1, metavar="N")
    b.add_argument("--json", metavar="PATH")
    b.add_argument("--verbose", action="store_true")
    b.add_argument("--max-degree", type=int, default=16)
    b.add_argument("--m", type=int, default=1)
    b.add_argument("--torsion", type=int, default=1)

    g = sub.add_parser("generate-corpus")
    g.add_argument("directory")
    g.add_argument("--kind", choices=("abelian", "lattice", "cone"),
                   required=True)
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=2, help="dimension")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "batch":
        return cmd_batch(args)
    if args.command == "generate-corpus":
        return cmd_generate_corpus(args)
    code, machine, lines = _run_single(args.command, args.file, args)
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    for line in lines:
        print(line, file=stream)
    if code == EXIT_OK and args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(machine + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
