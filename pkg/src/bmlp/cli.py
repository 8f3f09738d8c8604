# -*- coding: utf-8 -*-
"""
Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 I/O or input format,
3 unknown symbol, 4 shape or pipeline error, 5 evaluation timeout.
"""
import argparse
import logging
import sys
from pathlib import Path

from .benchgen.bench import TASKS, BenchInputs, bench_run, write_csv
from .benchgen.graphs import GraphGenParams, gen_graph, gen_matrix, node_name
from .benchgen.triples import DEFAULT_RELATION_MAP, ingest_files, read_fb15k
from .config import CliConfig, configure_logging
from .datalog.codec import compile, format_matrix, select, to_facts, vector_constants, vector_to_facts
from .datalog.facts import read_facts, write_facts
from .datalog.store import load_matrix, save_matrix
from .datalog.symbols import build_symbols
from .engine.cache import MatrixCache
from .engine.modules import rms, smp
from .engine.pipeline import Pipeline, Step, is_foreign_pipeline, parse_pipeline, run_pipeline
from .errors import BmlpError, PipelineError, VerificationError
from .matrix.bitmat import BitVector, row
from .oracle.closure import floyd_warshall_closure
from .oracle.evaluator import evaluate
from .oracle.rules import is_foreign_program, transitive_program

logger = logging.getLogger(__name__)

BUILTIN_PIPELINES = {"is-foreign": is_foreign_pipeline}


# --- Flag types ---

def probability(text):
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return value


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} must be at least 1")
    return value


def non_negative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} must not be negative")
    return value


def seed_int(text):
    value = non_negative_int(text)
    if value >= 2 ** 64:
        raise argparse.ArgumentTypeError(f"{text} does not fit in 64 bits")
    return value


def relation_mapping(text):
    raw, sep, predicate = text.rpartition("=")
    if not sep or not raw or not predicate:
        raise argparse.ArgumentTypeError(f"expected RAW=PREDICATE, got {text!r}")
    return raw, predicate


# --- Commands ---

def cmd_compile(args, config):
    fb = read_facts(args.facts)
    st = build_symbols(fb, args.type)
    m = compile(fb, args.pred, st)
    save_matrix(m, st, args.out)
    print(f"compiled {args.pred} dim {m.rows}x{m.cols} bits {m.count()}")
    if args.print:
        print(format_matrix(m, st))
    return 0


def cmd_rms(args, config):
    r1, st = load_matrix(args.input)
    result = rms(r1, name=args.name)
    save_matrix(result.closure, st, args.out)
    print(f"rms passes {result.iterations} facts {result.closure.count()}")
    if args.print:
        for fact in to_facts(result.closure, args.name, st):
            print(fact)
    return 0


def cmd_smp(args, config):
    r1, st = load_matrix(args.input)
    v = select([args.source], st, name=args.name)
    result = smp(v, r1, name=args.name)
    save_matrix(result.reachable, st, args.out)
    print(f"smp passes {result.iterations} facts {result.reachable.count()}")
    if args.print:
        for fact in vector_to_facts(result.reachable, args.name, st, args.source):
            print(fact)
    return 0


def cmd_pipeline(args, config):
    fb = read_facts(args.facts)
    st = build_symbols(fb, args.type)
    if args.builtin:
        pipeline = BUILTIN_PIPELINES[args.builtin]()
    else:
        pipeline = parse_pipeline(Path(args.pipeline).read_text(encoding="utf-8"))
    cache = MatrixCache(config.workdir) if config.use_cache else None
    results = run_pipeline(pipeline, fb, st, cache=cache)
    if args.out_dir:
        for name, m in results.items():
            save_matrix(m, st, Path(args.out_dir) / f"{name}.bmlp")
    if args.print:
        if args.print not in results:
            raise PipelineError(f"no result named '{args.print}'")
        for line in _result_lines(results[args.print], args.print, st):
            print(line)
    return 0


def _result_lines(m, name, st):
    if m.rows == 1 and (isinstance(m, BitVector) or len(st) != 1):
        return [f"{name}({c})" for c in vector_constants(m, st)]
    return [str(fact) for fact in to_facts(m, name, st)]


def cmd_verify(args, config):
    failures = 0
    first = None
    for case in range(args.cases):
        seed = (args.seed + case) % 2 ** 64
        try:
            if args.program == "transitive":
                _verify_transitive(case, GraphGenParams(args.n, args.p, seed))
            else:
                _verify_is_foreign(case, args.n, args.p, seed)
        except VerificationError as e:
            print(f"case {case}: FAIL {e}")
            failures += 1
            first = first or e
            continue
        print(f"case {case}: PASS")
    if failures:
        print(f"{failures} of {args.cases} cases failed", file=sys.stderr)
        raise first
    return 0


def _compare(case, expected, actual):
    """Raises VerificationError naming the first differing fact."""
    expected, actual = set(expected), set(actual)
    if expected == actual:
        return
    missing = sorted(expected - actual)
    extra = sorted(actual - expected)
    if missing and (not extra or missing[0] <= extra[0]):
        raise VerificationError(case, missing[0], expected=True)
    raise VerificationError(case, extra[0], expected=False)


def _verify_transitive(case, params):
    fb = gen_graph(params)
    st = build_symbols(fb, "node")
    r1 = compile(fb, "edge", st)
    closure = rms(r1).closure
    actual = to_facts(closure, "path", st)
    _compare(case, evaluate(transitive_program(), fb), actual)
    names = st.universe
    warshall = floyd_warshall_closure(len(st), r1.pairs())
    _compare(case, (f"path({names[i]},{names[j]})" for i, j in warshall),
             (str(f) for f in actual))
    for i, source in enumerate(names):
        reachable = smp(select([source], st), r1).reachable
        expected = (f"path({source},{c})" for c in vector_constants(row(closure, i), st))
        got = (f"path({source},{c})" for c in vector_constants(reachable, st))
        _compare(case, expected, got)


def _verify_is_foreign(case, n, p, seed):
    contains = gen_graph(GraphGenParams(n, p, seed), "location", "contains")
    adjoins = gen_graph(GraphGenParams(n, p, (seed + 2 ** 32) % 2 ** 64), "location", "adjoins")
    fb = contains.union(adjoins)
    st = build_symbols(fb, "location")
    # bound explicitly: a sparse sample may have no contains or adjoins facts
    pipeline = Pipeline([Step("contains", "base", ("contains",)), Step("adjoins", "base", ("adjoins",)),
                         *is_foreign_pipeline()])
    results = run_pipeline(pipeline, fb, st)
    expected = evaluate(is_foreign_program(), fb).with_predicate("isForeign")
    _compare(case, expected, to_facts(results["isForeign"], "isForeign", st))


def cmd_bench(args, config):
    params = GraphGenParams(args.n, args.p, args.seed)
    m, st = gen_matrix(params)
    source = args.source or node_name(0)
    inputs = BenchInputs(matrix=m, symbols=st, source=source, p_t=args.p)
    report = bench_run(args.task, inputs, args.repeats, timeout=config.timeout)
    if args.csv == "-":
        write_csv([report], sys.stdout)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            write_csv([report], handle)
        print(f"{args.task} n={args.n} p_t={args.p} repeats={len(report.samples)} "
              f"mean {report.mean:.4f} s std {report.std:.4f} s"
              + (" (timeout)" if report.timed_out else ""))
    return 0


def cmd_print(args, config):
    m, st = load_matrix(args.input)
    print(format_matrix(m, st))
    return 0


def cmd_ingest(args, config):
    relation_map = dict(DEFAULT_RELATION_MAP)
    relation_map.update(args.relation or [])
    if args.fb15k:
        fb = read_fb15k(args.fb15k, relation_map, args.type)
    else:
        fb = ingest_files(args.triples, relation_map, args.type)
    Path(args.out).write_text(write_facts(fb), encoding="utf-8")
    entities = len(fb.unary(args.type))
    print(f"ingested {entities} entities {len(fb) - entities} facts")
    return 0


# --- Parser ---

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    common.add_argument("--workdir", help="cache directory (default $BMLP_WORKDIR or ./bmlp_temp)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write cached matrices")

    parser = argparse.ArgumentParser(
        prog="bmlp", description="Evaluate dyadic datalog programs with boolean matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", parents=[common], help="compile a relation to a matrix file")
    p.add_argument("--facts", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--type", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--print", action="store_true", help="also print the matrix")
    p.set_defaults(handler=cmd_compile)

    p = sub.add_parser("rms", parents=[common], help="full closure by repeated squaring")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--name", default="path", help="predicate of the derived facts")
    p.add_argument("--print", action="store_true", help="print the derived facts")
    p.set_defaults(handler=cmd_rms)

    p = sub.add_parser("smp", parents=[common], help="closure from one source constant")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--name", default="path", help="predicate of the derived facts")
    p.add_argument("--print", action="store_true", help="print the derived facts")
    p.set_defaults(handler=cmd_smp)

    p = sub.add_parser("pipeline", parents=[common], help="run a pipeline over a facts file")
    p.add_argument("--facts", required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--pipeline")
    source.add_argument("--builtin", choices=sorted(BUILTIN_PIPELINES))
    p.add_argument("--type", required=True)
    p.add_argument("--print", help="result whose facts are printed")
    p.add_argument("--out-dir", help="save every named result here")
    p.set_defaults(handler=cmd_pipeline)

    p = sub.add_parser("verify", parents=[common], help="check the engine against the oracle")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--p", type=probability, required=True)
    p.add_argument("--seed", type=seed_int, default=0)
    p.add_argument("--cases", type=non_negative_int, default=1)
    p.add_argument("--program", choices=["transitive", "is-foreign"], default="transitive")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time rms or smp on random graphs")
    p.add_argument("--task", choices=[t for t in TASKS if t != "pipeline"], required=True)
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--p", type=probability, required=True)
    p.add_argument("--repeats", type=non_negative_int, default=1)
    p.add_argument("--seed", type=seed_int, default=0)
    p.add_argument("--source", help="source constant for dg-partial (default n_0)")
    p.add_argument("--timeout", type=float, help="per-sample cap in seconds (default 15000)")
    p.add_argument("--csv", required=True, help="report path, or - for stdout")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("print", parents=[common], help="print a matrix file")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(handler=cmd_print)

    p = sub.add_parser("ingest", parents=[common], help="convert triples to a facts file")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--triples", nargs="+")
    source.add_argument("--fb15k", help="directory holding train/valid/test.txt")
    p.add_argument("--relation", action="append", type=relation_mapping,
                   help="extra RAW=PREDICATE mapping (repeatable)")
    p.add_argument("--type", default="location")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_ingest)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = CliConfig.resolve(args.workdir, args.no_cache, args.verbose,
                                   getattr(args, "timeout", None))
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.command == "pipeline":
        config.prepare()
    try:
        return args.handler(args, config)
    except BmlpError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except FileNotFoundError as e:
        print(f"error: no such file: {e.filename}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
