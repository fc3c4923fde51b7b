"""
command-line front end

    sombor greedy -d 3,2
    sombor optimize --input tree.txt --trace
    sombor verify -d 3,3,2 --format json
    sombor sweep --max-n 9 --format csv

exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
failure, 4 enumeration budget exceeded.
"""

import argparse
import sys

import numpy as np

from .config import COMMANDS, FORMATS, STRATEGIES, RunConfig, load_config
from .decomposition import base_tree, decompose, trace_records
from .degrees import parse_degrees
from .errors import BudgetExceededError, EnumerationError, StepLimitError
from .greedy import build_greedy_tree
from .io.report import (decomposition_frame, dumps, edge_frame, enumeration_frame, envelope, index_frame,
                        report_frame, survey_frame, sweep_frame, to_csv, trace_frame)
from .io.treefile import format_edgelist, read_tree, to_dot
from .oracle import (enumerate_trees, prufer_encode, random_tree_with_degrees, survey_fixed_points, sweep,
                     verify_minimality)
from .swap import local_search
from .weights import INDICES


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FAILED = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    """flags that do not make sense together."""


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


## helpers

def _json(command, result):
    return dumps(envelope(command, result))


def _unsupported(config):
    raise UsageError("%s does not support --format %s" % (config.command, config.output_format))


def _require_degrees(config):
    if config.degree_sequence is None:
        raise UsageError("%s needs -d/--degrees" % config.command)
    return config.degree_sequence


def _source_tree(config):
    """tree from --input, or the greedy tree of -d."""
    if config.input_path is not None:
        return read_tree(config.input_path)
    if config.degree_sequence is not None:
        return build_greedy_tree(config.degree_sequence).tree
    raise UsageError("%s needs --input or -d/--degrees" % config.command)


def _edges_text(edges):
    return " ".join("%d-%d" % e for e in edges)


## commands

def cmd_greedy(config):
    D = _require_degrees(config)
    rooted = build_greedy_tree(D)
    tree = rooted.tree
    value = tree.sombor()

    if config.output_format == "json":
        return _json("greedy", {"degree_sequence": D.to_list(), "root": rooted.root,
                                "tree": tree.to_dict(), "sombor": value}), EXIT_OK
    if config.output_format == "dot":
        return to_dot(tree, name="greedy", sombor=value), EXIT_OK
    if config.output_format == "csv":
        return to_csv(edge_frame(tree)), EXIT_OK
    return format_edgelist(tree) + "# SO = %.9f\n" % value, EXIT_OK


def cmd_index(config):
    tree = _source_tree(config)
    if config.index is not None:
        values = {config.index: tree.index(INDICES[config.index])}
    else:
        values = tree.indices()

    if config.output_format == "json":
        return _json("index", {"tree": tree.to_dict(), "indices": values}), EXIT_OK
    if config.output_format == "csv":
        return to_csv(index_frame(values)), EXIT_OK
    if config.output_format == "dot":
        _unsupported(config)
    return "".join("%s = %.9f\n" % item for item in values.items()), EXIT_OK


def cmd_optimize(config):
    '''
    swap descent from a tree file, or from a random tree realizing -d drawn
    with --seed.
    '''
    if config.input_path is not None:
        start = read_tree(config.input_path)
    elif config.degree_sequence is not None:
        start = random_tree_with_degrees(config.degree_sequence, np.random.default_rng(config.seed))
    else:
        raise UsageError("optimize needs --input or -d/--degrees")

    result = local_search(start, strategy=config.strategy, step_limit=config.step_limit)

    if config.output_format == "json":
        return _json("optimize", {
            "start": start.to_dict(),
            "tree": result.tree.to_dict(),
            "strategy": config.strategy,
            "steps": result.steps,
            "initial_sombor": result.initial_sombor,
            "final_sombor": result.final_sombor,
            "trace": [item.to_dict() for item in result.trace],
        }), EXIT_OK
    if config.output_format == "csv":
        return to_csv(trace_frame(result.trace)), EXIT_OK
    if config.output_format == "dot":
        return to_dot(result.tree, name="optimized", sombor=result.final_sombor), EXIT_OK

    _lines = []
    if config.trace:
        for item in result.trace:
            _lines.append("# step %d: removed %s added %s delta = %.9f SO = %.9f\n"
                          % (item.step, _edges_text(item.removed), _edges_text(item.added), item.delta, item.sombor))
    _lines.append("# steps = %d\n" % result.steps)
    _lines.append("# initial SO = %.9f\n" % result.initial_sombor)
    _lines.append(format_edgelist(result.tree))
    _lines.append("# SO = %.9f\n" % result.final_sombor)
    return "".join(_lines), EXIT_OK


def cmd_enumerate(config):
    D = _require_degrees(config)
    rows = []
    for tree in enumerate_trees(D, budget=config.budget):
        rows.append({"code": " ".join(str(label) for label in prufer_encode(tree)),
                     "sombor": tree.sombor(),
                     "canonical_form": tree.canonical_form()})
    best = min(item["sombor"] for item in rows)

    if config.output_format == "json":
        return _json("enumerate", {"degree_sequence": D.to_list(), "count": len(rows),
                                   "min_sombor": best, "trees": rows}), EXIT_OK
    if config.output_format == "csv":
        return to_csv(enumeration_frame(rows)), EXIT_OK
    if config.output_format == "dot":
        _unsupported(config)
    _lines = ["# %d labeled trees, min SO = %.9f\n" % (len(rows), best)]
    _lines += ["[%s] SO = %.9f\n" % (item["code"], item["sombor"]) for item in rows]
    return "".join(_lines), EXIT_OK


def cmd_verify(config):
    """one sequence with -d; without it, every sequence up to --max-n."""
    if config.degree_sequence is None:
        return cmd_sweep(config)

    report = verify_minimality(config.degree_sequence, budget=config.budget, tolerance=config.tolerance)
    code = EXIT_OK if report.passed else EXIT_FAILED

    if config.output_format == "json":
        return _json("verify", report.to_dict()), code
    if config.output_format == "csv":
        return to_csv(report_frame(report)), code
    if config.output_format == "dot":
        return to_dot(report.argmin, name="argmin", sombor=report.oracle_min), code

    _lines = [
        "degree sequence: %s" % report.degree_sequence,
        "n = %d" % report.n,
        "labeled trees = %d" % report.labeled_count,
        "isomorphism classes = %d" % report.isomorphism_classes,
        "minimizer classes = %d" % report.minimizer_classes,
        "greedy SO = %.9f" % report.greedy_value,
        "oracle min SO = %.9f" % report.oracle_min,
        "result: %s" % ("pass" if report.passed else "FAIL"),
    ]
    return "\n".join(_lines) + "\n", code


def cmd_sweep(config):
    result = sweep(config.max_n, budget=config.budget, tolerance=config.tolerance,
                   workers=config.workers, verbose=config.verbose)
    if result.failures:
        code = EXIT_FAILED
    elif result.skipped:
        code = EXIT_BUDGET
    else:
        code = EXIT_OK

    if config.output_format == "json":
        return _json("sweep", {
            "max_n": config.max_n,
            "all_passed": result.all_passed,
            "reports": [item.to_dict() for item in result.reports],
            "skipped": [{"degree_sequence": D.to_list(), "labeled_count": count} for D, count in result.skipped],
        }), code
    if config.output_format == "csv":
        return to_csv(sweep_frame(result)), code
    if config.output_format == "dot":
        _unsupported(config)

    _lines = []
    for item in result.reports:
        _lines.append("%-20s n = %2d  labeled = %9d  greedy = %.9f  oracle = %.9f  %s\n"
                      % (item.degree_sequence, item.n, item.labeled_count, item.greedy_value, item.oracle_min,
                         "pass" if item.passed else "FAIL"))
    for D, count in result.skipped:
        _lines.append("%-20s n = %2d  labeled = %9d  skipped\n" % (D, D.total_vertices(), count))
    _lines.append("# %d sequences: %d pass, %d fail, %d skipped\n"
                  % (len(result.reports) + len(result.skipped),
                     len(result.reports) - len(result.failures), len(result.failures), len(result.skipped)))
    return "".join(_lines), code


def cmd_decompose(config):
    tree = _source_tree(config)
    steps = decompose(tree)
    base = base_tree(tree)
    base_value = base.sombor()
    records = trace_records(steps, base_value)
    total = records[-1]["running_total"] if records else base_value
    direct = tree.sombor()

    if config.output_format == "json":
        return _json("decompose", {"tree": tree.to_dict(), "base_tree": base.to_dict(),
                                   "base_sombor": base_value, "steps": records,
                                   "sombor": total, "direct_sombor": direct}), EXIT_OK
    if config.output_format == "csv":
        return to_csv(decomposition_frame(records)), EXIT_OK
    if config.output_format == "dot":
        return to_dot(base, name="base", sombor=base_value), EXIT_OK

    _lines = ["# T_1 SO = %.9f\n" % base_value]
    for item in records:
        _lines.append("t = %d  attached_at = %d  d_t = %d  d_p = %d  added_leaves = %d  delta = %.9f  SO = %.9f\n"
                      % (item["t"], item["attached_at"], item["d_t"], item["d_p"], item["added_leaves"],
                         item["delta"], item["running_total"]))
    _lines.append("# SO = %.9f (direct %.9f)\n" % (total, direct))
    return "".join(_lines), EXIT_OK


def cmd_survey(config):
    D = _require_degrees(config)
    survey = survey_fixed_points(D, budget=config.budget, tolerance=config.tolerance,
                                 strategy=config.strategy, verbose=config.verbose)
    code = EXIT_OK if survey.below_greedy == 0 and survey.all_fixed else EXIT_FAILED

    if config.output_format == "json":
        return _json("survey", survey.to_dict()), code
    if config.output_format == "csv":
        return to_csv(survey_frame(survey)), code
    if config.output_format == "dot":
        _unsupported(config)

    _lines = [
        "degree sequence: %s" % survey.degree_sequence,
        "starts = %d" % survey.starts,
        "max steps = %d" % survey.max_steps,
        "distinct fixed points = %d" % len(survey.fixed_point_values),
        "at greedy = %d" % survey.at_greedy,
        "above greedy = %d" % survey.above_greedy,
        "below greedy = %d" % survey.below_greedy,
        "greedy SO = %.9f" % survey.greedy_value,
    ]
    _lines += ["fixed point SO = %.9f" % value for value in survey.fixed_point_values]
    return "\n".join(_lines) + "\n", code


COMMAND_TABLE = {
    "greedy": cmd_greedy,
    "index": cmd_index,
    "optimize": cmd_optimize,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "decompose": cmd_decompose,
    "survey": cmd_survey,
}


## argument parsing

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", "--degrees", default=None,
                        help="degree sequence, e.g. 4,3,3,2 (pendant 1s are dropped)")
    common.add_argument("--input", dest="input_path", default=None, help="tree file, edge list or .json")
    common.add_argument("--format", dest="output_format", choices=FORMATS, default=None)
    common.add_argument("--budget", type=int, default=None, help="largest enumeration allowed")
    common.add_argument("--tol", dest="tolerance", type=float, default=None, help="comparison tolerance")
    common.add_argument("--max-n", dest="max_n", type=int, default=None, help="vertex bound of a sweep")
    common.add_argument("--trace", action="store_true", default=None, help="print every swap")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--workers", type=int, default=None, help="sweep processes")
    common.add_argument("--strategy", choices=STRATEGIES, default=None)
    common.add_argument("--step-limit", dest="step_limit", type=int, default=None)
    common.add_argument("--index", choices=sorted(INDICES), default=None)
    common.add_argument("--output", dest="output_path", default=None, help="write here instead of stdout")
    common.add_argument("--config", dest="config_path", default=None, help="JSON file of defaults")
    common.add_argument("-v", "--verbose", action="store_true", default=None)

    parser = _Parser(prog="sombor", description="greedy trees and the Sombor index")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command in COMMANDS:
        doc = (COMMAND_TABLE[command].__doc__ or "").strip().splitlines()
        subparsers.add_parser(command, parents=[common], help=doc[0] if doc else None)
    return parser


def build_config(args):
    """RunConfig from parsed flags, on top of --config when given.

    a bad degree sequence or config file is invalid input; a flag value
    outside its range is a usage error.
    """
    if args.config_path is not None:
        config = load_config(args.config_path, args.command)
    else:
        config = RunConfig(command=args.command)
    degree_sequence = parse_degrees(args.degrees) if args.degrees is not None else None
    try:
        return _apply_flags(config, args, degree_sequence)
    except ValueError as err:
        raise UsageError(str(err))


def _apply_flags(config, args, degree_sequence):
    return config.updated(
        degree_sequence=degree_sequence,
        input_path=args.input_path,
        output_format=args.output_format,
        budget=args.budget,
        tolerance=args.tolerance,
        seed=args.seed,
        max_n=args.max_n,
        trace=args.trace,
        workers=args.workers,
        strategy=args.strategy,
        step_limit=args.step_limit,
        index=args.index,
        output_path=args.output_path,
        verbose=args.verbose,
    )


def _emit(config, text):
    if config.output_path is None:
        sys.stdout.write(text)
        return
    with open(config.output_path, "w") as _f:
        _f.write(text)
    if config.verbose:
        print("wrote %s" % config.output_path, file=sys.stderr)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE

    try:
        config = build_config(args)
        text, code = COMMAND_TABLE[config.command](config)
        _emit(config, text)
    except UsageError as err:
        print("sombor %s: error: %s" % (args.command, err), file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as err:
        print("sombor %s: budget exceeded: %s" % (args.command, err), file=sys.stderr)
        return EXIT_BUDGET
    except (StepLimitError, EnumerationError) as err:
        print("sombor %s: %s" % (args.command, err), file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, OSError) as err:
        print("sombor %s: error: %s" % (args.command, err), file=sys.stderr)
        return EXIT_INVALID
    return code
