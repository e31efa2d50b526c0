# Copyright 2026 The pebbling-toolkit authors.
# All Rights Reserved.
#
# pebbling-toolkit is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 2.1 of the License, or
# (at your option) any later version.
#
# pebbling-toolkit is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.

# You should have received a copy of the GNU Lesser General Public License
# along with pebbling-toolkit.  If not, see <http://www.gnu.org/licenses/>.

import argparse
import logging
import os.path
import sys

from pebbling_toolkit import aux_transform
from pebbling_toolkit import bounds
from pebbling_toolkit import cli_helpers
from pebbling_toolkit import config
from pebbling_toolkit import decomposition
from pebbling_toolkit import errors
from pebbling_toolkit import exact_solver
from pebbling_toolkit import graph_core
from pebbling_toolkit import pebbling_engine
from pebbling_toolkit import verification
from pebbling_toolkit import version


EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_ERROR = 4

# shown per suite, the rest is summarized
MAX_VIOLATIONS_SHOWN = 20


def _yes_no(flag):
    return "yes" if flag else "no"


def _load_graph(args):
    ret = graph_core.parse_graph_spec(args.graph)
    logging.info("Using graph '%s' with %i vertices, max degree %i.",
                 ret.label, ret.n, ret.max_degree)
    return ret


def cli_reach(args, configuration, out):
    graph = _load_graph(args)
    p = pebbling_engine.load_distribution_file(graph, args.dist)

    if args.target is not None:
        value = pebbling_engine.reach(p, args.target,
                                      configuration.node_budget)
        cli_helpers.print_key_values([("reach", value)], args.porcelain, out)
        return EXIT_OK

    report = pebbling_engine.analyze(p, configuration.jobs,
                                     configuration.node_budget)
    if args.porcelain:
        cli_helpers.print_key_values([
            ("reach", report.reach),
            ("excess", report.excess),
            ("TE", report.total_excess),
            ("cov", report.cov),
            ("solvable", _yes_no(report.solvable)),
        ], True, out)
        return EXIT_OK

    table = [["vertex", "pebbles", "reach", "excess"]]
    for v in range(graph.n):
        table.append([v, p[v], report.reach[v], report.excess[v]])
    cli_helpers.print_table(table, stream=out)
    out.write("\n")
    cli_helpers.print_key_values([
        ("TE", report.total_excess),
        ("cov", report.cov),
        ("solvable", _yes_no(report.solvable)),
    ], False, out)
    return EXIT_OK


def _load_pair(args):
    graph = _load_graph(args)
    p = pebbling_engine.load_distribution_file(graph, args.dist_p)
    vertex, count = cli_helpers.parse_unit_spec(args.unit)
    return graph, p, decomposition.UnitDistribution(graph, vertex, count)


def cli_coop(args, configuration, out):
    graph, p, u = _load_pair(args)
    cache = pebbling_engine.ReachabilityCache(
        node_budget=configuration.node_budget
    )
    report = decomposition.cooperation(p, u, cache,
                                       node_budget=configuration.node_budget)
    c_blocks = decomposition.find_c_blocks(p, u, report) \
        if u.size >= 2 else []

    pairs = [
        ("coop", report.coop),
        ("dc", report.dc),
        ("ce", report.ce),
        ("coop_vertices", report.coop_vertices),
        ("dc_vertices", report.dc_vertices),
    ]
    if args.porcelain:
        pairs.extend([
            ("per_vertex_ce", report.per_vertex_ce),
            ("m_values", report.m_values),
            ("c_blocks", ";".join(cli_helpers.format_value(block)
                                  for block in c_blocks)),
        ])
        cli_helpers.print_key_values(pairs, True, out)
        return EXIT_OK

    cli_helpers.print_key_values(pairs, False, out)
    out.write("\n")
    table = [["vertex", "P", "U", "class", "CE", "M"]]
    for v in range(graph.n):
        table.append([v, p[v], u[v], decomposition.classify(report, v),
                      report.per_vertex_ce[v], report.m_values[v]])
    cli_helpers.print_table(table, stream=out)
    for block in c_blocks:
        out.write("C-block: %s\n" % (cli_helpers.format_value(block)))
    return EXIT_OK


def cli_aux(args, configuration, out):
    graph, p, u = _load_pair(args)
    cache = pebbling_engine.ReachabilityCache(
        node_budget=configuration.node_budget
    )

    if graph.max_degree <= 2:
        check = aux_transform.low_degree_check(graph, p, u, cache)
        cli_helpers.print_key_values([
            ("delta", graph.max_degree),
            ("coop", check.report.coop),
            ("dc", check.report.dc),
            ("ce", check.report.ce),
            ("closed_form_holds", _yes_no(check.holds)),
        ], args.porcelain, out)
        return EXIT_OK if check.holds else EXIT_VERIFY_FAILED

    run = aux_transform.run_instance(graph, p, u, configuration.step_limit,
                                     cache)

    if args.trace:
        try:
            with open(args.trace, "w") as f:
                for record in run.final.trace:
                    f.write(record.to_line() + "\n")
        except (IOError, OSError) as e:
            raise errors.WriteFailure(
                "Failed to write trace to '%s': %s" % (args.trace, e)
            )

    cli_helpers.print_key_values([
        ("delta", run.a0.delta),
        ("initial_sums", run.a0.sums()),
        ("final_sums", run.final.sums()),
        ("steps", run.steps),
        ("properties", ",".join(
            "%s:%s" % (r.prop, "ok" if r.passed else "fail")
            for r in run.properties.results)),
        ("step_properties", _yes_no(all(
            check.properties.passed for check in run.step_checks))),
        ("max_degree", run.max_degree),
        ("global_inequality", _yes_no(run.final.global_inequality())),
        ("audit_ok", _yes_no(run.ok)),
    ], args.porcelain, out)

    if run.audits and not args.porcelain:
        out.write("\n")
        table = [["block", "sum c1", "sum c2", "sum c3", "inner", "boundary",
                  "inequality", "counting"]]
        for audit in run.audits:
            table.append([cli_helpers.format_value(audit.block), audit.s1,
                          audit.s2, audit.s3, audit.inner, audit.boundary,
                          _yes_no(audit.inequality_holds),
                          _yes_no(audit.counting_holds)])
        cli_helpers.print_table(table, stream=out)

    return EXIT_OK if run.ok else EXIT_VERIFY_FAILED


def cli_bound(args, configuration, out):
    graph = _load_graph(args)
    p = None
    if args.dist:
        p = pebbling_engine.load_distribution_file(graph, args.dist)

    report = bounds.bound_report(graph, p)
    if args.porcelain:
        pairs = [(name.replace(" (", "_").replace(")", "").replace("/", "_"),
                  value.split(" ")[0]) for name, value in report.rows()]
        pairs.append(("best_lower", report.best_lower()))
        cli_helpers.print_key_values(pairs, True, out)
        return EXIT_OK

    table = [["bound", "value"]]
    table.extend([name, value] for name, value in report.rows())
    table.append(["best lower", report.best_lower()])
    cli_helpers.print_table(table, stream=out)
    for note in report.notes:
        out.write("note: %s\n" % (note))
    return EXIT_OK


def cli_emit_ilp(args, configuration, out):
    graph = _load_graph(args)
    if args.out == "-":
        bounds.emit_ilp(graph, out, args.relax, args.format)
        return EXIT_OK

    path = args.out
    if not os.path.isabs(path):
        configuration.prepare_dirs()
        path = os.path.join(configuration.output_dir, path)
    summary = bounds.emit_ilp(graph, path, args.relax, args.format)
    cli_helpers.print_key_values([
        ("path", path),
        ("format", summary.fmt),
        ("variables", summary.variables),
        ("constraints", summary.constraints),
        ("integer", _yes_no(summary.integer)),
    ], args.porcelain, out)
    return EXIT_OK


def cli_solve(args, configuration, out):
    graph = _load_graph(args)
    options = exact_solver.SolveOptions.from_config(configuration)
    if args.symmetry is not None:
        options.symmetry = args.symmetry
    if args.budget_nodes is not None:
        options.node_budget = args.budget_nodes
    if args.budget_seconds is not None:
        options.time_budget = args.budget_seconds

    result = exact_solver.solve(graph, options)
    cli_helpers.print_key_values([
        ("pi_opt", result.pi_opt),
        ("lower_bound_used", result.lower_bound_used),
    ], args.porcelain, out)

    if args.porcelain:
        cli_helpers.print_key_values([
            ("witness", ",".join("%i:%i" % item for item in
                                 sorted(result.witness.as_dict().items())))
        ], True, out)
    else:
        out.write("\nwitness:\n")
        out.write(pebbling_engine.dump_distribution_text(result.witness))
        out.write("\nstats:\n")
        cli_helpers.print_key_values(
            [(key, "%.3f" % value if key == "elapsed" else value)
             for key, value in sorted(result.stats.items())], False, out
        )
    return EXIT_OK


def cli_verify(args, configuration, out):
    if args.list:
        for name in verification.suite_names():
            out.write(name + "\n")
        return EXIT_OK

    settings = verification.VerifySettings.from_config(configuration)
    if args.max_n is not None:
        settings.max_n = args.max_n
    if args.max_pebbles is not None:
        settings.max_pebbles = args.max_pebbles

    names = args.suite or []
    if args.all or not names:
        names = verification.suite_names()

    results = verification.run_suites(names, settings)

    if args.porcelain:
        for result in results:
            cli_helpers.print_key_values([
                ("suite", result.name),
                ("instances", result.instances),
                ("violations", len(result.violations)),
                ("passed", _yes_no(result.passed)),
            ], True, out)
    else:
        table = [["suite", "instances", "violations", "seconds"]]
        for result in results:
            table.append([result.name, result.instances,
                          len(result.violations), "%.2f" % result.elapsed])
        cli_helpers.print_table(table, stream=out)

    for result in results:
        for violation in result.violations[:MAX_VIOLATIONS_SHOWN]:
            out.write("violation [%s]: %s\n" % (result.name, violation))
        hidden = len(result.violations) - MAX_VIOLATIONS_SHOWN
        if hidden > 0:
            out.write("violation [%s]: ... %i more\n" % (result.name, hidden))

    if all(result.passed for result in results):
        return EXIT_OK
    return EXIT_VERIFY_FAILED


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", type=str, default=argparse.SUPPRESS,
        help="INI configuration file, PEBBLING_CONFIG_FILE is used when "
        "not given")
    common.add_argument(
        "--verbose", action="store_true", default=argparse.SUPPRESS,
        help="Log debug messages to stderr")
    common.add_argument(
        "--porcelain", action="store_true", default=argparse.SUPPRESS,
        help="Print stable key=value lines instead of tables")
    common.add_argument(
        "--jobs", type=int, default=argparse.SUPPRESS,
        help="Number of worker threads")

    parser = argparse.ArgumentParser(
        prog="pebbling-toolkit", parents=[common],
        description="Exact reachability, cooperation statistics and lower "
        "bounds for optimal graph pebbling.")
    parser.add_argument(
        "--version", action="version",
        version="%(prog)s " + version.VERSION_STRING)

    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    def add_graph(subparser):
        subparser.add_argument(
            "--graph", type=str, required=True,
            help="path:n, cycle:n, grid:m,n, torus:m,n or a graph file")

    reach_parser = subparsers.add_parser(
        "reach", parents=[common],
        help="Print reach and excess of a distribution")
    add_graph(reach_parser)
    reach_parser.add_argument("--dist", type=str, required=True,
                              help="Distribution file, 'vertex count' lines")
    reach_group = reach_parser.add_mutually_exclusive_group()
    reach_group.add_argument("--target", type=int,
                             help="Only compute reach at this vertex")
    reach_group.add_argument("--all", action="store_true", default=False,
                             help="Report every vertex (default)")
    reach_parser.set_defaults(func=cli_reach)

    coop_parser = subparsers.add_parser(
        "coop", parents=[common],
        help="Cooperation statistics of a distribution and a unit")
    add_graph(coop_parser)
    coop_parser.add_argument("--dist-p", type=str, required=True,
                             help="Distribution file of P")
    coop_parser.add_argument("--unit", type=str, required=True,
                             help="Unit as vertex:count")
    coop_parser.set_defaults(func=cli_coop)

    aux_parser = subparsers.add_parser(
        "aux", parents=[common],
        help="Run the auxiliary graph transformations and audit A-blocks")
    add_graph(aux_parser)
    aux_parser.add_argument("--dist-p", type=str, required=True,
                            help="Distribution file of P")
    aux_parser.add_argument("--unit", type=str, required=True,
                            help="Unit as vertex:count")
    aux_parser.add_argument("--trace", type=str,
                            help="Write the step trace to this file")
    aux_parser.set_defaults(func=cli_aux)

    bound_parser = subparsers.add_parser(
        "bound", parents=[common],
        help="Print every applicable lower bound")
    add_graph(bound_parser)
    bound_parser.add_argument("--dist", type=str,
                              help="Distribution for the excess and "
                              "structural bounds")
    bound_parser.set_defaults(func=cli_bound)

    emit_parser = subparsers.add_parser(
        "emit-ilp", parents=[common],
        help="Write the optimal pebbling integer program")
    add_graph(emit_parser)
    emit_parser.add_argument("--out", type=str, required=True,
                             help="Output path, '-' for stdout")
    emit_parser.add_argument("--relax", action="store_true", default=False,
                             help="Emit the LP relaxation")
    emit_parser.add_argument("--format", choices=("lp", "mps"), default="lp",
                             help="Model file format (default is lp)")
    emit_parser.set_defaults(func=cli_emit_ilp)

    solve_parser = subparsers.add_parser(
        "solve", parents=[common],
        help="Compute the optimal pebbling number exactly")
    add_graph(solve_parser)
    solve_parser.add_argument("--symmetry", choices=config.SYMMETRY_MODES,
                              help="Orbit reduction by automorphisms")
    solve_parser.add_argument("--budget-nodes", type=int,
                              help="Cap on expanded search states")
    solve_parser.add_argument("--budget-seconds", type=float,
                              help="Cap on wall-clock seconds")
    solve_parser.set_defaults(func=cli_solve)

    verify_parser = subparsers.add_parser(
        "verify", parents=[common],
        help="Run the verification sweeps")
    verify_parser.add_argument("--suite", action="append",
                               choices=verification.suite_choices(),
                               help="Suite to run, may be repeated")
    verify_parser.add_argument("--all", action="store_true", default=False,
                               help="Run every suite")
    verify_parser.add_argument("--list", action="store_true", default=False,
                               help="List the suite names")
    verify_parser.add_argument("--max-n", type=int,
                               help="Largest graph in the atlas sweep")
    verify_parser.add_argument("--max-pebbles", type=int,
                               help="Largest |P| in the sweeps")
    verify_parser.set_defaults(func=cli_verify)

    return parser


def _setup_logging(verbose, stream):
    root = logging.getLogger()
    if not root.handlers:
        handler = logging.StreamHandler(stream)
        handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else argv

    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    args.verbose = getattr(args, "verbose", False)
    args.porcelain = getattr(args, "porcelain", False)
    _setup_logging(args.verbose, err)

    try:
        configuration = config.load_configuration(
            getattr(args, "config", None)
        )
        jobs = getattr(args, "jobs", None)
        if jobs is not None:
            configuration.jobs = jobs
        configuration.sanity_check()

        return args.func(args, configuration, out)

    except errors.BudgetExceeded as e:
        err.write("error: %s (certified interval: lower=%s upper=%s)\n" %
                  (e, cli_helpers.format_value(e.lower),
                   cli_helpers.format_value(e.upper)))
        return EXIT_BUDGET

    except (errors.ParseError, errors.InvalidSize, errors.InvalidGraph,
            errors.VertexOutOfRange, config.ConfigurationError) as e:
        err.write("error: %s\n" % (e))
        return EXIT_USAGE

    except errors.PebblingError as e:
        err.write("error: %s\n" % (e))
        return EXIT_ERROR


def main():
    sys.exit(run())
