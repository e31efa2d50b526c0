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

"""Sweep suites that check the structural claims of the toolkit on whole
families of small instances.

Every suite returns a SuiteResult listing its violations, a suite never
raises because a claim failed.
"""

import itertools
import logging
import random
import time
from fractions import Fraction

import networkx

from pebbling_toolkit import errors
from pebbling_toolkit import async_tools
from pebbling_toolkit import aux_transform
from pebbling_toolkit import bounds
from pebbling_toolkit import decomposition
from pebbling_toolkit import exact_solver
from pebbling_toolkit import graph_core
from pebbling_toolkit import pebbling_engine
from pebbling_toolkit.pebbling_engine import PebbleDistribution
from pebbling_toolkit.decomposition import UnitDistribution


class VerifySettings(object):
    def __init__(self, max_n=6, max_pebbles=4, unit_sizes=(2, 3, 4),
                 random_graphs=0, random_max_n=8, random_max_degree=5,
                 seed=0, torus_min=5, torus_max=8, unit_max=16, path_max=10,
                 grid_max=8, step_limit=10000, jobs=1):
        self.max_n = max_n
        self.max_pebbles = max_pebbles
        self.unit_sizes = tuple(unit_sizes)
        self.random_graphs = random_graphs
        self.random_max_n = random_max_n
        self.random_max_degree = random_max_degree
        self.seed = seed
        self.torus_min = torus_min
        self.torus_max = torus_max
        self.unit_max = unit_max
        self.path_max = path_max
        self.grid_max = grid_max
        self.step_limit = step_limit
        self.jobs = jobs

    @staticmethod
    def from_config(config):
        return VerifySettings(
            max_n=config.verify_max_n,
            max_pebbles=config.verify_max_pebbles,
            unit_sizes=config.verify_unit_sizes,
            random_graphs=config.verify_random_graphs,
            random_max_n=config.verify_random_max_n,
            random_max_degree=config.verify_random_max_degree,
            seed=config.verify_seed,
            torus_min=config.verify_torus_min,
            torus_max=config.verify_torus_max,
            unit_max=config.verify_unit_max,
            path_max=config.verify_path_max,
            grid_max=config.verify_grid_max,
            step_limit=config.step_limit,
            jobs=config.jobs
        )


class SuiteResult(object):
    def __init__(self, name, instances=0, violations=None, elapsed=0.0):
        self.name = name
        self.instances = instances
        self.violations = violations if violations is not None else []
        self.elapsed = elapsed

    @property
    def passed(self):
        return not self.violations

    def __repr__(self):
        return "SuiteResult(%s, %i instances, %i violations)" % \
            (self.name, self.instances, len(self.violations))


def sweep_graphs(max_n, random_graphs=0, random_max_n=8,
                 random_max_degree=5, seed=0):
    """Connected graphs of the graph atlas with at most max_n vertices,
    followed by seeded random G(n, p) graphs.
    """

    for index, nx_graph in enumerate(networkx.graph_atlas_g()):
        n = nx_graph.number_of_nodes()
        if n < 1 or n > max_n:
            continue
        if not networkx.is_connected(nx_graph):
            continue
        yield graph_core.from_networkx(nx_graph, "atlas:%i" % (index))

    rng = random.Random(seed)
    produced = 0
    attempts = 0
    while produced < random_graphs and attempts < 1000 * (random_graphs + 1):
        attempts += 1
        n = rng.randint(2, random_max_n)
        nx_graph = networkx.gnp_random_graph(n, rng.uniform(0.2, 0.7),
                                             seed=rng.randint(0, 2 ** 31))
        if not networkx.is_connected(nx_graph):
            continue
        if max(d for _, d in nx_graph.degree()) > random_max_degree:
            continue
        produced += 1
        yield graph_core.from_networkx(nx_graph, "random:%i" % (produced))


def distributions_up_to(graph, vertices, max_pebbles):
    for total in range(max_pebbles + 1):
        for combo in itertools.combinations_with_replacement(vertices, total):
            counts = [0] * graph.n
            for v in combo:
                counts[v] += 1
            yield PebbleDistribution(graph, counts)


def disjoint_pairs(graph, max_pebbles, unit_sizes):
    """Every (P, U) with U a unit of one of the given sizes on u, P(u) = 0
    and |P| <= max_pebbles.
    """

    for u in range(graph.n):
        others = [v for v in range(graph.n) if v != u]
        for size in unit_sizes:
            unit = UnitDistribution(graph, u, size)
            for p in distributions_up_to(graph, others, max_pebbles):
                yield p, unit


class GraphCheckAction(async_tools.AsyncAction):
    def __init__(self, graph, check, settings):
        super(GraphCheckAction, self).__init__()
        self.graph = graph
        self.check = check
        self.settings = settings

    def run(self):
        return self.check(self.graph, self.settings)

    def __str__(self):
        return "%s on '%s'" % (self.check.__name__, self.graph.label)


def _per_graph(name, graphs, check, settings):
    start = time.time()
    actions = [GraphCheckAction(graph, check, settings) for graph in graphs]
    ret = SuiteResult(name)
    for instances, violations in async_tools.run_actions(actions,
                                                         settings.jobs):
        ret.instances += instances
        ret.violations.extend(violations)
    ret.elapsed = time.time() - start
    logging.info("Suite '%s' checked %i instances, %i violations.", name,
                 ret.instances, len(ret.violations))
    return ret


def _sweep(settings):
    return list(sweep_graphs(settings.max_n, settings.random_graphs,
                             settings.random_max_n,
                             settings.random_max_degree, settings.seed))


def _where(graph, p, u=None):
    if u is None:
        return "%s P=%r" % (graph.label, p)
    return "%s P=%r U=%r" % (graph.label, p, u)


def check_units(graph, settings):
    sizes = range(1, settings.unit_max + 1)
    vertices = [0] if graph.family is not None and \
        graph.family[0] in ("cycle", "torus") else range(graph.n)
    instances = 0
    violations = []
    for u in vertices:
        for size in sizes:
            instances += 1
            unit = UnitDistribution(graph, u, size)
            report = pebbling_engine.analyze(unit)
            expected = pebbling_engine.unit_formula(graph, u, size)
            if (report.cov, report.total_excess) != expected:
                violations.append(
                    "%s: (cov, TE) = %s, closed form %s" %
                    (_where(graph, unit), (report.cov, report.total_excess),
                     expected))
            for v in range(graph.n):
                if report.reach[v] != size >> graph.dist[u][v]:
                    violations.append("%s: reach at %i is %i, expected %i" %
                                      (_where(graph, unit), v,
                                       report.reach[v],
                                       size >> graph.dist[u][v]))
    return instances, violations


def unit_graphs(settings):
    """Paths and cycles up to path_max, every m x n grid with
    2 <= m <= n <= grid_max and every m x n torus with
    3 <= m <= n <= torus_max.
    """

    graphs = []
    for n in range(1, settings.path_max + 1):
        graphs.append(graph_core.make_path(n))
        if n >= 3:
            graphs.append(graph_core.make_cycle(n))
    for m in range(2, settings.grid_max + 1):
        graphs.extend(graph_core.make_grid(m, n)
                      for n in range(m, settings.grid_max + 1))
    for m in range(3, settings.torus_max + 1):
        graphs.extend(graph_core.make_torus(m, n)
                      for n in range(m, settings.torus_max + 1))
    return graphs


def suite_unit(settings):
    return _per_graph("unit", unit_graphs(settings), check_units, settings)


def check_oracle(graph, settings):
    instances = 0
    violations = []
    for p in distributions_up_to(graph, range(graph.n),
                                 settings.max_pebbles):
        report = pebbling_engine.analyze(p)
        for v in range(graph.n):
            instances += 1
            expected = pebbling_engine.naive_reach(p, v)
            if report.reach[v] != expected:
                violations.append("%s: reach at %i is %i, enumeration "
                                  "gives %i" % (_where(graph, p), v,
                                                report.reach[v], expected))
                continue
            if expected == 0:
                continue
            moves = pebbling_engine.naive_best_sequence(p, v)
            trajectory = pebbling_engine.trajectory(graph, moves)
            if pebbling_engine.has_cycle(trajectory):
                violations.append("%s: shortest optimal sequence to %i has a "
                                  "cyclic trajectory %s" %
                                  (_where(graph, p), v, trajectory.arcs()))
    return instances, violations


def suite_oracle(settings):
    return _per_graph("oracle", _sweep(settings), check_oracle, settings)


def check_cooperation(graph, settings):
    cache = pebbling_engine.ReachabilityCache()
    instances = 0
    violations = []
    brute_force = graph.n <= 5
    for p, u in disjoint_pairs(graph, settings.max_pebbles,
                               settings.unit_sizes):
        instances += 1
        report = decomposition.cooperation(p, u, cache)
        blocks = decomposition.find_c_blocks(p, u, report)
        for message in decomposition.cooperation_claims(report, blocks):
            violations.append("%s: %s" % (_where(graph, p, u), message))

        if not brute_force:
            continue
        for block in blocks:
            for a, b in itertools.combinations(sorted(block), 2):
                if not decomposition.coopexcess_connected(p, u, a, b,
                                                          report):
                    violations.append("%s: C-block %s has no coopexcess path "
                                      "between %i and %i" %
                                      (_where(graph, p, u), sorted(block),
                                       a, b))
    return instances, violations


def suite_cooperation(settings):
    return _per_graph("cooperation", _sweep(settings), check_cooperation,
                      settings)


def check_coop_dc(graph, settings):
    cache = pebbling_engine.ReachabilityCache()
    instances = 0
    violations = []
    delta = graph.max_degree
    for p, u in disjoint_pairs(graph, settings.max_pebbles,
                               settings.unit_sizes):
        instances += 1
        report = decomposition.cooperation(p, u, cache, with_m_values=False)
        if delta <= 2:
            if not aux_transform.low_degree_check(graph, p, u,
                                                  report=report).holds:
                violations.append("%s: closed form fails for delta %i "
                                  "(coop=%i, DC=%i, CE=%i)" %
                                  (_where(graph, p, u), delta, report.coop,
                                   report.dc, report.ce))
        elif report.coop - report.dc > (delta - 2) * report.ce:
            violations.append("%s: coop - DC = %i > (delta - 2) CE = %i" %
                              (_where(graph, p, u), report.coop - report.dc,
                               (delta - 2) * report.ce))
    return instances, violations


def suite_coop_dc(settings):
    return _per_graph("coop-dc", _sweep(settings), check_coop_dc,
                      settings)


def _combined(graph, settings):
    seen = set()
    for p, u in disjoint_pairs(graph, settings.max_pebbles,
                               settings.unit_sizes):
        combined = p + u
        if combined not in seen:
            seen.add(combined)
            yield combined


def check_excess_inequality(graph, settings):
    cache = pebbling_engine.ReachabilityCache()
    instances = 0
    violations = []
    for p in _combined(graph, settings):
        if not cache.analyze(p).solvable:
            continue
        instances += 1
        check = bounds.excess_inequality_check(graph, p, cache)
        if not check.holds:
            violations.append("%s: sum ef(v) P(v) = %s < |V| + TE = %s" %
                              (_where(graph, p), check.lhs, check.rhs))
    return instances, violations


def suite_excess_inequality(settings):
    return _per_graph("excess-inequality", _sweep(settings),
                      check_excess_inequality, settings)


def check_identities(graph, settings):
    cache = pebbling_engine.ReachabilityCache()
    instances = 0
    violations = []
    for p in _combined(graph, settings):
        instances += 1
        identities = decomposition.decomposition_identities(p, cache)
        if not identities.ok:
            violations.append("%s: %r" % (_where(graph, p), identities))

        if graph.max_degree >= 3 and cache.analyze(p).solvable:
            lhs, rhs = decomposition.cooperation_bound_check(p, cache)
            if lhs < rhs:
                violations.append("%s: sum CE = %s below %s" %
                                  (_where(graph, p), lhs, rhs))
    return instances, violations


def suite_identities(settings):
    return _per_graph("identities", _sweep(settings), check_identities,
                      settings)


def check_transform(graph, settings):
    cache = pebbling_engine.ReachabilityCache()
    instances = 0
    violations = []
    for p, u in disjoint_pairs(graph, settings.max_pebbles,
                               settings.unit_sizes):
        instances += 1
        if graph.max_degree <= 2:
            if not aux_transform.low_degree_check(graph, p, u, cache).holds:
                violations.append("%s: closed form fails" %
                                  (_where(graph, p, u)))
            continue

        try:
            run = aux_transform.run_instance(graph, p, u, settings.step_limit,
                                             cache)
        except errors.PebblingError as e:
            violations.append("%s: %s" % (_where(graph, p, u), e))
            continue

        for where, result in run.property_failures():
            violations.append("%s: %s fails property %s at %s" %
                              (_where(graph, p, u), where, result.prop,
                               result.witness))
        if not run.degree_ok:
            violations.append("%s: degree grew to %i above delta %i" %
                              (_where(graph, p, u), run.max_degree,
                               run.a0.delta))
        elif not run.ok:
            violations.append("%s: fixpoint audit fails, sums %s -> %s, %s" %
                              (_where(graph, p, u), run.a0.sums(),
                               run.final.sums(), run.audits))
    return instances, violations


def suite_transform(settings):
    return _per_graph("transform", _sweep(settings), check_transform,
                      settings)


def check_torus(graph, settings):
    instances = 1
    violations = []
    layers = graph_core.layer_sizes(graph, 0)
    if len(layers) < 2 or layers[1] != 4:
        violations.append("%s: first layer has %s vertices" %
                          (graph.label, layers[1:2]))
    for i, size in enumerate(layers[1:], 1):
        if size > 4 * i:
            violations.append("%s: layer %i has %i > %i vertices" %
                              (graph.label, i, size, 4 * i))
    ef = bounds.effect(graph, 0)
    if not ef < 9:
        violations.append("%s: ef = %s is not below 9" % (graph.label, ef))

    for size in range(1, settings.unit_max + 1):
        instances += 1
        unit = UnitDistribution(graph, 0, size)
        report = pebbling_engine.analyze(unit)
        estimate = bounds.torus_unit_estimates(graph, unit)
        if report.cov > estimate.cov_cap:
            violations.append("%s: cov %i above cap %s" %
                              (_where(graph, unit), report.cov,
                               estimate.cov_cap))
        if report.total_excess < estimate.exc_floor:
            violations.append("%s: TE %i below floor %s" %
                              (_where(graph, unit), report.total_excess,
                               estimate.exc_floor))
    return instances, violations


def suite_torus(settings):
    graphs = [graph_core.make_torus(m, n)
              for m in range(settings.torus_min, settings.torus_max + 1)
              for n in range(m, settings.torus_max + 1)]
    return _per_graph("torus", graphs, check_torus, settings)


def check_path_or_cycle(graph, settings):
    instances = 1
    violations = []
    result = exact_solver.solve(graph, exact_solver.SolveOptions())
    expected = bounds.path_cycle_bound(graph.n)
    if result.pi_opt != expected:
        violations.append("%s: optimal pebbling number %i, expected %i" %
                          (graph.label, result.pi_opt, expected))
    for size in range(1, 17):
        instances += 1
        ratio = bounds.path_cycle_cover_ratio(graph, size)
        if ratio > Fraction(3, 2):
            violations.append("%s: units of size %i cover %s times their "
                              "size" % (graph.label, size, ratio))
    return instances, violations


def suite_paths(settings):
    graphs = [graph_core.make_path(n)
              for n in range(1, settings.path_max + 1)]
    graphs.extend(graph_core.make_cycle(n)
                  for n in range(3, settings.path_max + 1))
    return _per_graph("paths", graphs, check_path_or_cycle, settings)


def check_bounds(graph, settings):
    violations = []
    result = exact_solver.solve(graph, exact_solver.SolveOptions())
    report = bounds.bound_report(graph, result.witness)
    if report.best_lower() > result.pi_opt:
        violations.append("%s: lower bound %i exceeds the optimum %i" %
                          (graph.label, report.best_lower(), result.pi_opt))
    if not exact_solver.minimality_check(graph, result.witness):
        violations.append("%s: witness %r is not minimal" %
                          (graph.label, result.witness))
    return 1, violations


def suite_bounds(settings):
    graphs = [graph_core.make_path(n) for n in range(2, 7)]
    graphs.extend(graph_core.make_cycle(n) for n in range(3, 8))
    graphs.extend([graph_core.make_grid(2, 2), graph_core.make_grid(2, 3),
                   graph_core.make_grid(3, 3), graph_core.make_torus(3, 3),
                   graph_core.make_torus(3, 4)])
    return _per_graph("bounds", graphs, check_bounds, settings)


SUITES = (
    ("unit", suite_unit),
    ("oracle", suite_oracle),
    ("cooperation", suite_cooperation),
    ("coop-dc", suite_coop_dc),
    ("excess-inequality", suite_excess_inequality),
    ("identities", suite_identities),
    ("transform", suite_transform),
    ("torus", suite_torus),
    ("paths", suite_paths),
    ("bounds", suite_bounds),
)


# older names still accepted on the command line
SUITE_ALIASES = {
    "lemma41": "coop-dc",
}


def suite_names():
    return [name for name, _ in SUITES]


def suite_choices():
    return suite_names() + sorted(SUITE_ALIASES)


def run_suites(names, settings):
    known = dict(SUITES)
    ret = []
    for name in names:
        name = SUITE_ALIASES.get(name, name)
        if name not in known:
            raise errors.ParseError(
                "Unknown suite '%s', known suites: %s." %
                (name, ", ".join(suite_names()))
            )
        logging.info("Running suite '%s'.", name)
        ret.append(known[name](settings))
    return ret
