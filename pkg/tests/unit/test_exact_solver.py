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

from pebbling_toolkit import bounds
from pebbling_toolkit import config
from pebbling_toolkit import errors
from pebbling_toolkit import exact_solver
from pebbling_toolkit import graph_core
from pebbling_toolkit.exact_solver import SolveOptions
from pebbling_toolkit.pebbling_engine import PebbleDistribution


def expect(error_class, callback, *args):
    try:
        callback(*args)
    except error_class as e:
        return e
    assert(False)


def test_small_graphs():
    result = exact_solver.solve(graph_core.make_path(3))
    assert(result.pi_opt == 2)
    assert(result.witness.as_dict() == {1: 2})
    assert(result.lower_bound_used == 2)

    assert(exact_solver.solve(graph_core.make_path(1)).pi_opt == 1)
    assert(exact_solver.solve(graph_core.make_path(2)).pi_opt == 2)
    assert(exact_solver.solve(graph_core.make_cycle(4)).pi_opt == 3)
    assert(exact_solver.solve(graph_core.make_cycle(6)).pi_opt == 4)
    assert(exact_solver.solve(graph_core.parse_graph_spec("path:6")).pi_opt ==
           4)


def test_paths_and_cycles_match_closed_form():
    for n in range(1, 11):
        path = graph_core.make_path(n)
        assert(exact_solver.solve(path).pi_opt == bounds.path_cycle_bound(n))
    for n in range(3, 11):
        cycle = graph_core.make_cycle(n)
        assert(exact_solver.solve(cycle).pi_opt == bounds.path_cycle_bound(n))


def test_symmetry_and_jobs_agree():
    cycle = graph_core.make_cycle(6)
    reduced = exact_solver.solve(cycle, SolveOptions(symmetry="auto"))
    plain = exact_solver.solve(cycle, SolveOptions(symmetry="none"))
    threaded = exact_solver.solve(cycle, SolveOptions(jobs=3, chunk_size=4))
    assert(reduced.pi_opt == plain.pi_opt == threaded.pi_opt == 4)
    assert(plain.stats["orbits_skipped"] == 0)
    assert(reduced.stats["distributions_tested"] <=
           plain.stats["distributions_tested"])
    for result in (reduced, plain, threaded):
        assert(exact_solver.is_solvable(cycle, result.witness))
        assert(exact_solver.minimality_check(cycle, result.witness))


def test_witness_is_minimal():
    path = graph_core.make_path(3)
    assert(exact_solver.minimality_check(
        path, PebbleDistribution.from_mapping(path, {1: 2})))
    assert(not exact_solver.minimality_check(
        path, PebbleDistribution.from_mapping(path, {1: 3})))


def test_is_solvable():
    path = graph_core.make_path(3)
    stats = {}
    assert(exact_solver.is_solvable(
        path, PebbleDistribution.from_mapping(path, {1: 2}), stats=stats))
    assert(stats["states_expanded"] >= 1)
    assert(not exact_solver.is_solvable(
        path, PebbleDistribution.from_mapping(path, {0: 2})))
    assert(not exact_solver.is_solvable(
        path, PebbleDistribution.from_mapping(path, {0: 1, 2: 1})))


def test_enumeration():
    path = graph_core.make_path(3)
    group = graph_core.automorphisms(path)
    assert(exact_solver.canonical((2, 0, 0), group))
    assert(not exact_solver.canonical((0, 0, 2), group))
    assert(exact_solver.canonical((0, 0, 2), None))

    everything = list(exact_solver.enumerate_distributions(3, 2))
    assert(len(everything) == 6)
    assert(everything[0] == (2, 0, 0))

    skipped = [0]
    reduced = list(exact_solver.enumerate_distributions(3, 2, group,
                                                        skipped))
    assert(reduced == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0)])
    assert(skipped == [2])


def test_budgets():
    cycle = graph_core.make_cycle(6)
    e = expect(errors.BudgetExceeded, exact_solver.solve, cycle,
               SolveOptions(max_pebbles=2))
    assert((e.lower, e.upper) == (3, 6))

    e = expect(errors.BudgetExceeded, exact_solver.solve, cycle,
               SolveOptions(max_vertices=3))
    assert((e.lower, e.upper) == (3, 6))

    e = expect(errors.BudgetExceeded, exact_solver.solve,
               graph_core.make_path(6), SolveOptions(node_budget=1))
    assert(3 <= e.lower <= 4)
    assert(e.upper == 6)
    assert("states_expanded" in e.stats)


def test_disconnected():
    expect(errors.DisconnectedGraph, exact_solver.solve,
           graph_core.Graph(3, [(0, 1)]))


def test_options_from_config():
    configuration = config.Configuration()
    configuration.symmetry = "none"
    configuration.node_budget = 77
    configuration.jobs = 2
    options = SolveOptions.from_config(configuration)
    assert(options.symmetry == "none")
    assert(options.node_budget == 77)
    assert(options.jobs == 2)
    assert(options.max_pebbles == configuration.max_pebbles)


if __name__ == "__main__":
    test_small_graphs()
    test_paths_and_cycles_match_closed_form()
    test_symmetry_and_jobs_agree()
    test_witness_is_minimal()
    test_is_solvable()
    test_enumeration()
    test_budgets()
    test_disconnected()
    test_options_from_config()
