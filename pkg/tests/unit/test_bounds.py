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

import io
import os.path
import shutil
import tempfile
from fractions import Fraction

from pebbling_toolkit import bounds
from pebbling_toolkit import errors
from pebbling_toolkit import graph_core
from pebbling_toolkit.decomposition import UnitDistribution
from pebbling_toolkit.pebbling_engine import PebbleDistribution


def expect(error_class, callback, *args):
    try:
        callback(*args)
    except error_class as e:
        return e
    assert(False)


def dist(graph, mapping):
    return PebbleDistribution.from_mapping(graph, mapping)


def test_effect():
    cycle = graph_core.make_cycle(6)
    assert(bounds.effect(cycle, 0) == Fraction(21, 8))
    assert(bounds.effect(graph_core.make_torus(5, 5), 7) == Fraction(25, 4))

    path = graph_core.make_path(3)
    assert(bounds.effect(path, 1) == 2)
    assert(bounds.effect(path, 0) == Fraction(7, 4))
    assert(bounds.max_effect(path) == 2)

    expect(errors.DisconnectedGraph, bounds.effect,
           graph_core.Graph(2, []), 0)


def test_simple_bounds():
    assert(bounds.ceil_fraction(Fraction(7, 2)) == 4)
    assert(bounds.ceil_fraction(3) == 3)

    assert(bounds.fractional_bound(graph_core.make_cycle(6)) ==
           Fraction(16, 7))
    assert(bounds.weight_bound(graph_core.make_path(3)) == 2)
    assert(bounds.weight_bound(graph_core.make_path(4)) == 2)

    assert(bounds.grid_bound(13, 13) == 26)
    assert(bounds.grid_bound(5, 5) == 4)
    assert(bounds.grid_bound(5, 6) == 5)
    expect(errors.GraphTooSmall, bounds.grid_bound, 4, 5)

    assert(bounds.path_cycle_bound(3) == 2)
    assert(bounds.path_cycle_bound(4) == 3)
    assert(bounds.path_cycle_bound(10) == 7)
    expect(errors.InvalidSize, bounds.path_cycle_bound, 0)


def test_excess_bounds():
    cycle = graph_core.make_cycle(6)
    p = dist(cycle, {0: 2, 3: 2})
    check = bounds.excess_inequality_check(cycle, p)
    assert(check.lhs == Fraction(21, 2))
    assert(check.rhs == 8)
    assert(check.holds and check.slack == Fraction(5, 2))
    assert(bounds.excess_bound(cycle, p) == Fraction(64, 21))

    path = graph_core.make_path(5)
    tight = bounds.excess_inequality_check(path, dist(path, {2: 4}))
    assert((tight.lhs, tight.rhs) == (10, 10))

    expect(errors.NotSolvable, bounds.excess_inequality_check, cycle,
           dist(cycle, {0: 1}))
    expect(errors.DeltaTooSmall, bounds.structural_bound, cycle, p)

    torus = graph_core.make_torus(5, 5)
    expect(errors.NotSolvable, bounds.structural_bound, torus,
           dist(torus, {0: 2}))


def test_torus_estimates():
    assert(bounds.unit_estimates(1).cov_cap == 1)
    assert(bounds.unit_estimates(1).exc_floor == 0)
    estimate = bounds.unit_estimates(2)
    assert((estimate.cov_cap, estimate.exc_floor) == (5, 1))
    estimate = bounds.unit_estimates(4)
    assert((estimate.cov_cap, estimate.exc_floor) == (13, Fraction(32, 5)))
    expect(errors.InvalidSize, bounds.unit_estimates, 0)

    torus = graph_core.make_torus(5, 6)
    assert(bounds.torus_unit_estimates(
        torus, UnitDistribution(torus, 3, 4)).cov_cap == 13)
    path = graph_core.make_path(5)
    expect(errors.PreconditionViolated, bounds.torus_unit_estimates, path,
           UnitDistribution(path, 0, 4))
    small = graph_core.make_torus(4, 5)
    expect(errors.GraphTooSmall, bounds.torus_unit_estimates, small,
           UnitDistribution(small, 0, 4))

    torus = graph_core.make_torus(5, 5)
    assert(bounds.grid_derivation_bound(5, 5, dist(torus, {0: 4, 12: 2})) ==
           Fraction(389, 95))


def test_cover_ratio():
    assert(bounds.path_cycle_cover_ratio(graph_core.make_path(5), 1) == 1)
    assert(bounds.path_cycle_cover_ratio(graph_core.make_cycle(6), 2) ==
           Fraction(3, 2))
    assert(bounds.path_cycle_cover_ratio(graph_core.make_path(5), 4) ==
           Fraction(5, 4))


def test_bound_report():
    cycle = graph_core.make_cycle(6)
    report = bounds.bound_report(cycle)
    assert(report.fractional_bound == Fraction(16, 7))
    assert(report.weight_bound == 3)
    assert(report.path_cycle_bound == 4)
    assert(report.grid_bound is None)
    assert(report.best_lower() == 4)
    rows = dict(report.rows())
    assert(rows["fractional"] == "16/7 (2.2857)")
    assert(rows["effect (min)"] == "21/8 (2.6250)")
    assert("excess" not in rows)

    report = bounds.bound_report(cycle, dist(cycle, {0: 2, 3: 2}))
    assert(report.excess_bound == Fraction(64, 21))
    assert(report.structural_bound is None)
    assert(any("structural" in note for note in report.notes))

    report = bounds.bound_report(cycle, dist(cycle, {0: 1}))
    assert(report.excess_bound is None)
    assert(any("not solvable" in note for note in report.notes))

    report = bounds.bound_report(graph_core.make_path(4))
    assert(report.fractional_bound is None)
    assert(report.best_lower() == 3)

    report = bounds.bound_report(graph_core.make_torus(5, 5))
    assert(report.grid_bound == 4)
    report = bounds.bound_report(graph_core.make_torus(4, 4))
    assert(report.grid_bound is None)
    assert(any("at least 5" in note for note in report.notes))

    expect(errors.DisconnectedGraph, bounds.bound_report,
           graph_core.Graph(3, [(0, 1)]))


def test_ilp_size():
    problem = bounds.build_ilp(graph_core.make_path(2))
    assert(len(problem.variables()) == 6)
    assert(len(problem.constraints) == 6)

    problem = bounds.build_ilp(graph_core.make_path(3))
    assert(len(problem.variables()) == 15)
    assert(len(problem.constraints) == 12)
    assert("reach_0" in problem.constraints)
    assert("flow_2_1" in problem.constraints)
    assert(problem.objective.name == "pebbles")

    relaxed = bounds.build_ilp(graph_core.make_path(3), relax=True)
    assert(all(v.cat == "Continuous" for v in relaxed.variables()))
    assert(all(v.cat == "Integer" for v in problem.variables()))


def test_emit_ilp():
    cycle = graph_core.make_cycle(4)
    stream = io.StringIO()
    summary = bounds.emit_ilp(cycle, stream)
    assert(summary.variables == 4 + 4 * 8)
    assert(summary.constraints == 4 + 16)
    assert(summary.integer and summary.fmt == "lp")
    text = stream.getvalue()
    assert("Minimize" in text)
    assert("reach_3" in text)

    temp_dir = tempfile.mkdtemp()
    try:
        path = os.path.join(temp_dir, "c4.mps")
        summary = bounds.emit_ilp(cycle, path, relax=True, fmt="mps")
        assert(not summary.integer)
        with open(path, "r") as f:
            assert("ROWS" in f.read())

        expect(errors.WriteFailure, bounds.emit_ilp, cycle,
               os.path.join(temp_dir, "missing", "c4.lp"))
        expect(errors.WriteFailure, bounds.emit_ilp, cycle, path, False,
               "json")
    finally:
        shutil.rmtree(temp_dir)


if __name__ == "__main__":
    test_effect()
    test_simple_bounds()
    test_excess_bounds()
    test_torus_estimates()
    test_cover_ratio()
    test_bound_report()
    test_ilp_size()
    test_emit_ilp()
