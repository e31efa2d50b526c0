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

"""Closed-form quantities and lower bounds on the optimal pebbling number,
and the integer program whose optimum is that number.

Arithmetic is exact with Fraction, values are rounded up only when an
integer bound is reported.
"""

import logging
import math
import os
import shutil
import tempfile
from fractions import Fraction

import pulp

from pebbling_toolkit import errors
from pebbling_toolkit import graph_core
from pebbling_toolkit import pebbling_engine
from pebbling_toolkit import decomposition


def _require_connected(g):
    if not g.connected:
        raise errors.DisconnectedGraph(g.label)


def ceil_fraction(value):
    return int(math.ceil(Fraction(value)))


def effect(g, v):
    """ef(v): sum over i of |N_i(v)| / 2^i."""

    _require_connected(g)
    g.check_vertex(v)
    return sum((Fraction(size, 2 ** i)
                for i, size in enumerate(graph_core.layer_sizes(g, v))),
               Fraction(0))


def max_effect(g):
    return max(effect(g, v) for v in range(g.n))


class ExcessCheck(object):
    def __init__(self, lhs, rhs):
        self.lhs = lhs
        self.rhs = rhs

    @property
    def slack(self):
        return self.lhs - self.rhs

    @property
    def holds(self):
        return self.lhs >= self.rhs

    def __repr__(self):
        return "ExcessCheck(%s >= %s)" % (self.lhs, self.rhs)


def excess_inequality_check(g, p, cache=None):
    """Evaluates sum_v ef(v) P(v) >= |V| + TE(P) for a solvable p."""

    _require_connected(g)
    if cache is None:
        cache = pebbling_engine.ReachabilityCache()
    report = cache.analyze(p)
    if not report.solvable:
        raise errors.NotSolvable("Distribution %r is not solvable." % (p))

    lhs = sum((effect(g, v) * count for v, count in enumerate(p.counts)
               if count), Fraction(0))
    return ExcessCheck(lhs, g.n + report.total_excess)


def _transitive_effect(g):
    if not graph_core.looks_vertex_transitive(g):
        logging.warning("Graph '%s' does not look vertex-transitive, the "
                        "bound assumes it is.", g.label)
    return effect(g, 0)


def fractional_bound(g):
    _require_connected(g)
    return Fraction(g.n) / _transitive_effect(g)


def weight_bound(g):
    """ceil(|V| / max ef(v)), valid for every connected graph."""

    _require_connected(g)
    return ceil_fraction(Fraction(g.n) / max_effect(g))


def excess_bound(g, p, cache=None):
    """(|V| + TE(P)) / ef(v) for a solvable p on a vertex-transitive g."""

    check = excess_inequality_check(g, p, cache)
    return check.rhs / _transitive_effect(g)


def structural_bound(g, p, cache=None):
    _require_connected(g)
    delta = g.max_degree
    if delta < 3:
        raise errors.DeltaTooSmall(
            "The structural bound needs maximum degree at least 3, graph "
            "'%s' has %i." % (g.label, delta)
        )
    if cache is None:
        cache = pebbling_engine.ReachabilityCache()
    if not cache.analyze(p).solvable:
        raise errors.NotSolvable("Distribution %r is not solvable." % (p))

    unit_excess = 0
    covered = 0
    for unit in decomposition.decompose(p):
        cov, total_excess = pebbling_engine.unit_formula(g, unit.vertex,
                                                         unit.count)
        unit_excess += total_excess
        covered += cov

    numerator = Fraction(delta - 1, delta - 2) * g.n + unit_excess - \
        Fraction(covered, delta - 2)
    return numerator / _transitive_effect(g)


def _check_torus_size(m, n):
    if min(m, n) < 5:
        raise errors.GraphTooSmall(
            "Torus estimates need min(m, n) >= 5, got %i x %i." % (m, n)
        )


def grid_bound(m, n):
    _check_torus_size(m, n)
    return ceil_fraction(Fraction(2 * m * n, 13))


class UnitEstimate(object):
    def __init__(self, size, cov_cap, exc_floor):
        self.size = size
        self.cov_cap = cov_cap
        self.exc_floor = exc_floor

    def __repr__(self):
        return "UnitEstimate(size=%i, cov_cap=%s, exc_floor=%s)" % \
            (self.size, self.cov_cap, self.exc_floor)


def unit_estimates(size):
    """Coverage cap and excess floor of a unit of the given size on a torus
    with both sides at least 5.
    """

    if size < 1:
        raise errors.InvalidSize("Unit size has to be positive.")
    if size == 1:
        return UnitEstimate(size, Fraction(1), Fraction(0))
    if size <= 3:
        return UnitEstimate(size, Fraction(5, 2) * size, Fraction(1, 2) * size)
    return UnitEstimate(size, Fraction(13, 4) * size, Fraction(8, 5) * size)


def torus_unit_estimates(g, u):
    if g.family is None or g.family[0] != "torus":
        raise errors.PreconditionViolated(
            "Graph '%s' is not a torus." % (g.label)
        )
    _check_torus_size(*g.family[1])
    return unit_estimates(u.count)


def grid_derivation_bound(m, n, p):
    """3/19 nm - S_{2,3}/38 + S_{>=4}/20 where S_k sums the pebbles of the
    units in each size class.
    """

    _check_torus_size(m, n)
    small = 0
    large = 0
    for unit in decomposition.decompose(p):
        if 2 <= unit.count <= 3:
            small += unit.count
        elif unit.count >= 4:
            large += unit.count
    return Fraction(3, 19) * m * n - Fraction(small, 38) + \
        Fraction(large, 20)


def path_cycle_bound(n):
    if n < 1:
        raise errors.InvalidSize("Path length has to be positive.")
    return ceil_fraction(Fraction(2 * n, 3))


def path_cycle_cover_ratio(g, size):
    """Largest cov(U) / |U| over units of the given size on g."""

    return max(Fraction(pebbling_engine.unit_formula(g, u, size)[0], size)
               for u in range(g.n))


class BoundReport(object):
    def __init__(self, graph):
        self.graph = graph
        self.effect = {}
        self.fractional_bound = None
        self.weight_bound = None
        self.excess_bound = None
        self.structural_bound = None
        self.grid_bound = None
        self.path_cycle_bound = None
        self.notes = []

    def best_lower(self):
        values = [self.weight_bound, self.grid_bound, self.path_cycle_bound]
        for value in (self.fractional_bound, self.excess_bound,
                      self.structural_bound):
            if value is not None:
                values.append(ceil_fraction(value))
        return max(value for value in values if value is not None)

    def rows(self):
        ret = []
        for name, value in (
                ("effect (min)", min(self.effect.values())),
                ("effect (max)", max(self.effect.values())),
                ("fractional", self.fractional_bound),
                ("weight", self.weight_bound),
                ("excess", self.excess_bound),
                ("structural", self.structural_bound),
                ("grid", self.grid_bound),
                ("path/cycle", self.path_cycle_bound)):
            if value is None:
                continue
            shown = str(value)
            if isinstance(value, Fraction) and value.denominator != 1:
                shown = "%s (%.4f)" % (value, float(value))
            ret.append((name, shown))
        return ret


def bound_report(g, p=None, cache=None):
    _require_connected(g)
    ret = BoundReport(g)
    ret.effect = dict((v, effect(g, v)) for v in range(g.n))
    ret.weight_bound = weight_bound(g)

    transitive = graph_core.looks_vertex_transitive(g)
    if transitive:
        ret.fractional_bound = fractional_bound(g)
    else:
        ret.notes.append("not vertex-transitive: fractional, excess and "
                         "structural bounds skipped")

    family = g.family[0] if g.family is not None else None
    if family in ("torus", "grid") and min(g.family[1]) >= 5:
        ret.grid_bound = grid_bound(*g.family[1])
    elif family in ("torus", "grid"):
        ret.notes.append("grid bound needs both sides at least 5")
    if family in ("path", "cycle"):
        ret.path_cycle_bound = path_cycle_bound(g.n)

    if p is not None:
        if cache is None:
            cache = pebbling_engine.ReachabilityCache()
        if not cache.analyze(p).solvable:
            ret.notes.append("distribution is not solvable: excess and "
                             "structural bounds skipped")
        elif transitive:
            ret.excess_bound = excess_bound(g, p, cache)
            if g.max_degree >= 3:
                ret.structural_bound = structural_bound(g, p, cache)
            else:
                ret.notes.append("maximum degree below 3: structural bound "
                                 "skipped")

    return ret


class EmissionSummary(object):
    def __init__(self, variables, constraints, integer, fmt):
        self.variables = variables
        self.constraints = constraints
        self.integer = integer
        self.fmt = fmt

    def __repr__(self):
        return "EmissionSummary(%i variables, %i constraints, %s, %s)" % \
            (self.variables, self.constraints,
             "integer" if self.integer else "relaxed", self.fmt)


def build_ilp(g, relax=False):
    """Optimal pebbling as an integer program: P_j pebbles placed on j and
    p_i_j_k moves from j to k made while solving target i.
    """

    category = pulp.LpContinuous if relax else pulp.LpInteger
    problem = pulp.LpProblem("optimal_pebbling", pulp.LpMinimize)

    placement = [pulp.LpVariable("P_%i" % (v), lowBound=0, cat=category)
                 for v in range(g.n)]
    moves = {}
    for i in range(g.n):
        for j in range(g.n):
            for k in g.adjacency[j]:
                moves[(i, j, k)] = pulp.LpVariable(
                    "p_%i_%i_%i" % (i, j, k), lowBound=0, cat=category
                )

    problem += pulp.lpSum(placement), "pebbles"

    def balance(i, j):
        return placement[j] + pulp.lpSum(
            moves[(i, x, j)] - 2 * moves[(i, j, x)] for x in g.adjacency[j]
        )

    for i in range(g.n):
        problem += balance(i, i) >= 1, "reach_%i" % (i)
    for i in range(g.n):
        for j in range(g.n):
            problem += balance(i, j) >= 0, "flow_%i_%i" % (i, j)

    return problem


def emit_ilp(g, out, relax=False, fmt="lp"):
    """Writes the model to out, a path or an open text stream."""

    if fmt not in ("lp", "mps"):
        raise errors.WriteFailure("Unknown model format '%s'." % (fmt))

    problem = build_ilp(g, relax)
    summary = EmissionSummary(len(problem.variables()),
                              len(problem.constraints), not relax, fmt)

    def write(path):
        if fmt == "lp":
            problem.writeLP(path)
        else:
            problem.writeMPS(path)

    try:
        if hasattr(out, "write"):
            handle, path = tempfile.mkstemp(suffix="." + fmt)
            os.close(handle)
            try:
                write(path)
                with open(path, "r") as f:
                    shutil.copyfileobj(f, out)
            finally:
                os.remove(path)
        else:
            write(out)
    except (IOError, OSError) as e:
        raise errors.WriteFailure("Failed to write the model: %s" % (e))

    logging.info("Emitted %r for graph '%s'.", summary, g.label)
    return summary
