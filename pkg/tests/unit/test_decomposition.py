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

from fractions import Fraction

from hypothesis import given, settings, strategies

from pebbling_toolkit import decomposition
from pebbling_toolkit import errors
from pebbling_toolkit import graph_core
from pebbling_toolkit import pebbling_engine
from pebbling_toolkit.decomposition import INFINITE
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


def star(leaves):
    return graph_core.Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)],
                            label="star:%i" % (leaves))


def test_decompose():
    path = graph_core.make_path(5)
    units = decomposition.decompose(dist(path, {0: 3, 2: 1, 4: 1}))
    assert([(unit.vertex, unit.count) for unit in units] ==
           [(2, 1), (4, 1), (0, 3)])
    assert(all(isinstance(unit, UnitDistribution) for unit in units))
    assert(decomposition.decompose(PebbleDistribution.empty(path)) == [])

    total = PebbleDistribution.empty(path)
    for unit in units:
        total = decomposition.sum_distributions(total, unit)
    assert(total == dist(path, {0: 3, 2: 1, 4: 1}))

    expect(errors.InvalidSize, UnitDistribution, path, 0, 0)
    expect(errors.VertexOutOfRange, UnitDistribution, path, 5, 1)


def test_check_disjoint():
    path = graph_core.make_path(4)
    e = expect(errors.NotDisjoint, decomposition.check_disjoint,
               dist(path, {1: 1, 2: 1}), UnitDistribution(path, 2, 3))
    assert(e.shared == frozenset([2]))
    expect(errors.GraphMismatch, decomposition.check_disjoint,
           dist(path, {1: 1}),
           UnitDistribution(graph_core.make_cycle(4), 2, 2))
    decomposition.check_disjoint(dist(path, {1: 1}),
                                 UnitDistribution(path, 2, 2))


def test_cooperation_on_short_path():
    path = graph_core.make_path(4)
    p = dist(path, {1: 1})
    u = UnitDistribution(path, 2, 2)
    report = decomposition.cooperation(p, u)

    assert(report.coop_vertices == frozenset([0]))
    assert(report.dc_vertices == frozenset([1]))
    assert(report.coop == 1 and report.dc == 1)
    assert(report.per_vertex_ce == (0, 1, 0, 0))
    assert(report.ce == 1)
    assert(report.excess_vertices() == frozenset([1]))
    assert(report.m_values[1] == 0)
    assert(report.m_values[0] == INFINITE)

    assert(decomposition.classify(report, 0) == "cooperation")
    assert(decomposition.classify(report, 1) == "excess")
    assert(decomposition.classify(report, 2) == "cooperation-free")
    assert(report.cooperation_free_vertices() == frozenset([2, 3]))

    assert(decomposition.m_value(p, u, 1) == 0)
    assert(decomposition.m_value(p, u, 0) == INFINITE)

    blocks = decomposition.find_c_blocks(p, u, report)
    assert(blocks == [frozenset([0, 1, 2])])
    assert(decomposition.cooperation_claims(report, blocks) == [])


def test_cooperation_on_long_path():
    path = graph_core.make_path(9)
    p = dist(path, {2: 1, 6: 1})
    u = UnitDistribution(path, 4, 4)
    report = decomposition.cooperation(p, u)

    assert(report.excess_vertices() == frozenset([2, 6]))
    assert(report.coop_vertices == frozenset([1, 7]))
    assert(report.dc_vertices == frozenset([2, 6]))
    assert(report.ce == 2)
    assert(decomposition.find_c_blocks(p, u, report) ==
           [frozenset([1, 2, 3]), frozenset([5, 6, 7])])
    assert(decomposition.cooperation_claims(report) == [])

    assert(decomposition.coopexcess_connected(p, u, 1, 3, report))
    assert(not decomposition.coopexcess_connected(p, u, 1, 5, report))
    assert(decomposition.coopexcess_connected(p, u, 4, 4, report))


def test_c_blocks_need_two_pebbles():
    path = graph_core.make_path(4)
    expect(errors.UnitTooSmall, decomposition.find_c_blocks,
           dist(path, {0: 1}), UnitDistribution(path, 2, 1))


def test_closed_component_neighborhoods():
    cycle = graph_core.make_cycle(8)
    blocks = decomposition.closed_component_neighborhoods(cycle.nx,
                                                          [5, 1, 2])
    assert(blocks == [frozenset([0, 1, 2, 3]), frozenset([4, 5, 6])])
    assert(decomposition.closed_component_neighborhoods(cycle.nx, []) == [])


def test_identities():
    path = graph_core.make_path(5)
    p = dist(path, {0: 3, 4: 2})
    check = decomposition.decomposition_identities(p)
    assert(check.ok)
    assert(check.te_lhs == pebbling_engine.analyze(p).total_excess)

    prefixes = decomposition.prefix_cooperation(p)
    assert([entry.unit.vertex for entry in prefixes] == [4, 0])
    # the first unit cooperates with nothing
    assert((prefixes[0].ce, prefixes[0].coop, prefixes[0].dc) == (0, 0, 0))

    assert(decomposition.unit_excess(p) ==
           pebbling_engine.analyze(UnitDistribution(path, 0, 3)).total_excess +
           pebbling_engine.analyze(UnitDistribution(path, 4, 2)).total_excess)


def test_cooperation_bound():
    g = star(3)
    lhs, rhs = decomposition.cooperation_bound_check(dist(g, {0: 2}))
    assert((lhs, rhs) == (Fraction(0), Fraction(0)))

    lhs, rhs = decomposition.cooperation_bound_check(dist(g, {1: 2, 2: 2}))
    assert(lhs >= rhs)

    expect(errors.NotSolvable, decomposition.cooperation_bound_check,
           dist(g, {1: 1}))
    expect(errors.DeltaTooSmall, decomposition.cooperation_bound_check,
           dist(graph_core.make_cycle(5), {0: 4}))


def test_m_value_budget():
    path = graph_core.make_path(9)
    p = dist(path, {2: 1, 6: 1})
    u = UnitDistribution(path, 4, 4)
    expect(errors.BudgetExceeded, decomposition.m_value, p, u, 2, None, 1)
    assert(decomposition.m_value(p, u, 2) == 0)
    assert(decomposition.m_value(p, u, 1) == INFINITE)


placements = strategies.lists(strategies.integers(min_value=0, max_value=2),
                              min_size=5, max_size=5)


@settings(max_examples=40, deadline=None)
@given(placements, strategies.integers(min_value=0, max_value=4),
       strategies.integers(min_value=1, max_value=5),
       strategies.sampled_from(["cycle:5", "path:5", "star"]))
def test_cooperation_invariants(counts, vertex, size, spec):
    graph = star(4) if spec == "star" else graph_core.parse_graph_spec(spec)
    counts[vertex] = 0
    p = PebbleDistribution(graph, counts)
    u = UnitDistribution(graph, vertex, size)
    report = decomposition.cooperation(p, u, with_m_values=False)

    assert(all(ce >= 0 for ce in report.per_vertex_ce))
    assert(all(report.per_vertex_ce[v] >= 1 for v in report.dc_vertices))
    assert(report.pq_report.cov == report.p_report.cov +
           report.q_report.cov + report.coop - report.dc)
    for c in report.coop_vertices:
        assert(any(report.per_vertex_ce[w] > 0 for w in graph.adjacency[c]))
    assert(decomposition.decomposition_identities(p + u).ok)


if __name__ == "__main__":
    test_decompose()
    test_check_disjoint()
    test_cooperation_on_short_path()
    test_cooperation_on_long_path()
    test_c_blocks_need_two_pebbles()
    test_closed_component_neighborhoods()
    test_identities()
    test_cooperation_bound()
    test_m_value_budget()
    test_cooperation_invariants()
