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

import unit_test_harness

from hypothesis import given, settings, strategies

from pebbling_toolkit import errors
from pebbling_toolkit import graph_core


def expect(error_class, callback, *args):
    try:
        callback(*args)
    except error_class:
        return
    assert(False)


def test_path_and_cycle():
    path = graph_core.make_path(5)
    assert(path.n == 5)
    assert(path.edges == frozenset([(0, 1), (1, 2), (2, 3), (3, 4)]))
    assert(path.diameter == 4)
    assert(path.max_degree == 2)
    assert(path.radius() == 2)
    assert(path.family == ("path", (5,)))
    assert(path.label == "path:5")

    single = graph_core.make_path(1)
    assert(single.n == 1 and not single.edges)
    assert(single.diameter == 0 and single.connected)

    cycle = graph_core.make_cycle(6)
    assert(cycle.is_adjacent(5, 0))
    assert(cycle.diameter == 3)
    assert(graph_core.layer_sizes(cycle, 2) == [1, 2, 2, 1])

    expect(errors.InvalidSize, graph_core.make_path, 0)
    expect(errors.InvalidSize, graph_core.make_cycle, 2)


def test_products():
    grid = graph_core.make_grid(3, 4)
    assert(grid.n == 12)
    assert(len(grid.edges) == 3 * 3 + 2 * 4)
    # (i, j) is encoded as i * 4 + j
    assert(grid.is_adjacent(0 * 4 + 1, 1 * 4 + 1))
    assert(not grid.is_adjacent(0, 5))
    assert(grid.dist[0][11] == 5)

    torus = graph_core.make_torus(5, 5)
    assert(torus.n == 25)
    assert(all(torus.degree(v) == 4 for v in range(torus.n)))
    assert(torus.diameter == 4)
    assert(graph_core.layer_sizes(torus, 0) == [1, 4, 8, 8, 4])
    assert(graph_core.neighborhood(torus, 0, 1) == frozenset([1, 4, 5, 20]))
    assert(graph_core.looks_vertex_transitive(torus))
    assert(not graph_core.looks_vertex_transitive(graph_core.make_path(3)))

    expect(errors.InvalidSize, graph_core.make_torus, 2, 5)
    expect(errors.InvalidSize, graph_core.make_grid, 0, 3)


def test_invalid_graphs():
    expect(errors.InvalidSize, graph_core.Graph, 0, [])
    expect(errors.VertexOutOfRange, graph_core.Graph, 3, [(0, 3)])
    expect(errors.InvalidGraph, graph_core.Graph, 3, [(1, 1)])
    expect(errors.InvalidGraph, graph_core.Graph, 3, [(0, 1), (1, 0)])

    g = graph_core.Graph(4, [(0, 1), (2, 3)])
    assert(not g.connected)
    assert(g.dist[0][2] is None)
    assert(g.diameter == 1)
    expect(errors.VertexOutOfRange, g.degree, 4)
    expect(errors.VertexOutOfRange, g.check_vertex, -1)


def test_equality_ignores_labels():
    a = graph_core.Graph(3, [(0, 1), (2, 1)], label="a")
    b = graph_core.Graph(3, [(1, 2), (1, 0)], label="b")
    assert(a == b)
    assert(hash(a) == hash(b))
    assert(a != graph_core.make_cycle(3))


def test_automorphisms():
    cycle = graph_core.make_cycle(5)
    group = graph_core.automorphisms(cycle)
    assert(len(group) == 10)
    assert(group[0] == (0, 1, 2, 3, 4))
    assert(group == sorted(group))

    assert(len(graph_core.automorphisms(graph_core.make_path(4))) == 2)
    assert(graph_core.automorphisms(cycle, limit=3) is None)


def test_graph_text():
    text = "# triangle with a tail\n4 4\n0 1\n1 2\n2 0\n2 3  # tail\n"
    g = graph_core.parse_graph_text(text, label="tail")
    assert(g.n == 4 and g.max_degree == 3)
    assert(g.label == "tail")
    assert(graph_core.parse_graph_text(graph_core.dump_graph_text(g)) == g)

    expect(errors.ParseError, graph_core.parse_graph_text, "")
    expect(errors.ParseError, graph_core.parse_graph_text, "3 2\n0 1\n")
    expect(errors.ParseError, graph_core.parse_graph_text, "3 1\n0 x\n")
    expect(errors.ParseError, graph_core.parse_graph_text, "three\n")


def test_graph_spec():
    assert(graph_core.parse_graph_spec("path:4") == graph_core.make_path(4))
    assert(graph_core.parse_graph_spec("torus:5,6").family ==
           ("torus", (5, 6)))
    assert(graph_core.parse_graph_spec("grid:2,3").n == 6)

    cycle = graph_core.parse_graph_spec(unit_test_harness.template_path(
        "c6.graph"))
    assert(cycle == graph_core.make_cycle(6))
    assert(cycle.label == "c6.graph")

    expect(errors.ParseError, graph_core.parse_graph_spec, "path:x")
    expect(errors.ParseError, graph_core.parse_graph_spec, "grid:3")
    expect(errors.ParseError, graph_core.parse_graph_spec, "no-such-file")


@settings(max_examples=40, deadline=None)
@given(strategies.integers(min_value=3, max_value=7),
       strategies.integers(min_value=3, max_value=7))
def test_torus_distances(m, n):
    torus = graph_core.make_torus(m, n)
    for u in range(torus.n):
        i, j = divmod(u, n)
        assert(torus.dist[0][u] == min(i, m - i) + min(j, n - j))
        assert(torus.dist[u][0] == torus.dist[0][u])


if __name__ == "__main__":
    test_path_and_cycle()
    test_products()
    test_invalid_graphs()
    test_equality_ignores_labels()
    test_automorphisms()
    test_graph_text()
    test_graph_spec()
    test_torus_distances()
