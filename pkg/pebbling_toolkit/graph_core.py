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

"""Immutable undirected graphs on the vertices 0..n-1 together with the
generators for paths, cycles, grids and tori.

Cartesian products encode the vertex (i, j) of g x h as i * |V(h)| + j.
"""

import logging
import os.path

import networkx

from pebbling_toolkit import errors


class Graph(object):
    """Simple undirected graph with precomputed all-pairs distances.

    dist[u][v] is None when u and v lie in different components. diameter
    is the largest finite distance.
    """

    def __init__(self, n, edges, label=None, family=None):
        if n < 1:
            raise errors.InvalidSize(
                "A graph needs at least one vertex, got %r." % (n)
            )

        normalized = set()
        for u, v in edges:
            for endpoint in (u, v):
                if not 0 <= endpoint < n:
                    raise errors.VertexOutOfRange(endpoint, n)
            if u == v:
                raise errors.InvalidGraph(
                    "Self-loop at vertex %i is not allowed." % (u)
                )
            edge = (min(u, v), max(u, v))
            if edge in normalized:
                raise errors.InvalidGraph(
                    "Edge %i-%i is listed twice." % edge
                )
            normalized.add(edge)

        self.n = n
        self.edges = frozenset(normalized)
        self.label = label if label is not None else "graph:%i" % (n)
        self.family = family

        nx_graph = networkx.Graph()
        nx_graph.add_nodes_from(range(n))
        nx_graph.add_edges_from(sorted(self.edges))
        self.nx = networkx.freeze(nx_graph)

        self.adjacency = tuple(
            tuple(sorted(nx_graph.neighbors(v))) for v in range(n)
        )
        self.max_degree = max(len(neighbors) for neighbors in self.adjacency)

        table = [[None] * n for _ in range(n)]
        lengths_by_source = networkx.all_pairs_shortest_path_length(nx_graph)
        for source, lengths in lengths_by_source:
            row = table[source]
            for target, length in lengths.items():
                row[target] = length
        self.dist = tuple(tuple(row) for row in table)

        self.diameter = max(
            d for row in self.dist for d in row if d is not None
        )
        self.connected = networkx.is_connected(nx_graph)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(%s, n=%i, m=%i)" % (self.label, self.n, len(self.edges))

    def check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise errors.VertexOutOfRange(v, self.n)

    def degree(self, v):
        self.check_vertex(v)
        return len(self.adjacency[v])

    def eccentricity(self, v):
        self.check_vertex(v)
        return max(d for d in self.dist[v] if d is not None)

    def radius(self):
        return min(self.eccentricity(v) for v in range(self.n))

    def is_adjacent(self, u, v):
        return (min(u, v), max(u, v)) in self.edges


def make_path(n):
    if n < 1:
        raise errors.InvalidSize("A path needs n >= 1, got %r." % (n))

    return Graph(n, [(i, i + 1) for i in range(n - 1)],
                 label="path:%i" % (n), family=("path", (n,)))


def make_cycle(n):
    if n < 3:
        raise errors.InvalidSize("A cycle needs n >= 3, got %r." % (n))

    return Graph(n, [(i, (i + 1) % n) for i in range(n)],
                 label="cycle:%i" % (n), family=("cycle", (n,)))


def cartesian_product(g, h, label=None, family=None):
    product = networkx.cartesian_product(g.nx, h.nx)
    edges = [
        (i1 * h.n + j1, i2 * h.n + j2)
        for (i1, j1), (i2, j2) in product.edges()
    ]
    if label is None:
        label = "(%s)x(%s)" % (g.label, h.label)

    return Graph(g.n * h.n, edges, label=label, family=family)


def make_grid(m, n):
    if m < 1 or n < 1:
        raise errors.InvalidSize(
            "A grid needs m, n >= 1, got %r, %r." % (m, n)
        )

    return cartesian_product(make_path(m), make_path(n),
                             label="grid:%i,%i" % (m, n),
                             family=("grid", (m, n)))


def make_torus(m, n):
    if m < 3 or n < 3:
        raise errors.InvalidSize(
            "A torus needs m, n >= 3, got %r, %r." % (m, n)
        )

    return cartesian_product(make_cycle(m), make_cycle(n),
                             label="torus:%i,%i" % (m, n),
                             family=("torus", (m, n)))


def from_networkx(nx_graph, label=None):
    nodes = sorted(nx_graph.nodes())
    index = dict((node, i) for i, node in enumerate(nodes))
    edges = [(index[u], index[v]) for u, v in nx_graph.edges()]
    return Graph(len(nodes), edges, label=label)


def neighborhood(g, v, k):
    """Returns the vertices at distance exactly k from v."""

    g.check_vertex(v)
    if k < 0:
        raise errors.InvalidSize(
            "Distance has to be nonnegative, got %r." % (k)
        )

    return frozenset(u for u, d in enumerate(g.dist[v]) if d == k)


def layer_sizes(g, v):
    ret = [0] * (g.eccentricity(v) + 1)
    for d in g.dist[v]:
        if d is not None:
            ret[d] += 1
    return ret


def looks_vertex_transitive(g):
    """Cheap necessary condition for vertex-transitivity: every vertex has
    the same degree and the same distance layer profile.
    """

    profile = layer_sizes(g, 0)
    return all(layer_sizes(g, v) == profile for v in range(1, g.n))


def automorphisms(g, limit=20000):
    """Returns the automorphism group of g as a list of permutation tuples,
    perm[v] being the image of v. Returns None when there are more than
    limit automorphisms.
    """

    matcher = networkx.algorithms.isomorphism.GraphMatcher(g.nx, g.nx)
    ret = []
    for mapping in matcher.isomorphisms_iter():
        if len(ret) >= limit:
            logging.warning(
                "Graph '%s' has more than %i automorphisms, symmetry "
                "reduction disabled.", g.label, limit
            )
            return None
        ret.append(tuple(mapping[v] for v in range(g.n)))

    ret.sort()
    logging.debug("Graph '%s' has %i automorphisms.", g.label, len(ret))
    return ret


def parse_graph_text(text, label=None):
    lines = []
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if line:
            lines.append(line)

    if not lines:
        raise errors.ParseError("Graph text is empty.")

    try:
        n, m = [int(token) for token in lines[0].split()]
    except ValueError:
        raise errors.ParseError(
            "Expected 'n m' on the first line, got '%s'." % (lines[0])
        )

    if len(lines) - 1 != m:
        raise errors.ParseError(
            "Header announces %i edges but %i edge lines follow." %
            (m, len(lines) - 1)
        )

    edges = []
    for line in lines[1:]:
        try:
            u, v = [int(token) for token in line.split()]
        except ValueError:
            raise errors.ParseError("Expected 'u v', got '%s'." % (line))
        edges.append((u, v))

    return Graph(n, edges, label=label)


def load_graph_file(path):
    try:
        with open(path, "r") as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise errors.ParseError("Can't read graph file '%s': %s" % (path, e))

    ret = parse_graph_text(text, label=os.path.basename(path))
    logging.info("Loaded graph '%s' with %i vertices and %i edges.",
                 path, ret.n, len(ret.edges))
    return ret


def dump_graph_text(g):
    lines = ["%i %i" % (g.n, len(g.edges))]
    lines.extend("%i %i" % edge for edge in sorted(g.edges))
    return "\n".join(lines) + "\n"


_GENERATORS = {
    "path": (make_path, 1),
    "cycle": (make_cycle, 1),
    "grid": (make_grid, 2),
    "torus": (make_torus, 2),
}


def parse_graph_spec(spec):
    """Parses "path:n", "cycle:n", "grid:m,n", "torus:m,n" or a path to a
    graph text file.
    """

    name, sep, arguments = spec.partition(":")
    if sep and name in _GENERATORS:
        generator, arity = _GENERATORS[name]
        try:
            values = [int(value) for value in arguments.split(",")]
        except ValueError:
            raise errors.ParseError(
                "Graph spec '%s' has non-integer arguments." % (spec)
            )
        if len(values) != arity:
            raise errors.ParseError(
                "Graph spec '%s' expects %i argument(s)." % (spec, arity)
            )
        return generator(*values)

    if os.path.isfile(spec):
        return load_graph_file(spec)

    raise errors.ParseError(
        "'%s' is neither a known generator nor a readable graph file." % (spec)
    )
