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

"""Exact reachability computations for pebbling distributions.

reach(P, v) is found by a depth-first search over distribution states.
Every move removes one pebble, so the search depth never exceeds |P|.
States are memoized on their counts vector and branches are cut with the
weight bound sum_u P(u) / 2^d(u, S), which no move can increase.
"""

import collections
import logging
import os.path
from fractions import Fraction

import networkx

from pebbling_toolkit import errors
from pebbling_toolkit import async_tools


class PebbleDistribution(object):
    """Value snapshot of pebble counts over the vertices of a graph."""

    __slots__ = ("graph", "counts", "size")

    def __init__(self, graph, counts):
        counts = tuple(counts)
        if len(counts) != graph.n:
            raise errors.InvalidSize(
                "Distribution has %i counts but the graph has %i vertices." %
                (len(counts), graph.n)
            )
        for v, count in enumerate(counts):
            if not isinstance(count, int) or count < 0:
                raise errors.InvalidSize(
                    "Pebble count at vertex %i has to be a nonnegative "
                    "integer, got %r." % (v, count)
                )

        self.graph = graph
        self.counts = counts
        self.size = sum(counts)

    @classmethod
    def from_mapping(cls, graph, mapping):
        counts = [0] * graph.n
        for v, count in mapping.items():
            graph.check_vertex(v)
            counts[v] += count
        return cls(graph, counts)

    @classmethod
    def empty(cls, graph):
        return cls(graph, (0,) * graph.n)

    def __getitem__(self, v):
        return self.counts[v]

    def occupied(self):
        return [v for v, count in enumerate(self.counts) if count > 0]

    def as_dict(self):
        return dict((v, count) for v, count in enumerate(self.counts)
                    if count > 0)

    def __add__(self, other):
        if not isinstance(other, PebbleDistribution):
            return NotImplemented
        if self.graph != other.graph:
            raise errors.GraphMismatch()
        return PebbleDistribution(
            self.graph, [a + b for a, b in zip(self.counts, other.counts)]
        )

    def __eq__(self, other):
        if not isinstance(other, PebbleDistribution):
            return NotImplemented
        return self.graph == other.graph and self.counts == other.counts

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __hash__(self):
        return hash((self.graph, self.counts))

    def __repr__(self):
        return "{%s}" % (", ".join(
            "%i:%i" % (v, count) for v, count in sorted(self.as_dict().items())
        ))


PebblingMove = collections.namedtuple("PebblingMove", ["source", "target"])


class ReachabilityReport(object):
    def __init__(self, distribution, reach):
        self.distribution = distribution
        self.reach = tuple(reach)
        self.excess = tuple(r - 1 if r >= 1 else 0 for r in self.reach)
        self.coverage = frozenset(
            v for v, r in enumerate(self.reach) if r >= 1
        )
        self.total_excess = sum(self.excess)
        self.solvable = len(self.coverage) == distribution.graph.n

    @property
    def cov(self):
        return len(self.coverage)

    def __repr__(self):
        return "ReachabilityReport(reach=%s, TE=%i, cov=%i)" % \
            (list(self.reach), self.total_excess, self.cov)


def apply_move(p, m):
    graph = p.graph
    graph.check_vertex(m.source)
    graph.check_vertex(m.target)

    if not graph.is_adjacent(m.source, m.target):
        raise errors.NonAdjacent(
            "Vertices %i and %i are not adjacent." % (m.source, m.target)
        )
    if p.counts[m.source] < 2:
        raise errors.InsufficientPebbles(
            "Vertex %i holds %i pebble(s), a move needs 2." %
            (m.source, p.counts[m.source])
        )

    counts = list(p.counts)
    counts[m.source] -= 2
    counts[m.target] += 1
    return PebbleDistribution(graph, counts)


def distance_to_set(graph, targets):
    ret = []
    for u in range(graph.n):
        distances = [graph.dist[u][t] for t in targets
                     if graph.dist[u][t] is not None]
        ret.append(min(distances) if distances else None)
    return ret


class StateSearch(object):
    """Maximizes the number of pebbles that can be gathered on a target set.

    Weights are kept as integers scaled by 2^scale where scale is the
    largest finite distance to the target set. Vertices in another component
    weigh nothing. With allow_target_moves False no move leaves a target,
    which loses nothing for single targets because an optimal sequence never
    needs to move a pebble away from the vertex it is collecting on.
    """

    def __init__(self, graph, targets, allow_target_moves=False,
                 node_budget=0):
        self.graph = graph
        self.targets = frozenset(targets)
        self.node_budget = node_budget
        self.nodes = 0

        distances = distance_to_set(graph, self.targets)
        self.scale = max(d for d in distances if d is not None)
        self.weights = tuple(
            0 if d is None else 1 << (self.scale - d) for d in distances
        )

        def closer_first(b):
            d = distances[b]
            return (graph.n if d is None else d, b)

        self.moves = tuple(
            tuple(sorted(graph.adjacency[a], key=closer_first))
            for a in range(graph.n)
        )
        self.sources = tuple(
            a for a in range(graph.n)
            if (allow_target_moves or a not in self.targets) and
            self.weights[a] > 0
        )

    def value(self, counts):
        return sum(counts[t] for t in self.targets)

    def weight(self, counts):
        return sum(c * w for c, w in zip(counts, self.weights))

    def bound(self, counts):
        return self.weight(counts) >> self.scale

    def run(self, counts, stop_at=None):
        """Returns the largest target count reachable from counts. With
        stop_at given the search stops as soon as that many are found.
        """

        counts = tuple(counts)
        targets = self.targets
        weights = self.weights
        scale = self.scale

        best = self.value(counts)
        root_weight = self.weight(counts)
        cap = root_weight >> scale
        if stop_at is not None:
            cap = min(cap, stop_at)
        if best >= cap:
            return best

        visited = set()
        stack = [(counts, best, root_weight)]
        while stack:
            state, value, weight = stack.pop()
            if state in visited:
                continue
            visited.add(state)

            self.nodes += 1
            if self.node_budget and self.nodes > self.node_budget:
                raise errors.BudgetExceeded(
                    "State search exceeded its budget of %i nodes." %
                    (self.node_budget), lower=best,
                    upper=cap if stop_at is None else None,
                    stats={"states_expanded": self.nodes}
                )

            if value > best:
                best = value
                if best >= cap:
                    break

            if (weight >> scale) <= best:
                continue

            children = []
            for a in self.sources:
                if state[a] < 2:
                    continue
                loss = 2 * weights[a]
                lost = 2 if a in targets else 0
                for b in self.moves[a]:
                    child_weight = weight - loss + weights[b]
                    if (child_weight >> scale) <= best:
                        continue
                    child = list(state)
                    child[a] -= 2
                    child[b] += 1
                    child = tuple(child)
                    if child in visited:
                        continue
                    child_value = value - lost + (1 if b in targets else 0)
                    children.append((child_weight, child_value, child))

            # the heaviest child ends up on top of the stack
            children.sort()
            stack.extend((child, child_value, child_weight)
                         for child_weight, child_value, child in children)

        return best


def reach(p, v, node_budget=0):
    p.graph.check_vertex(v)
    return StateSearch(p.graph, [v], node_budget=node_budget).run(p.counts)


def is_reachable(p, v, k=1, node_budget=0):
    p.graph.check_vertex(v)
    if k <= 0:
        return True
    search = StateSearch(p.graph, [v], node_budget=node_budget)
    return search.run(p.counts, stop_at=k) >= k


def reach_set(p, s, node_budget=0):
    s = frozenset(s)
    if not s:
        raise errors.EmptySet("Target set of reach_set is empty.")
    for v in s:
        p.graph.check_vertex(v)

    search = StateSearch(p.graph, s, allow_target_moves=True,
                         node_budget=node_budget)
    return search.run(p.counts)


def weight(p, v):
    p.graph.check_vertex(v)
    ret = Fraction(0)
    for u, count in enumerate(p.counts):
        d = p.graph.dist[u][v]
        if count and d is not None:
            ret += Fraction(count, 2 ** d)
    return ret


class ReachAction(async_tools.AsyncAction):
    def __init__(self, distribution, vertex, node_budget=0):
        super(ReachAction, self).__init__()
        self.distribution = distribution
        self.vertex = vertex
        self.node_budget = node_budget

    def run(self):
        return reach(self.distribution, self.vertex, self.node_budget)

    def __str__(self):
        return "Reach of %r at vertex %i" % (self.distribution, self.vertex)


def analyze(p, jobs=1, node_budget=0):
    actions = [ReachAction(p, v, node_budget) for v in range(p.graph.n)]
    ret = ReachabilityReport(p, async_tools.run_actions(actions, jobs))
    logging.debug("Analyzed %r on '%s': %r", p, p.graph.label, ret)
    return ret


class ReachabilityCache(object):
    """Memoizes analyze() results per distribution. Not thread-safe, every
    worker keeps its own cache.
    """

    def __init__(self, jobs=1, node_budget=0):
        self.jobs = jobs
        self.node_budget = node_budget
        self._reports = {}

    def analyze(self, p):
        ret = self._reports.get(p)
        if ret is None:
            ret = analyze(p, self.jobs, self.node_budget)
            self._reports[p] = ret
        return ret

    def __len__(self):
        return len(self._reports)


def unit_formula(g, u, size):
    """Closed form (cov, TE) of the distribution with size pebbles on u."""

    g.check_vertex(u)
    if size < 0:
        raise errors.InvalidSize("Unit size has to be nonnegative.")

    cov = 0
    total_excess = 0
    i = 0
    while size >> i >= 1:
        layer = sum(1 for d in g.dist[u] if d == i)
        cov += layer
        total_excess += layer * ((size >> i) - 1)
        i += 1
    return cov, total_excess


def _legal_moves(graph, counts):
    for a in range(graph.n):
        if counts[a] >= 2:
            for b in graph.adjacency[a]:
                yield a, b


def _after(counts, a, b):
    ret = list(counts)
    ret[a] -= 2
    ret[b] += 1
    return tuple(ret)


def naive_reach(p, v):
    """Exhaustive enumeration of all pebbling sequences, exponential."""

    p.graph.check_vertex(v)

    def explore(counts):
        best = counts[v]
        for a, b in _legal_moves(p.graph, counts):
            best = max(best, explore(_after(counts, a, b)))
        return best

    return explore(p.counts)


def naive_best_sequence(p, v):
    """Returns a shortest pebbling sequence that ends with reach(P, v)
    pebbles on v, found by breadth-first enumeration of sequences.
    """

    target = naive_reach(p, v)
    frontier = [(p.counts, ())]
    while frontier:
        next_frontier = []
        for counts, moves in frontier:
            if counts[v] >= target:
                return [PebblingMove(a, b) for a, b in moves]
            for a, b in _legal_moves(p.graph, counts):
                next_frontier.append((_after(counts, a, b), moves + ((a, b),)))
        frontier = next_frontier

    raise errors.PreconditionViolated(
        "No sequence reaches %i pebbles on vertex %i." % (target, v)
    )


class Trajectory(object):
    """Orientation of the moves of a pebbling sequence, without parallel
    arcs.
    """

    def __init__(self, graph, moves):
        self.graph = graph
        self.moves = tuple(moves)
        self.digraph = networkx.DiGraph()
        self.digraph.add_nodes_from(range(graph.n))
        for move in self.moves:
            if not graph.is_adjacent(move.source, move.target):
                raise errors.NonAdjacent(
                    "Vertices %i and %i are not adjacent." %
                    (move.source, move.target)
                )
            self.digraph.add_edge(move.source, move.target)

    def arcs(self):
        return sorted(self.digraph.edges())


def trajectory(g, moves):
    return Trajectory(g, moves)


def has_cycle(t):
    return not networkx.is_directed_acyclic_graph(t.digraph)


def parse_distribution_text(graph, text):
    mapping = {}
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue

        try:
            v, count = [int(token) for token in line.split()]
        except ValueError:
            raise errors.ParseError(
                "Expected 'vertex count', got '%s'." % (line)
            )
        if count < 1:
            raise errors.ParseError(
                "Pebble count has to be at least 1, got '%s'." % (line)
            )
        graph.check_vertex(v)
        if v in mapping:
            raise errors.ParseError("Vertex %i is listed twice." % (v))
        mapping[v] = count

    return PebbleDistribution.from_mapping(graph, mapping)


def load_distribution_file(graph, path):
    try:
        with open(path, "r") as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise errors.ParseError(
            "Can't read distribution file '%s': %s" % (path, e)
        )

    ret = parse_distribution_text(graph, text)
    logging.info("Loaded distribution %r from '%s'.", ret,
                 os.path.basename(path))
    return ret


def dump_distribution_text(p):
    return "".join(
        "%i %i\n" % (v, count) for v, count in sorted(p.as_dict().items())
    )
