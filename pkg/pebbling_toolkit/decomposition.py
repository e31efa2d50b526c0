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

"""Unit decompositions and the cooperation statistics of disjoint
distributions.

For disjoint P and Q a cooperation vertex is reachable under P + Q but
under neither P nor Q, a double covered vertex is reachable under both,
and the cooperation excess of a vertex is
exc(P + Q, v) - exc(P, v) - exc(Q, v).
"""

import heapq
import logging
import math
from fractions import Fraction

import networkx

from pebbling_toolkit import errors
from pebbling_toolkit import pebbling_engine
from pebbling_toolkit.pebbling_engine import PebbleDistribution


INFINITE = math.inf


class UnitDistribution(PebbleDistribution):
    """Distribution with all its pebbles on a single vertex."""

    __slots__ = ("vertex", "count")

    def __init__(self, graph, vertex, count):
        graph.check_vertex(vertex)
        if count < 1:
            raise errors.InvalidSize(
                "A unit needs at least one pebble, got %r." % (count)
            )

        counts = [0] * graph.n
        counts[vertex] = count
        super(UnitDistribution, self).__init__(graph, counts)
        self.vertex = vertex
        self.count = count

    def __repr__(self):
        return "unit(%i,%i)" % (self.vertex, self.count)


def decompose(p):
    units = [UnitDistribution(p.graph, v, count)
             for v, count in enumerate(p.counts) if count > 0]
    units.sort(key=lambda unit: (unit.count, unit.vertex))
    return units


def sum_distributions(p, q):
    return p + q


def check_disjoint(p, q):
    if p.graph != q.graph:
        raise errors.GraphMismatch()

    shared = set(p.occupied()) & set(q.occupied())
    if shared:
        raise errors.NotDisjoint(shared)


class CooperationReport(object):
    def __init__(self, p, q, p_report, q_report, pq_report, m_values=None):
        self.p = p
        self.q = q
        self.p_report = p_report
        self.q_report = q_report
        self.pq_report = pq_report

        self.coop_vertices = pq_report.coverage - p_report.coverage - \
            q_report.coverage
        self.dc_vertices = p_report.coverage & q_report.coverage
        self.coop = len(self.coop_vertices)
        self.dc = len(self.dc_vertices)
        self.per_vertex_ce = tuple(
            a - b - c for a, b, c in
            zip(pq_report.excess, p_report.excess, q_report.excess)
        )
        self.ce = pq_report.total_excess - p_report.total_excess - \
            q_report.total_excess
        self.m_values = m_values

    @property
    def graph(self):
        return self.p.graph

    def excess_vertices(self):
        return frozenset(v for v, ce in enumerate(self.per_vertex_ce)
                         if ce > 0)

    def cooperation_free_vertices(self):
        return frozenset(
            v for v in range(self.graph.n)
            if classify(self, v) == "cooperation-free"
        )

    def __repr__(self):
        return "CooperationReport(coop=%i, dc=%i, ce=%i)" % \
            (self.coop, self.dc, self.ce)


def m_value(p, u, v, report=None, node_budget=0):
    """Minimal number of distinct cooperation vertices a pebbling sequence
    has to utilize to put two pebbles on v, INFINITE when v is not
    2-reachable under p + u.
    """

    check_disjoint(p, u)
    p.graph.check_vertex(v)
    if report is None:
        report = cooperation(p, u, with_m_values=False)

    return _m_search(p + u, v, report.coop_vertices, node_budget)


def _m_search(pq, v, coop_vertices, node_budget=0):
    graph = pq.graph
    counts = pq.counts
    if counts[v] >= 2:
        return 0

    search = pebbling_engine.StateSearch(graph, [v], node_budget=node_budget)
    if search.run(counts, stop_at=2) < 2:
        return INFINITE

    weights = search.weights
    needed = 2 << search.scale
    sequence = 0
    heap = [(0, sequence, counts, frozenset())]
    seen = set()
    expanded = 0

    # uniform cost search, the number of utilized cooperation vertices
    # never decreases along a sequence
    while heap:
        cost, _, state, used = heapq.heappop(heap)
        if (state, used) in seen:
            continue
        seen.add((state, used))

        if state[v] >= 2:
            return cost

        expanded += 1
        if node_budget and expanded > node_budget:
            raise errors.BudgetExceeded(
                "M value search at vertex %i exceeded %i nodes." %
                (v, node_budget), lower=cost, upper=len(coop_vertices),
                stats={"states_expanded": expanded}
            )

        state_weight = sum(c * w for c, w in zip(state, weights))
        for a in search.sources:
            if state[a] < 2:
                continue
            for b in graph.adjacency[a]:
                if state_weight - 2 * weights[a] + weights[b] < needed:
                    continue
                child = list(state)
                child[a] -= 2
                child[b] += 1
                child = tuple(child)
                child_used = used
                touched = coop_vertices.intersection((a, b))
                if touched:
                    child_used = used | touched
                if (child, child_used) in seen:
                    continue
                sequence += 1
                heapq.heappush(heap, (len(child_used), sequence, child,
                                      child_used))

    raise errors.PreconditionViolated(
        "Vertex %i is 2-reachable but no sequence was found." % (v)
    )


def cooperation(p, q, cache=None, with_m_values=True, node_budget=0):
    check_disjoint(p, q)
    if cache is None:
        cache = pebbling_engine.ReachabilityCache(node_budget=node_budget)

    pq = p + q
    ret = CooperationReport(p, q, cache.analyze(p), cache.analyze(q),
                            cache.analyze(pq))

    if with_m_values:
        ret.m_values = tuple(
            _m_search(pq, v, ret.coop_vertices, node_budget)
            for v in range(p.graph.n)
        )

    logging.debug("Cooperation of %r and %r: %r", p, q, ret)
    return ret


def classify(report, v):
    if v in report.coop_vertices:
        return "cooperation"
    if report.per_vertex_ce[v] > 0:
        return "excess"
    return "cooperation-free"


def unit_excess(p, cache=None):
    if cache is None:
        cache = pebbling_engine.ReachabilityCache()
    return sum(cache.analyze(unit).total_excess for unit in decompose(p))


class PrefixCooperation(object):
    def __init__(self, unit, ce, coop, dc):
        self.unit = unit
        self.ce = ce
        self.coop = coop
        self.dc = dc

    def __repr__(self):
        return "PrefixCooperation(%r, ce=%i, coop=%i, dc=%i)" % \
            (self.unit, self.ce, self.coop, self.dc)


def prefix_cooperation(p, cache=None):
    """Cooperation of U_1 + ... + U_{i-1} with U_i along the sorted unit
    decomposition of p.
    """

    if cache is None:
        cache = pebbling_engine.ReachabilityCache()

    ret = []
    prefix = PebbleDistribution.empty(p.graph)
    for unit in decompose(p):
        report = cooperation(prefix, unit, cache, with_m_values=False)
        ret.append(PrefixCooperation(unit, report.ce, report.coop, report.dc))
        prefix = prefix + unit
    return ret


class IdentityCheck(object):
    def __init__(self, te_lhs, te_rhs, cov_lhs, cov_rhs):
        self.te_lhs = te_lhs
        self.te_rhs = te_rhs
        self.cov_lhs = cov_lhs
        self.cov_rhs = cov_rhs

    @property
    def te_balanced(self):
        return self.te_lhs == self.te_rhs

    @property
    def cov_balanced(self):
        return self.cov_lhs == self.cov_rhs

    @property
    def ok(self):
        return self.te_balanced and self.cov_balanced

    def __repr__(self):
        return "IdentityCheck(TE %i vs %i, cov %i vs %i)" % \
            (self.te_lhs, self.te_rhs, self.cov_lhs, self.cov_rhs)


def decomposition_identities(p, cache=None):
    if cache is None:
        cache = pebbling_engine.ReachabilityCache()

    report = cache.analyze(p)
    prefixes = prefix_cooperation(p, cache)
    unit_reports = [cache.analyze(entry.unit) for entry in prefixes]

    te_rhs = sum(r.total_excess for r in unit_reports) + \
        sum(entry.ce for entry in prefixes)
    cov_rhs = sum(r.cov for r in unit_reports) + \
        sum(entry.coop - entry.dc for entry in prefixes)
    return IdentityCheck(report.total_excess, te_rhs, report.cov, cov_rhs)


def find_c_blocks(p, u, report=None, cache=None):
    """Returns the C-blocks of p + u sorted by their smallest vertex.

    A C-block is the closed neighborhood of a connected component of the
    vertices with positive cooperation excess.
    """

    check_disjoint(p, u)
    if u.size < 2:
        raise errors.UnitTooSmall(
            "C-blocks need a unit of at least 2 pebbles, got %i." % (u.size)
        )
    if report is None:
        report = cooperation(p, u, cache, with_m_values=False)

    return closed_component_neighborhoods(p.graph.nx,
                                          report.excess_vertices())


def closed_component_neighborhoods(nx_graph, vertices):
    blocks = []
    for component in networkx.connected_components(
            nx_graph.subgraph(vertices)):
        block = set(component)
        for v in component:
            block.update(nx_graph.neighbors(v))
        blocks.append(frozenset(block))

    blocks.sort(key=min)
    return blocks


def coopexcess_connected(p, u, a, b, report=None):
    """Brute force over simple paths: is there an a-b path whose inner
    vertices all have positive cooperation excess?
    """

    if report is None:
        report = cooperation(p, u, with_m_values=False)
    if a == b:
        return True

    positive = report.excess_vertices()
    for path in networkx.all_simple_paths(p.graph.nx, a, b):
        if all(v in positive for v in path[1:-1]):
            return True
    return False


def cooperation_bound_check(p, cache=None):
    """Returns (lhs, rhs) of sum_i CE(prefix, U_i) >= (|V| - sum_i
    cov(U_i)) / (max degree - 2) for a solvable p.
    """

    graph = p.graph
    if graph.max_degree < 3:
        raise errors.DeltaTooSmall(
            "The cooperation bound needs maximum degree at least 3, graph "
            "'%s' has %i." % (graph.label, graph.max_degree)
        )
    if cache is None:
        cache = pebbling_engine.ReachabilityCache()
    if not cache.analyze(p).solvable:
        raise errors.NotSolvable("Distribution %r is not solvable." % (p))

    prefixes = prefix_cooperation(p, cache)
    lhs = sum(entry.ce for entry in prefixes)
    covered = sum(cache.analyze(entry.unit).cov for entry in prefixes)
    rhs = Fraction(graph.n - covered, graph.max_degree - 2)
    return Fraction(lhs), rhs


def cooperation_claims(report, c_blocks=None):
    """Evaluates the structural claims about cooperation between p and a
    unit u on one instance. Returns a list of violation descriptions, empty
    when every claim holds.
    """

    graph = report.graph
    u = report.q
    ce = report.per_vertex_ce
    positive = report.excess_vertices()
    p_cov = report.p_report.coverage
    u_cov = report.q_report.coverage
    ret = []

    if report.pq_report.cov != report.p_report.cov + report.q_report.cov + \
            report.coop - report.dc:
        ret.append("coverage identity fails: cov(P+U)=%i, cov(P)=%i, "
                   "cov(U)=%i, coop=%i, DC=%i" %
                   (report.pq_report.cov, report.p_report.cov,
                    report.q_report.cov, report.coop, report.dc))

    if report.coop_vertices & (p_cov | u_cov) or \
            not report.coop_vertices <= report.pq_report.coverage:
        ret.append("cooperation vertices overlap a single coverage")

    if report.ce != sum(ce):
        ret.append("CE %i differs from the per-vertex sum %i" %
                   (report.ce, sum(ce)))

    for c in sorted(report.coop_vertices):
        if not any(ce[w] > 0 for w in graph.adjacency[c]):
            ret.append("cooperation vertex %i has no neighbor with "
                       "cooperation excess" % (c))

    for v in sorted(positive):
        if not any(ce[w] > 0 or w in p_cov or w in u_cov
                   for w in graph.adjacency[v]):
            ret.append("vertex %i with cooperation excess has no neighbor "
                       "with cooperation excess or single coverage" % (v))

    if not isinstance(u, UnitDistribution):
        return ret

    if ce[u.vertex] > 0 and u.vertex not in report.dc_vertices:
        ret.append("unit vertex %i has cooperation excess but is not "
                   "double covered" % (u.vertex))

    if u.count < 2:
        return ret

    delta = graph.max_degree
    if report.coop - report.dc > (delta - 2) * report.ce:
        ret.append("coop - DC = %i exceeds (max degree - 2) * CE = %i" %
                   (report.coop - report.dc, (delta - 2) * report.ce))

    if u.vertex in report.dc_vertices and \
            not any(w in report.dc_vertices
                    for w in graph.adjacency[u.vertex]):
        ret.append("double covered unit vertex %i has no double covered "
                   "neighbor" % (u.vertex))

    free = report.cooperation_free_vertices()
    for d in sorted(report.dc_vertices):
        partners = (report.dc_vertices | free) - set([d])
        if not any(coopexcess_connected(report.p, u, d, w, report)
                   for w in sorted(partners)):
            ret.append("double covered vertex %i has no coopexcess path to "
                       "another double covered or cooperation free vertex" %
                       (d))

    if c_blocks is None:
        c_blocks = closed_component_neighborhoods(graph.nx, positive)
    for block in c_blocks:
        witnesses = len(block & (report.dc_vertices | free))
        if witnesses < 2:
            ret.append("C-block %s has only %i double covered or "
                       "cooperation free vertices" %
                       (sorted(block), witnesses))

    m = report.m_values
    if m is not None:
        for c in sorted(report.coop_vertices):
            if m[c] == INFINITE:
                continue
            lower = [w for w in graph.adjacency[c] if m[w] < m[c]]
            if not any(ce[w] >= 3 for w in lower) and \
                    sum(1 for w in lower if ce[w] >= 1) < 2:
                ret.append("cooperation vertex %i with M=%s has no "
                           "neighbors with smaller M and enough cooperation "
                           "excess" % (c, m[c]))

    return ret
