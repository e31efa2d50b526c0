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

"""Auxiliary labeled graphs and the transformations that remove saturated
vertices while keeping the coordinate sums.

Every vertex carries (c1, c2, c3, c4): its cooperation excess, whether it
is a cooperation vertex, whether it is double covered, and its M value.
A vertex is saturated when c1 * c2 > 0. Ties in "minimal c4" choices go to
the lowest vertex id and infinite c4 values order above every finite one.
"""

import collections
import logging

import networkx

from pebbling_toolkit import errors
from pebbling_toolkit import decomposition


class AuxVertex(collections.namedtuple("AuxVertex",
                                       ["c1", "c2", "c3", "c4", "origin"])):
    __slots__ = ()

    @property
    def saturated(self):
        return self.c1 * self.c2 > 0

    def descendant(self, index, c1, c2, c3):
        return AuxVertex(c1, c2, c3, self.c4, "%s^%i" % (self.origin, index))


class StepRecord(collections.namedtuple("StepRecord",
                                        ["step", "kind", "pivot", "partner",
                                         "sums"])):
    __slots__ = ()

    def to_line(self):
        return "step=%i kind=%s pivot=%i sums=%i,%i,%i" % \
            ((self.step, self.kind, self.pivot) + tuple(self.sums))


class AuxGraph(object):
    """Mutable only while a transformation builds it. Every public
    transformation returns a fresh copy.
    """

    def __init__(self, delta):
        self.delta = delta
        self.graph = networkx.Graph()
        self.next_id = 0
        self.trace = []

    def copy(self):
        ret = AuxGraph(self.delta)
        ret.graph = self.graph.copy()
        ret.next_id = self.next_id
        ret.trace = list(self.trace)
        return ret

    def add_vertex(self, vertex):
        vertex_id = self.next_id
        self.next_id += 1
        self.graph.add_node(vertex_id, label=vertex)
        return vertex_id

    def remove_vertex(self, v):
        self.graph.remove_node(v)

    def add_edge(self, u, v):
        self.graph.add_edge(u, v)

    def vertex(self, v):
        try:
            return self.graph.nodes[v]["label"]
        except KeyError:
            raise errors.PreconditionViolated(
                "Vertex %r is not part of the auxiliary graph." % (v)
            )

    @property
    def vertices(self):
        return dict((v, self.graph.nodes[v]["label"])
                    for v in sorted(self.graph.nodes()))

    @property
    def edges(self):
        return frozenset((min(u, v), max(u, v))
                         for u, v in self.graph.edges())

    def neighbors(self, v):
        return sorted(self.graph.neighbors(v))

    def degree(self, v):
        return self.graph.degree(v)

    def max_degree(self):
        return max([d for _, d in self.graph.degree()] or [0])

    def effective_delta(self):
        return max(self.delta, self.max_degree())

    def sums(self):
        labels = self.vertices.values()
        return (sum(a.c1 for a in labels), sum(a.c2 for a in labels),
                sum(a.c3 for a in labels))

    def saturated(self):
        """Saturated vertices, largest c4 first, then lowest id."""

        ret = [v for v, a in self.vertices.items() if a.saturated]
        ret.sort(key=lambda v: (-self.vertex(v).c4, v))
        return ret

    def c4_key(self, v):
        return (self.vertex(v).c4, v)

    def global_inequality(self):
        s1, s2, s3 = self.sums()
        return s2 - s3 <= (self.delta - 2) * s1

    def __len__(self):
        return self.graph.number_of_nodes()

    def __repr__(self):
        return "AuxGraph(%i vertices, delta=%i, sums=%s)" % \
            (len(self), self.delta, self.sums())


def build_a0(g, p, u, cache=None, report=None):
    decomposition.check_disjoint(p, u)
    if u.size < 2:
        raise errors.UnitTooSmall(
            "The auxiliary graph needs a unit of at least 2 pebbles, got "
            "%i." % (u.size)
        )

    if report is None or report.m_values is None:
        report = decomposition.cooperation(p, u, cache)

    ret = AuxGraph(g.max_degree)
    for v in range(g.n):
        ce = report.per_vertex_ce[v]
        if ce < 0:
            logging.warning("Vertex %i has negative cooperation excess %i.",
                            v, ce)
        ret.add_vertex(AuxVertex(
            ce,
            1 if v in report.coop_vertices else 0,
            1 if v in report.dc_vertices else 0,
            report.m_values[v],
            str(v)
        ))
    for edge in sorted(g.edges):
        ret.add_edge(*edge)

    logging.debug("Built A_0 for %r and %r: %r", p, u, ret)
    return ret


def find_saturated(a):
    saturated = a.saturated()
    return saturated[0] if saturated else None


def _record(a, kind, pivot, partner=None):
    a.trace.append(StepRecord(len(a.trace) + 1, kind, pivot, partner,
                              a.sums()))
    logging.debug("Auxiliary step %s", a.trace[-1].to_line())


def _choose_y(a, x):
    return min(a.neighbors(x), key=a.c4_key)


def _check_pivot(a, w):
    if not a.vertex(w).saturated:
        raise errors.PreconditionViolated(
            "Vertex %i is not saturated." % (w)
        )


def _check_t1(a, w, x):
    _check_pivot(a, w)
    if x not in a.neighbors(w):
        raise errors.PreconditionViolated(
            "Vertex %i is not a neighbor of %i." % (x, w)
        )

    vx = a.vertex(x)
    vw = a.vertex(w)
    if vx.c1 < 3 or not vx.c4 < vw.c4:
        raise errors.PreconditionViolated(
            "Neighbor %i needs c1 >= 3 and c4 < %s, it has %r." %
            (x, vw.c4, vx)
        )

    y = _choose_y(a, x)
    if y == w:
        raise errors.PreconditionViolated(
            "Vertex %i has the smallest c4 among the neighbors of %i." %
            (w, x)
        )
    if a.vertex(y).saturated:
        logging.info("Vertex %i chosen as y for x=%i is saturated itself, "
                     "it is left in place.", y, x)

    saturated_neighbors = [
        n for n in a.neighbors(x) if n != y and a.vertex(n).saturated
    ]
    return y, saturated_neighbors


def _rewire_t1(a, x, y, saturated_neighbors, x2_c2=0, x3_c2=0):
    """Splits x into x^1, x^2, x^3 and every r in saturated_neighbors into
    the leaf r^1 and r^2. Works in place and returns the ids of x's
    descendants.
    """

    vx = a.vertex(x)
    x_neighbors = a.neighbors(x)

    x1 = a.add_vertex(vx.descendant(1, 1, 0, 0))
    x2 = a.add_vertex(vx.descendant(2, vx.c1 - 2, x2_c2, vx.c3))
    x3 = a.add_vertex(vx.descendant(3, 1, x3_c2, 0))

    split = {}
    old_neighbors = {}
    for r in saturated_neighbors:
        vr = a.vertex(r)
        old_neighbors[r] = a.neighbors(r)
        split[r] = (a.add_vertex(vr.descendant(1, 0, 1, 0)),
                    a.add_vertex(vr.descendant(2, vr.c1, 0, vr.c3)))

    a.remove_vertex(x)
    for r in saturated_neighbors:
        a.remove_vertex(r)

    a.add_edge(x2, y)
    a.add_edge(x2, x1)
    a.add_edge(x2, x3)

    for r in saturated_neighbors:
        r1, r2 = split[r]
        a.add_edge(r1, x1)
        a.add_edge(r2, x3)
        for n in old_neighbors[r]:
            if n == x:
                continue
            a.add_edge(r2, split[n][1] if n in split else n)

    for n in x_neighbors:
        if n != y and n not in split:
            a.add_edge(x3, n)

    return x1, x2, x3


def transform1(a, w, x):
    """Transformation 1 for delta >= 4: x, a neighbor of the saturated w
    with c1 >= 3 and smaller c4, is tripled and its saturated neighbors
    other than y lose their cooperation flag to a new leaf.
    """

    if a.delta < 4:
        raise errors.PreconditionViolated(
            "Transformation 1 needs delta >= 4, got %i." % (a.delta)
        )
    y, saturated_neighbors = _check_t1(a, w, x)

    ret = a.copy()
    vx = ret.vertex(x)
    x1, x2, x3 = _rewire_t1(ret, x, y, saturated_neighbors)
    if vx.c2 == 1:
        x4 = ret.add_vertex(vx.descendant(4, 0, 1, 0))
        ret.add_edge(x4, x2)

    _record(ret, "1", w, x)
    return ret


def transform1_low_degree(a, w, x):
    """Transformation 1 for delta = 3. The extra cooperation leaf of a
    saturated x goes to a descendant with a free slot; without one either
    x^2 or x^3 keeps the cooperation flag, or Transformation 3 applies.
    """

    if a.delta != 3:
        raise errors.PreconditionViolated(
            "The low degree variant needs delta = 3, got %i." % (a.delta)
        )
    y, saturated_neighbors = _check_t1(a, w, x)

    vx = a.vertex(x)
    ret = a.copy()
    descendants = _rewire_t1(ret, x, y, saturated_neighbors)
    if vx.c2 == 0:
        _record(ret, "1", w, x)
        return ret

    for host in descendants:
        if ret.degree(host) < 3:
            x4 = ret.add_vertex(vx.descendant(4, 0, 1, 0))
            ret.add_edge(x4, host)
            _record(ret, "1*", w, x)
            return ret

    strong = [d for d in a.neighbors(x)
              if a.vertex(d).c1 >= 3 and a.vertex(d).c4 < vx.c4]
    if not strong:
        ret = transform3(a, x)
        ret.trace[-1] = ret.trace[-1]._replace(pivot=w, partner=x)
        return ret

    ret = a.copy()
    if y in strong:
        _rewire_t1(ret, x, y, saturated_neighbors, x2_c2=1)
    else:
        _rewire_t1(ret, x, y, saturated_neighbors, x3_c2=1)
    _record(ret, "1*", w, x)
    return ret


def transform2(a, w):
    """Transformation 2: w is split into the leaf w^1 hanging on x and w^2
    keeping every old neighbor except y.
    """

    _check_pivot(a, w)
    vw = a.vertex(w)

    qualifying = [n for n in a.neighbors(w)
                  if a.vertex(n).c1 > 0 and a.vertex(n).c4 < vw.c4]
    if len(qualifying) < 2:
        raise errors.PreconditionViolated(
            "Vertex %i needs two neighbors with positive c1 and smaller c4, "
            "it has %i." % (w, len(qualifying))
        )
    # y and x are the two smallest by c4 among neighbors with c1 > 0 and
    # c4 < w4 only. w^1 has to hang on a vertex with c1 > 0 so its c2 stays
    # inside an A-block, a smaller neighbor with c1 = 0 is skipped.
    qualifying.sort(key=a.c4_key)
    y, x = qualifying[0], qualifying[1]

    ret = a.copy()
    neighbors = ret.neighbors(w)
    w1 = ret.add_vertex(vw.descendant(1, 0, 1, 0))
    w2 = ret.add_vertex(vw.descendant(2, vw.c1, 0, vw.c3))
    ret.remove_vertex(w)

    ret.add_edge(w1, x)
    for n in neighbors:
        if n != y:
            ret.add_edge(w2, n)

    _record(ret, "2", w, x)
    return ret


def transform3(a, x):
    """Transformation 3 for delta = 3 and a saturated x whose neighbors
    are y (smallest c4) and two saturated vertices v, w with v4 <= w4.
    """

    if a.delta != 3:
        raise errors.PreconditionViolated(
            "Transformation 3 needs delta = 3, got %i." % (a.delta)
        )
    _check_pivot(a, x)

    neighbors = sorted(a.neighbors(x), key=a.c4_key)
    if len(neighbors) != 3:
        raise errors.PreconditionViolated(
            "Transformation 3 needs x=%i with three neighbors." % (x)
        )
    y, v, w = neighbors
    if not (a.vertex(v).saturated and a.vertex(w).saturated):
        raise errors.PreconditionViolated(
            "Transformation 3 needs the neighbors %i and %i of %i to be "
            "saturated." % (v, w, x)
        )

    ret = a.copy()
    vx, vv, vw = ret.vertex(x), ret.vertex(v), ret.vertex(w)
    v_neighbors = ret.neighbors(v)
    w_neighbors = ret.neighbors(w)

    x1 = ret.add_vertex(vx.descendant(1, 1, 0, 0))
    x2 = ret.add_vertex(vx.descendant(2, vx.c1 - 2, 1, vx.c3))
    x3 = ret.add_vertex(vx.descendant(3, 1, 0, 0))
    v1 = ret.add_vertex(vv.descendant(1, 0, 1, 0))
    v2 = ret.add_vertex(vv.descendant(2, vv.c1, 0, vv.c3))
    w1 = ret.add_vertex(vw.descendant(1, 0, 1, 0))
    w2 = ret.add_vertex(vw.descendant(2, vw.c1, 0, vw.c3))
    for old in (x, v, w):
        ret.remove_vertex(old)

    ret.add_edge(x2, y)
    ret.add_edge(x2, x3)
    ret.add_edge(x1, x3)
    ret.add_edge(v1, x1)
    ret.add_edge(w1, x1)
    ret.add_edge(w2, x3)
    ret.add_edge(v2, x2)

    replacement = {v: v2, w: w2}
    for n in v_neighbors:
        if n != x:
            ret.add_edge(v2, replacement.get(n, n))
    for n in w_neighbors:
        if n != x:
            ret.add_edge(w2, replacement.get(n, n))

    _record(ret, "3", x)
    return ret


def _transform_pivot(a, w):
    vw = a.vertex(w)
    strong = [x for x in a.neighbors(w)
              if a.vertex(x).c1 >= 3 and a.vertex(x).c4 < vw.c4]
    strong.sort(key=a.c4_key)

    for x in strong:
        try:
            if a.delta >= 4:
                return transform1(a, w, x)
            return transform1_low_degree(a, w, x)
        except errors.PreconditionViolated as e:
            logging.debug("Transformation 1 with w=%i, x=%i rejected: %s",
                          w, x, e)

    try:
        return transform2(a, w)
    except errors.PreconditionViolated as e:
        logging.debug("Transformation 2 with w=%i rejected: %s", w, e)

    return None


def run_to_fixpoint(a, step_limit=10000, on_step=None):
    """Applies transformations until no saturated vertex is left. on_step is
    called with every intermediate auxiliary graph, the final one included.
    """

    if a.delta < 3:
        raise errors.PreconditionViolated(
            "Transformations need delta >= 3, got %i." % (a.delta)
        )

    current = a
    initial = a.sums()
    steps = 0
    while True:
        saturated = current.saturated()
        if not saturated:
            break

        if steps >= step_limit:
            raise errors.NonTermination(
                "Auxiliary graph still has %i saturated vertices after %i "
                "steps." % (len(saturated), steps)
            )

        following = None
        for w in saturated:
            following = _transform_pivot(current, w)
            if following is not None:
                break
            logging.warning("No transformation applies to saturated vertex "
                            "%i, trying the next one.", w)

        if following is None:
            raise errors.PreconditionViolated(
                "No transformation applies to any of the saturated vertices "
                "%s." % (saturated)
            )

        current = following
        steps += 1
        if on_step is not None:
            on_step(current)

    if current.sums() != initial:
        logging.warning("Coordinate sums changed from %s to %s.", initial,
                        current.sums())

    logging.debug("Fixpoint reached after %i steps: %r", steps, current)
    return current


def a_blocks(a):
    positive = [v for v, label in a.vertices.items() if label.c1 > 0]
    return decomposition.closed_component_neighborhoods(a.graph, positive)


PropertyResult = collections.namedtuple("PropertyResult",
                                        ["prop", "passed", "witness"])


class PropertyCheck(object):
    def __init__(self, results):
        self.results = results

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    def __getitem__(self, prop):
        for result in self.results:
            if result.prop == prop:
                return result
        raise KeyError(prop)

    def failures(self):
        return [result for result in self.results if not result.passed]

    def __repr__(self):
        return "PropertyCheck(%s)" % (", ".join(
            "%s=%s" % (r.prop, "ok" if r.passed else "FAIL")
            for r in self.results
        ))


def _witness_vertex(label):
    return label.c3 == 1 or (label.c1 == 0 and label.c2 == 0)


def _a_path_reach(a, start, c4_limit):
    """Vertices joined to start by A-paths whose vertices all have c4 below
    c4_limit.
    """

    seen = set([start])
    frontier = [start]
    while frontier:
        v = frontier.pop()
        if v != start and a.vertex(v).c1 <= 0:
            continue
        for n in a.neighbors(v):
            if n not in seen and a.vertex(n).c4 < c4_limit:
                seen.add(n)
                frontier.append(n)
    return seen


def check_aux_properties(a):
    labels = a.vertices
    saturated = [v for v, label in labels.items() if label.saturated]

    failed = None
    for c in saturated:
        c4 = labels[c].c4
        smaller = [n for n in a.neighbors(c) if labels[n].c4 < c4]
        if any(labels[d].c1 >= 3 for d in smaller):
            continue
        if sum(1 for e in smaller if labels[e].c1 > 0) >= 2:
            continue
        failed = c
        break
    results = [PropertyResult("saturated-neighbors", failed is None,
                               failed)]

    failed = None
    for v, label in labels.items():
        if label.c1 < 3:
            continue
        neighbors = a.neighbors(v)
        if not any(labels[n].c2 == 1 for n in neighbors):
            continue
        if not any(labels[b].c4 <= label.c4 for b in neighbors):
            failed = v
            break
    results.append(PropertyResult("strong-vertex-order", failed is None,
                                  failed))

    failed = None
    for c in saturated:
        c4 = labels[c].c4
        for v in a.neighbors(c):
            if labels[v].c1 <= 0 or not labels[v].c4 < c4:
                continue
            reached = _a_path_reach(a, v, c4)
            if sum(1 for e in reached if _witness_vertex(labels[e])) < 2:
                failed = (c, v)
                break
        if failed is not None:
            break
    results.append(PropertyResult("excess-paths", failed is None,
                                  failed))

    failed = None
    for block in a_blocks(a):
        if sum(1 for v in block if _witness_vertex(labels[v])) < 2:
            failed = sorted(block)
            break
    results.append(PropertyResult("block-witnesses", failed is None,
                                  failed))

    return PropertyCheck(results)


class BlockAudit(object):
    def __init__(self, block, sums, inner, boundary, delta):
        self.block = block
        self.s1, self.s2, self.s3 = sums
        self.inner = inner
        self.boundary = boundary
        self.delta = delta

    @property
    def inequality_holds(self):
        return self.s2 - self.s3 <= (self.delta - 2) * self.s1

    @property
    def counting_holds(self):
        return self.boundary <= (self.delta - 2) * self.inner + 2

    def __repr__(self):
        return "BlockAudit(%s, sums=%s, inner=%i, boundary=%i)" % \
            (sorted(self.block), (self.s1, self.s2, self.s3), self.inner,
             self.boundary)


def block_audit(a, delta=None):
    """Audits every A-block against the carried delta unless another one is
    given. A graph whose degree grew past its delta is logged, AuxRun
    reports it as a failure.
    """

    if delta is None:
        delta = a.delta
    if a.max_degree() > a.delta:
        logging.warning("Auxiliary graph has degree %i above its carried "
                        "delta %i.", a.max_degree(), a.delta)

    labels = a.vertices
    ret = []
    for block in a_blocks(a):
        sums = (sum(labels[v].c1 for v in block),
                sum(labels[v].c2 for v in block),
                sum(labels[v].c3 for v in block))
        inner = sum(1 for v in block if labels[v].c1 > 0)
        ret.append(BlockAudit(block, sums, inner, len(block) - inner, delta))
    return ret


class LowDegreeCheck(object):
    def __init__(self, delta, report):
        self.delta = delta
        self.report = report

    @property
    def holds(self):
        if self.delta <= 1:
            return self.report.coop == 0 and self.report.ce <= self.report.dc
        return self.report.coop <= self.report.dc


def low_degree_check(g, p, u, cache=None, report=None):
    if g.max_degree > 2:
        raise errors.PreconditionViolated(
            "The closed form needs maximum degree at most 2, graph '%s' has "
            "%i." % (g.label, g.max_degree)
        )
    if report is None:
        report = decomposition.cooperation(p, u, cache, with_m_values=False)
    return LowDegreeCheck(g.max_degree, report)


StepCheck = collections.namedtuple("StepCheck",
                                   ["record", "properties", "max_degree"])


class AuxRun(object):
    """Everything the aux command and the transform sweep report for one
    (G, P, U) instance. step_checks holds the property check of every
    intermediate graph in step order.
    """

    def __init__(self, a0, final, properties, audits, step_checks=None):
        self.a0 = a0
        self.final = final
        self.properties = properties
        self.audits = audits
        self.step_checks = step_checks if step_checks is not None else []

    @property
    def steps(self):
        return len(self.final.trace)

    @property
    def sums_preserved(self):
        return self.a0.sums() == self.final.sums()

    def property_failures(self):
        """(where, PropertyResult) for every failed property of A_0 and of
        the graph after each step.
        """

        ret = [("A_0", result) for result in self.properties.failures()]
        for check in self.step_checks:
            where = "step %i (kind %s, pivot %i)" % \
                (check.record.step, check.record.kind, check.record.pivot)
            ret.extend((where, result)
                       for result in check.properties.failures())
        return ret

    @property
    def properties_hold(self):
        return not self.property_failures()

    @property
    def max_degree(self):
        return max([self.a0.max_degree(), self.final.max_degree()] +
                   [check.max_degree for check in self.step_checks])

    @property
    def degree_ok(self):
        return self.max_degree <= self.a0.delta

    @property
    def ok(self):
        return self.sums_preserved and self.final.global_inequality() and \
            not self.final.saturated() and self.degree_ok and \
            all(audit.inequality_holds and audit.counting_holds
                for audit in self.audits)


def run_instance(g, p, u, step_limit=10000, cache=None):
    a0 = build_a0(g, p, u, cache)
    step_checks = []

    def on_step(a):
        step_checks.append(StepCheck(a.trace[-1], check_aux_properties(a),
                                     a.max_degree()))

    final = run_to_fixpoint(a0, step_limit, on_step)
    return AuxRun(a0, final, check_aux_properties(a0), block_audit(final),
                  step_checks)
