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


class PebblingError(RuntimeError):
    """Base class of every error raised on purpose by the toolkit."""


class InvalidSize(PebblingError):
    pass


class InvalidGraph(PebblingError):
    pass


class VertexOutOfRange(PebblingError):
    def __init__(self, vertex, n):
        super(VertexOutOfRange, self).__init__(
            "Vertex %r is out of range, the graph has %i vertices." %
            (vertex, n)
        )
        self.vertex = vertex
        self.n = n


class InsufficientPebbles(PebblingError):
    pass


class NonAdjacent(PebblingError):
    pass


class EmptySet(PebblingError):
    pass


class GraphMismatch(PebblingError):
    def __init__(self):
        super(GraphMismatch, self).__init__(
            "The distributions are defined over different graphs."
        )


class NotDisjoint(PebblingError):
    def __init__(self, shared):
        super(NotDisjoint, self).__init__(
            "The distributions are not disjoint, both occupy %s." %
            (", ".join(str(v) for v in sorted(shared)))
        )
        self.shared = frozenset(shared)


class UnitTooSmall(PebblingError):
    pass


class PreconditionViolated(PebblingError):
    pass


class NonTermination(PebblingError):
    pass


class DisconnectedGraph(PebblingError):
    def __init__(self, label):
        super(DisconnectedGraph, self).__init__(
            "Graph '%s' is not connected." % (label)
        )


class NotSolvable(PebblingError):
    pass


class DeltaTooSmall(PebblingError):
    pass


class GraphTooSmall(PebblingError):
    pass


class ParseError(PebblingError):
    pass


class WriteFailure(PebblingError):
    pass


class BudgetExceeded(PebblingError):
    """The search ran out of its node or time budget. lower and upper form
    the certified interval for the quantity being searched for (upper may be
    None when nothing is known).
    """

    def __init__(self, message, lower=None, upper=None, stats=None):
        super(BudgetExceeded, self).__init__(message)
        self.lower = lower
        self.upper = upper
        self.stats = stats if stats is not None else {}
