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

"""Exact optimal pebbling numbers by enumerating distributions in size
order and checking their solvability.
"""

import itertools
import logging
import time

from pebbling_toolkit import errors
from pebbling_toolkit import async_tools
from pebbling_toolkit import bounds
from pebbling_toolkit import graph_core
from pebbling_toolkit import pebbling_engine
from pebbling_toolkit.pebbling_engine import PebbleDistribution


class SolveOptions(object):
    def __init__(self, symmetry="auto", node_budget=0, time_budget=0.0,
                 max_vertices=64, max_pebbles=24, jobs=1,
                 automorphism_limit=20000, chunk_size=256):
        self.symmetry = symmetry
        self.node_budget = node_budget
        self.time_budget = time_budget
        self.max_vertices = max_vertices
        self.max_pebbles = max_pebbles
        self.jobs = jobs
        self.automorphism_limit = automorphism_limit
        self.chunk_size = chunk_size

    @staticmethod
    def from_config(config):
        return SolveOptions(
            symmetry=config.symmetry,
            node_budget=config.node_budget,
            time_budget=config.time_budget,
            max_vertices=config.max_vertices,
            max_pebbles=config.max_pebbles,
            jobs=config.jobs,
            automorphism_limit=config.automorphism_limit
        )


class SolveResult(object):
    def __init__(self, pi_opt, witness, lower_bound_used, stats):
        self.pi_opt = pi_opt
        self.witness = witness
        self.lower_bound_used = lower_bound_used
        self.stats = stats

    def __repr__(self):
        return "SolveResult(pi_opt=%i, witness=%r)" % \
            (self.pi_opt, self.witness)


def _weight_covers_all(g, counts):
    """Every vertex must have sum_u P(u) / 2^d(u, v) >= 1."""

    scale = g.diameter
    occupied = [(u, count) for u, count in enumerate(counts) if count]
    for v in range(g.n):
        total = 0
        for u, count in occupied:
            d = g.dist[u][v]
            if d is not None:
                total += count << (scale - d)
        if total < 1 << scale:
            return False
    return True


def is_solvable(g, p, node_budget=0, stats=None):
    counts = p.counts
    if not _weight_covers_all(g, counts):
        return False

    occupied = p.occupied()
    distances = pebbling_engine.distance_to_set(g, occupied)
    order = sorted((v for v in range(g.n) if counts[v] == 0),
                   key=lambda v: (-distances[v], v))

    for v in order:
        search = pebbling_engine.StateSearch(g, [v], node_budget=node_budget)
        try:
            found = search.run(counts, stop_at=1)
        finally:
            if stats is not None:
                stats["states_expanded"] = \
                    stats.get("states_expanded", 0) + search.nodes
        if found < 1:
            return False
    return True


def canonical(counts, automorphisms):
    """True when counts is the lexicographically largest image under the
    given automorphism group.
    """

    if not automorphisms:
        return True
    n = len(counts)
    for perm in automorphisms:
        image = tuple(counts[perm[i]] for i in range(n))
        if image > counts:
            return False
    return True


def enumerate_distributions(n, size, automorphisms=None, skipped=None):
    for combo in itertools.combinations_with_replacement(range(n), size):
        counts = [0] * n
        for v in combo:
            counts[v] += 1
        counts = tuple(counts)
        if canonical(counts, automorphisms):
            yield counts
        elif skipped is not None:
            skipped[0] += 1


class SolvabilityChunkAction(async_tools.AsyncAction):
    def __init__(self, graph, index, chunk, node_budget=0):
        super(SolvabilityChunkAction, self).__init__()
        self.graph = graph
        self.index = index
        self.chunk = chunk
        self.node_budget = node_budget

    def run(self):
        stats = {"distributions_tested": 0, "states_expanded": 0}
        for counts in self.chunk:
            stats["distributions_tested"] += 1
            p = PebbleDistribution(self.graph, counts)
            if is_solvable(self.graph, p, self.node_budget, stats):
                return counts, stats
        return None, stats

    def __str__(self):
        return "Solvability of chunk %i (%i distributions) on '%s'" % \
            (self.index, len(self.chunk), self.graph.label)


def _initial_lower_bound(g):
    ret = bounds.weight_bound(g)
    if g.family is not None and g.family[0] in ("grid", "torus") and \
            min(g.family[1]) >= 5:
        ret = max(ret, bounds.grid_bound(*g.family[1]))
    return ret


def solve(g, options=None):
    if options is None:
        options = SolveOptions()
    if not g.connected:
        raise errors.DisconnectedGraph(g.label)

    lower = _initial_lower_bound(g)
    upper = min(g.n, 2 ** g.radius())
    stats = {"distributions_tested": 0, "states_expanded": 0,
             "orbits_skipped": 0, "elapsed": 0.0}

    if g.n > options.max_vertices:
        raise errors.BudgetExceeded(
            "Graph '%s' has %i vertices, more than the limit of %i." %
            (g.label, g.n, options.max_vertices),
            lower=lower, upper=upper, stats=stats
        )

    automorphisms = None
    if options.symmetry == "auto":
        automorphisms = graph_core.automorphisms(g,
                                                 options.automorphism_limit)

    start = time.time()
    jobs = max(1, options.jobs)
    for size in range(lower, upper + 1):
        if size > options.max_pebbles:
            raise errors.BudgetExceeded(
                "Size %i is above the pebble limit of %i." %
                (size, options.max_pebbles),
                lower=size, upper=upper, stats=stats
            )

        logging.info("Checking distributions of size %i on '%s'.", size,
                     g.label)
        skipped = [0]
        distributions = enumerate_distributions(g.n, size, automorphisms,
                                                skipped)
        index = 0
        witness = None
        while witness is None:
            batch = []
            for _ in range(jobs):
                chunk = list(itertools.islice(distributions,
                                              options.chunk_size))
                if not chunk:
                    break
                remaining = 0
                if options.node_budget:
                    remaining = max(1, options.node_budget -
                                    stats["states_expanded"])
                batch.append(SolvabilityChunkAction(g, index, chunk,
                                                    remaining))
                index += 1
            if not batch:
                break

            try:
                results = async_tools.run_actions(batch, jobs)
            except errors.BudgetExceeded:
                stats["elapsed"] = time.time() - start
                raise errors.BudgetExceeded(
                    "Node budget of %i exhausted at size %i." %
                    (options.node_budget, size),
                    lower=size, upper=upper, stats=stats
                )

            for hit, chunk_stats in results:
                stats["distributions_tested"] += \
                    chunk_stats["distributions_tested"]
                stats["states_expanded"] += chunk_stats["states_expanded"]
                if witness is None and hit is not None:
                    witness = hit

            stats["elapsed"] = time.time() - start
            if witness is not None:
                break
            if options.node_budget and \
                    stats["states_expanded"] > options.node_budget:
                raise errors.BudgetExceeded(
                    "Node budget of %i exhausted at size %i." %
                    (options.node_budget, size),
                    lower=size, upper=upper, stats=stats
                )
            if options.time_budget and \
                    stats["elapsed"] > options.time_budget:
                raise errors.BudgetExceeded(
                    "Time budget of %s seconds exhausted at size %i." %
                    (options.time_budget, size),
                    lower=size, upper=upper, stats=stats
                )

        stats["orbits_skipped"] += skipped[0]
        if witness is not None:
            distribution = PebbleDistribution(g, witness)
            if not is_solvable(g, distribution):
                raise errors.PreconditionViolated(
                    "Witness %r failed the solvability re-check." %
                    (distribution)
                )
            logging.info("Optimal pebbling number of '%s' is %i.", g.label,
                         size)
            return SolveResult(size, distribution, lower, stats)

        logging.debug("No solvable distribution of size %i on '%s'.", size,
                      g.label)

    raise errors.PreconditionViolated(
        "No solvable distribution up to the upper bound %i on '%s'." %
        (upper, g.label)
    )


def minimality_check(g, witness):
    """True when removing any single pebble leaves an unsolvable
    distribution.
    """

    for v in witness.occupied():
        counts = list(witness.counts)
        counts[v] -= 1
        if is_solvable(g, PebbleDistribution(g, counts)):
            return False
    return True
