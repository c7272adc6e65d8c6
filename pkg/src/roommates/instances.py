"""Named example profiles and random instance generators.

The fixtures are small hand-built profiles exercising specific behaviors
(multiple stable matchings, none at all, crossing structure with and
without ties).  Their agents carry the one-based labels they were
originally written with; ids are zero-based like everywhere else.

The generators are deterministic in their seed and verify their own
output before returning it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coloring import Graph
from .errors import InternalInvariantViolation, UnknownFixture
from .model import AgentId, Profile, build_profile
from .structure import WitnessOrder, is_single_peaked_wrt

_FIXTURES: dict[str, dict[AgentId, list[list[AgentId]]]] = {
    # Two stable matchings; agent 2 is indifferent between 1 and 3.
    "example1": {
        0: [[0], [1], [2], [3]],
        1: [[1], [2], [0], [3]],
        2: [[2], [1, 3], [0]],
        3: [[3], [2], [1], [0]],
    },
    # Same but agent 2 now prefers 0 to 1: no stable matching survives.
    "example1_modified": {
        0: [[0], [1], [2], [3]],
        1: [[1], [2], [0], [3]],
        2: [[2], [0], [1], [3]],
        3: [[3], [2], [1], [0]],
    },
    # Incomplete; stable matchings exist but none of them is perfect.
    "p1": {
        0: [[0], [5], [4]],
        1: [[1], [4], [5]],
        2: [[2], [4], [5]],
        3: [[3], [4], [5]],
        4: [[4], [0], [1], [2], [3]],
        5: [[5], [3], [1], [2], [0]],
    },
    # Incomplete with an odd acceptability structure; used for graph tests.
    "p2": {
        0: [[0], [1], [2], [3]],
        1: [[1], [3], [0]],
        2: [[2], [0], [3]],
        3: [[3], [2], [1], [0]],
    },
    # A preference cycle: no stable matching at all.
    "p3": {
        0: [[0], [4], [1]],
        1: [[1], [0], [2]],
        2: [[2], [1], [3]],
        3: [[3], [2], [4]],
        4: [[4], [3], [0], [5]],
        5: [[5], [4]],
    },
    # Complete, strict, narcissistic; single-crossing w.r.t. 0,1,2,3.
    "fig2a": {
        0: [[0], [1], [2], [3]],
        1: [[1], [2], [3], [0]],
        2: [[2], [1], [0], [3]],
        3: [[3], [2], [1], [0]],
    },
    # Complete with one tie; has a single-crossing tie-break w.r.t.
    # 0,1,2,3 even though the tie-sensitive check fails on that axis.
    "fig2b": {
        0: [[0, 1], [2], [3]],
        1: [[0], [1], [3], [2]],
        2: [[3], [1], [2], [0]],
        3: [[3], [2], [1], [0]],
    },
}

FIXTURE_NAMES = tuple(sorted(_FIXTURES))


def fixture(name: str) -> Profile:
    """One of the named example profiles, labels included."""
    try:
        raw = _FIXTURES[name]
    except KeyError:
        raise UnknownFixture(name, FIXTURE_NAMES) from None
    labels = {i: str(i + 1) for i in raw}
    return build_profile(raw, labels=labels)


# ---------------------------------------------------------------------------
# Random generation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for :func:`gen_narcissistic_sp`."""

    n_agents: int
    allow_ties: bool = False
    tie_probability: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n_agents < 2 or self.n_agents % 2:
            raise ValueError("n_agents must be even and positive")
        if not 0.0 <= self.tie_probability <= 1.0:
            raise ValueError("tie_probability must lie in [0, 1]")


def gen_narcissistic_sp(config: GeneratorConfig) -> tuple[Profile, WitnessOrder]:
    """A complete narcissistic single-peaked profile plus its axis.

    Agents are dropped on distinct integer positions of a line; each
    ranks everyone by distance, itself first.  Exactly the two neighbors
    equidistant from an agent can tie: they stay tied with probability
    ``tie_probability`` when ``allow_ties`` is set, and otherwise the
    nearer-to-the-left one wins.  The axis (agents by ascending position)
    is returned as the witness, and the profile is re-verified against it
    before being handed out.
    """
    rng = random.Random(config.seed)
    n = config.n_agents
    positions = rng.sample(range(10 * n), n)
    pos = {i: positions[i] for i in range(n)}

    orders: dict[AgentId, list[list[AgentId]]] = {}
    for i in range(n):
        by_dist = sorted(range(n), key=lambda j: (abs(pos[j] - pos[i]), pos[j]))
        groups: list[list[AgentId]] = []
        j = 0
        while j < len(by_dist):
            a = by_dist[j]
            if (
                j + 1 < len(by_dist)
                and abs(pos[by_dist[j + 1]] - pos[i]) == abs(pos[a] - pos[i])
            ):
                b = by_dist[j + 1]
                left, right = (a, b) if pos[a] < pos[b] else (b, a)
                if config.allow_ties and rng.random() < config.tie_probability:
                    groups.append(sorted((left, right)))
                else:
                    groups.append([left])
                    groups.append([right])
                j += 2
            else:
                groups.append([a])
                j += 1
        orders[i] = groups

    profile = build_profile(orders)
    axis = WitnessOrder(sorted(range(n), key=pos.__getitem__))
    if not is_single_peaked_wrt(profile, axis):
        raise InternalInvariantViolation("generated profile failed its axis check")
    return profile, axis


def gen_degree3_graph(n: int, edge_probability: float, seed: int = 0) -> Graph:
    """A random graph on n vertices with maximum degree three.

    Candidate edges are visited in lexicographic order; each is kept with
    the given probability unless an endpoint already has three edges.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge_probability must lie in [0, 1]")
    rng = random.Random(seed)
    degree = [0] * n
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if degree[u] >= 3 or degree[v] >= 3:
                continue
            if rng.random() < edge_probability:
                edges.append((u, v))
                degree[u] += 1
                degree[v] += 1
    return Graph(n, edges)
