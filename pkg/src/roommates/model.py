"""Core data model: agents, weak-order preferences, profiles, matchings.

Agents are plain non-negative ints.  A preference order is a sequence of
tie groups over the agents its owner finds acceptable (best group first);
an agent may list itself.  A profile bundles one order per agent and
guarantees that acceptability is symmetric.

Top-level profiles use dense ids ``0..n-1``.  Profiles produced by
:func:`restrict` keep the surviving agents' original ids, so sub-profiles
stay comparable with the instance they came from.
"""

from __future__ import annotations

import logging
import warnings
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from .errors import (
    AsymmetricAcceptability,
    DuplicateInOrder,
    IsolatedAgent,
    OddAgentCount,
)

logger = logging.getLogger(__name__)

AgentId = int

RawOrder = Sequence[Iterable[AgentId]]


class Comparison(Enum):
    """Outcome of comparing two agents inside one preference order."""

    STRICTLY_BETTER = "strictly_better"
    TIED = "tied"
    STRICTLY_WORSE = "strictly_worse"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PreferenceOrder:
    """Ranked tie groups of a single agent, most preferred group first."""

    owner: AgentId
    groups: tuple[frozenset[AgentId], ...]

    @cached_property
    def ranks(self) -> dict[AgentId, int]:
        """Map each acceptable agent to the index of its tie group."""
        return {member: g for g, group in enumerate(self.groups) for member in group}

    @cached_property
    def acceptable(self) -> frozenset[AgentId]:
        """All agents this owner ranks, possibly including itself."""
        return frozenset(self.ranks)

    @property
    def has_tie(self) -> bool:
        return any(len(group) > 1 for group in self.groups)

    def rank_of(self, x: AgentId) -> int | None:
        return self.ranks.get(x)

    def without(self, removed: frozenset[AgentId]) -> "PreferenceOrder":
        """Copy of this order with ``removed`` deleted and empty groups dropped."""
        kept = tuple(
            frozenset(g - removed) for g in self.groups if not g <= removed
        )
        return PreferenceOrder(self.owner, tuple(g for g in kept if g))


def _make_order(owner: AgentId, raw: RawOrder) -> PreferenceOrder:
    """Build a PreferenceOrder from raw groups, rejecting duplicate entries."""
    seen: set[AgentId] = set()
    groups: list[frozenset[AgentId]] = []
    for raw_group in raw:
        group = frozenset(int(x) for x in raw_group)
        if not group:
            continue
        for member in sorted(group):
            if member in seen:
                raise DuplicateInOrder(owner, member)
            seen.add(member)
        groups.append(group)
    return PreferenceOrder(owner, tuple(groups))


@dataclass(frozen=True)
class Profile:
    """A collection of preference orders, one per agent.

    Construct through :func:`validate_profile` (dense, fully checked) or
    :func:`build_profile` (sparse ids allowed, isolation tolerated); both
    enforce symmetric acceptability.
    """

    orders: Mapping[AgentId, PreferenceOrder]
    labels: Mapping[AgentId, str] | None = field(default=None, compare=False)

    @cached_property
    def agents(self) -> tuple[AgentId, ...]:
        return tuple(sorted(self.orders))

    @cached_property
    def agent_set(self) -> frozenset[AgentId]:
        return frozenset(self.orders)

    @property
    def n_agents(self) -> int:
        return len(self.orders)

    def order(self, i: AgentId) -> PreferenceOrder:
        try:
            return self.orders[i]
        except KeyError:
            raise ValueError(f"no agent {i} in this profile") from None

    def label(self, i: AgentId) -> str:
        """Display label of agent ``i`` (its id when no labels are attached)."""
        if self.labels and i in self.labels:
            return self.labels[i]
        return str(i)


@dataclass(frozen=True)
class AcceptabilityGraph:
    """Undirected loop-free graph of mutual acceptability."""

    vertices: tuple[AgentId, ...]
    edges: tuple[tuple[AgentId, AgentId], ...]

    @cached_property
    def edge_set(self) -> frozenset[tuple[AgentId, AgentId]]:
        return frozenset(self.edges)

    @cached_property
    def neighbors(self) -> dict[AgentId, tuple[AgentId, ...]]:
        adj: dict[AgentId, list[AgentId]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def has_edge(self, x: AgentId, y: AgentId) -> bool:
        return (min(x, y), max(x, y)) in self.edge_set


@dataclass(frozen=True)
class Matching:
    """A set of disjoint unordered agent pairs."""

    pairs: tuple[tuple[AgentId, AgentId], ...]

    def __init__(self, pairs: Iterable[tuple[AgentId, AgentId] | Iterable[AgentId]] = ()):
        normalized = []
        for pair in pairs:
            a, b = pair
            if a == b:
                raise ValueError(f"an agent cannot be matched with itself: {a}")
            normalized.append((min(a, b), max(a, b)))
        normalized.sort()
        seen: set[AgentId] = set()
        for a, b in normalized:
            if a in seen or b in seen:
                raise ValueError(f"pair ({a}, {b}) overlaps another pair")
            seen.update((a, b))
        object.__setattr__(self, "pairs", tuple(normalized))

    @cached_property
    def partner_map(self) -> dict[AgentId, AgentId]:
        partners: dict[AgentId, AgentId] = {}
        for a, b in self.pairs:
            partners[a] = b
            partners[b] = a
        return partners

    @cached_property
    def matched_agents(self) -> frozenset[AgentId]:
        return frozenset(self.partner_map)

    def partner(self, x: AgentId) -> AgentId | None:
        """Partner of ``x``, or None when ``x`` is unmatched."""
        return self.partner_map.get(x)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _check_symmetry(orders: Mapping[AgentId, PreferenceOrder]) -> None:
    for i in sorted(orders):
        for j in sorted(orders[i].acceptable):
            if j == i:
                continue
            if j not in orders or i not in orders[j].acceptable:
                raise AsymmetricAcceptability(i, j)


def build_profile(
    orders: Mapping[AgentId, RawOrder],
    *,
    labels: Mapping[AgentId, str] | None = None,
) -> Profile:
    """Assemble a profile from per-agent raw tie groups.

    Ids may be sparse, and agents acceptable to nobody are tolerated (they
    occur legitimately in restricted and reduced instances).  Symmetric
    acceptability and duplicate-free orders are still enforced.
    """
    built = {int(i): _make_order(int(i), raw) for i, raw in orders.items()}
    _check_symmetry(built)
    return Profile(orders=built, labels=dict(labels) if labels else None)


def validate_profile(
    raw_orders: Sequence[RawOrder],
    *,
    labels: Mapping[AgentId, str] | None = None,
) -> Profile:
    """Validate dense raw orders (agent ``i`` = ``raw_orders[i]``) into a Profile.

    Raises the error for the first violated invariant: DuplicateInOrder,
    AsymmetricAcceptability, or IsolatedAgent.  An odd number of agents is
    legal but unusual, so it is flagged as an :class:`OddAgentCount` warning
    rather than an error.
    """
    if not raw_orders:
        raise ValueError("raw_orders must be non-empty")
    profile = build_profile({i: raw for i, raw in enumerate(raw_orders)}, labels=labels)
    wanted_by_someone: set[AgentId] = set()
    for j in profile.agents:
        wanted_by_someone.update(profile.orders[j].acceptable - {j})
    for i in profile.agents:
        if i not in wanted_by_someone:
            raise IsolatedAgent(i)
    if profile.n_agents % 2 == 1:
        warnings.warn(OddAgentCount(f"profile has an odd number of agents ({profile.n_agents})"))
    return profile


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def compare(profile: Profile, i: AgentId, x: AgentId, y: AgentId) -> Comparison:
    """How agent ``i`` ranks ``x`` against ``y``.

    INCOMPARABLE when either is outside ``i``'s acceptable set; otherwise the
    verdict follows the tie-group indices (comparing an agent to itself is
    TIED by reflexivity).
    """
    ranks = profile.order(i).ranks
    rx = ranks.get(x)
    ry = ranks.get(y)
    if rx is None or ry is None:
        return Comparison.INCOMPARABLE
    if rx < ry:
        return Comparison.STRICTLY_BETTER
    if rx > ry:
        return Comparison.STRICTLY_WORSE
    return Comparison.TIED


def most_acceptable_set(profile: Profile, i: AgentId) -> frozenset[AgentId]:
    """Members of ``i``'s best tie group once ``i`` itself is set aside."""
    for group in profile.order(i).groups:
        others = group - {i}
        if others:
            return frozenset(others)
    return frozenset()


def acceptability_graph(profile: Profile) -> AcceptabilityGraph:
    """The graph with an edge wherever two distinct agents rank each other."""
    edges = []
    orders = profile.orders
    for i in profile.agents:
        for j in orders[i].acceptable:
            if j > i and j in orders and i in orders[j].acceptable:
                edges.append((i, j))
    edges.sort()
    return AcceptabilityGraph(vertices=profile.agents, edges=tuple(edges))


def restrict(profile: Profile, removed: Iterable[AgentId]) -> Profile:
    """The profile on the remaining agents, with ``removed`` deleted everywhere.

    Surviving agents keep their ids.  Agents whose acceptable set (beyond
    themselves) becomes empty are kept — deleting them too would change which
    agents exist — but the event is logged so callers notice.
    """
    gone = frozenset(removed)
    unknown = gone - profile.agent_set
    if unknown:
        raise ValueError(f"cannot remove unknown agents: {sorted(unknown)}")
    kept_orders = {
        i: order.without(gone)
        for i, order in profile.orders.items()
        if i not in gone
    }
    emptied = sorted(
        i for i, order in kept_orders.items() if not (order.acceptable - {i})
    )
    if emptied:
        logger.warning(
            "restrict left agents %s with empty acceptable sets", emptied
        )
    labels = None
    if profile.labels:
        labels = {i: lab for i, lab in profile.labels.items() if i not in gone}
    return Profile(orders=kept_orders, labels=labels)
