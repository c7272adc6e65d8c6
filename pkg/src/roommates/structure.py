"""Structural properties of profiles: completeness, ties, narcissism,
single-peakedness, single-crossingness (plain and tie-sensitive), and
worst-restrictedness.

The ``is_*_wrt`` checks verify a property against a supplied axis; the
``find_*_order`` functions search for such an axis exhaustively and are
meant for small instances only.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from .errors import TieGroupTooLarge, TiesUnsupported, TooManyAgents
from .model import AgentId, PreferenceOrder, Profile

OrderLike = "WitnessOrder | Sequence[AgentId]"


@dataclass(frozen=True)
class WitnessOrder:
    """A linear order over all agents of a profile, e.g. a single-peaked axis."""

    sequence: tuple[AgentId, ...]

    def __init__(self, sequence: Sequence[AgentId]):
        seq = tuple(int(a) for a in sequence)
        if len(set(seq)) != len(seq):
            raise ValueError("a witness order must not repeat agents")
        object.__setattr__(self, "sequence", seq)

    @cached_property
    def positions(self) -> dict[AgentId, int]:
        return {a: p for p, a in enumerate(self.sequence)}

    def reversed(self) -> "WitnessOrder":
        return WitnessOrder(self.sequence[::-1])

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)


@dataclass(frozen=True)
class Verdict:
    """Boolean check outcome plus the first counterexample when it fails."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PropertyReport:
    """Summary of a profile's structural properties, as printed by the CLI."""

    complete: bool
    has_ties: bool
    narcissistic: bool
    single_peaked: Verdict | None = None
    tssc: Verdict | None = None
    single_crossing: bool | None = None
    notes: tuple[str, ...] = field(default=())


def _order_positions(profile: Profile, order: OrderLike) -> dict[AgentId, int]:
    """Positions of a witness order, checked to be a permutation of the agents."""
    seq = tuple(order.sequence if isinstance(order, WitnessOrder) else order)
    if len(seq) != len(set(seq)) or set(seq) != set(profile.agent_set):
        raise ValueError("order must be a permutation of the profile's agents")
    return {a: p for p, a in enumerate(seq)}


# ---------------------------------------------------------------------------
# Definitional checks
# ---------------------------------------------------------------------------

def is_complete(profile: Profile) -> bool:
    """True when every agent ranks every other agent."""
    everyone = profile.agent_set
    return all(
        order.acceptable | {i} == everyone for i, order in profile.orders.items()
    )


def has_ties(profile: Profile) -> bool:
    """True when some tie group holds more than one agent."""
    return any(order.has_tie for order in profile.orders.values())


def is_narcissistic(profile: Profile) -> bool:
    """True when every agent lists itself strictly first in its own order.

    This is the strict reading: an agent that omits itself does not count,
    and neither does one that merely ties itself with its favorite.
    """
    return all(
        order.groups and order.groups[0] == frozenset({i})
        for i, order in profile.orders.items()
    )


# ---------------------------------------------------------------------------
# Single-peakedness w.r.t. a given axis
# ---------------------------------------------------------------------------

def is_single_peaked_wrt(profile: Profile, order: OrderLike) -> Verdict:
    """Check the no-valley condition against a given axis.

    For every agent i and axis-consecutive x < y < z inside i's acceptable
    set, x strictly better than y must imply y at least as good as z.
    Equivalently: no agent's order may strictly improve on both sides of
    any acceptable agent.  On failure the verdict carries the
    lexicographically first violating (agent, x, y, z).

    Runs one linear scan per agent (O(n * |order|) overall).
    """
    pos = _order_positions(profile, order)
    violator = None
    for i in sorted(profile.orders):
        ranks = profile.orders[i].ranks
        if len(ranks) < 3:
            continue
        along = sorted(ranks, key=pos.__getitem__)
        seq = [ranks[a] for a in along]
        best_left = seq[0]
        # best_right[t]: best (smallest) rank strictly right of position t
        best_right = [0] * len(seq)
        running = seq[-1]
        for t in range(len(seq) - 2, -1, -1):
            best_right[t] = running
            running = min(running, seq[t])
        for t in range(1, len(seq) - 1):
            if best_left < seq[t] and best_right[t] < seq[t]:
                violator = i
                break
            best_left = min(best_left, seq[t])
        if violator is not None:
            break
    if violator is None:
        return Verdict(True)
    return Verdict(False, _first_valley_witness(profile.orders[violator], pos))


def _first_valley_witness(
    order: PreferenceOrder, pos: dict[AgentId, int]
) -> tuple[AgentId, AgentId, AgentId, AgentId]:
    """Lexicographically smallest (i, x, y, z) violating the no-valley rule."""
    ranks = order.ranks
    members = sorted(ranks)
    for x in members:
        for y in members:
            if y == x or pos[x] >= pos[y] or ranks[x] >= ranks[y]:
                continue
            for z in members:
                if z != x and z != y and pos[y] < pos[z] and ranks[z] < ranks[y]:
                    return (order.owner, x, y, z)
    raise AssertionError("caller guarantees a violation exists")


# ---------------------------------------------------------------------------
# Crossing structure w.r.t. a given voter axis
# ---------------------------------------------------------------------------

_A, _T, _B = "A", "T", "B"


def _pair_relations(
    profile: Profile, pos: dict[AgentId, int]
) -> dict[tuple[AgentId, AgentId], list[str]]:
    """For each co-ranked agent pair, the relation per voter in axis order."""
    relations: dict[tuple[AgentId, AgentId], list[tuple[int, str]]] = {}
    for v, order in profile.orders.items():
        ranks = order.ranks
        members = sorted(ranks)
        p = pos[v]
        for idx, x in enumerate(members):
            rx = ranks[x]
            for y in members[idx + 1 :]:
                ry = ranks[y]
                rel = _A if rx < ry else _B if rx > ry else _T
                relations.setdefault((x, y), []).append((p, rel))
    return {
        pair: [rel for _, rel in sorted(seq)] for pair, seq in relations.items()
    }


def _collapse(rels: list[str]) -> list[str]:
    runs = []
    for r in rels:
        if not runs or runs[-1] != r:
            runs.append(r)
    return runs


def _is_subsequence(runs: list[str], pattern: str) -> bool:
    it = iter(pattern)
    return all(r in it for r in runs)


def is_tssc_wrt(profile: Profile, order: OrderLike) -> Verdict:
    """Check tie-sensitive single-crossingness against a voter axis.

    For each unordered pair {x, y}, the voters ranking both must appear
    along the axis as a strict-x block, then a tied block, then a strict-y
    block — or the mirror image.  Voters ranking at most one of the two are
    unconstrained.  On failure the verdict carries the first violating pair
    in (min, max) order.
    """
    pos = _order_positions(profile, order)
    relations = _pair_relations(profile, pos)
    for pair in sorted(relations):
        runs = _collapse(relations[pair])
        if not (_is_subsequence(runs, "ATB") or _is_subsequence(runs, "BTA")):
            return Verdict(False, pair)
    return Verdict(True)


def is_trivially_crossing(profile: Profile) -> Verdict:
    """Does every co-ranked pair have agreeing voters, or at most two?

    A pair with unanimous voters contributes one block to any axis, and a
    pair with at most two voters can never produce three blocks — so a
    profile passing this check is tie-sensitively single-crossing with
    respect to *every* order of its agents.  On failure the verdict
    carries the first pair (in (min, max) order) with three or more
    disagreeing voters.
    """
    by_pair: dict[tuple[AgentId, AgentId], set[str]] = {}
    counts: dict[tuple[AgentId, AgentId], int] = {}
    for order in profile.orders.values():
        ranks = order.ranks
        members = sorted(ranks)
        for idx, x in enumerate(members):
            rx = ranks[x]
            for y in members[idx + 1 :]:
                ry = ranks[y]
                rel = _A if rx < ry else _B if rx > ry else _T
                by_pair.setdefault((x, y), set()).add(rel)
                counts[(x, y)] = counts.get((x, y), 0) + 1
    for pair in sorted(by_pair):
        if len(by_pair[pair]) > 1 and counts[pair] > 2:
            return Verdict(False, pair)
    return Verdict(True)


def _strict_crossing_ok(profile: Profile, pos: dict[AgentId, int]) -> bool:
    """Single-crossing test for a profile without ties."""
    for rels in _pair_relations(profile, pos).values():
        runs = _collapse(rels)
        if len(runs) > 2:
            return False
    return True


def break_ties_fixed(profile: Profile, tiebreak: OrderLike) -> Profile:
    """Resolve every tie by one global order, yielding a linear extension.

    Within each tie group, x comes before y exactly when x precedes y in
    ``tiebreak``.  Profiles without ties come back equal to the input.
    """
    pos = _order_positions(profile, tiebreak)
    new_orders = {}
    for i, order in profile.orders.items():
        groups: list[frozenset[AgentId]] = []
        for group in order.groups:
            for member in sorted(group, key=pos.__getitem__):
                groups.append(frozenset({member}))
        new_orders[i] = PreferenceOrder(i, tuple(groups))
    return Profile(orders=new_orders, labels=profile.labels)


def is_sc_wrt(
    profile: Profile, order: OrderLike, *, max_tie_group: int = 6
) -> bool:
    """Is some per-agent linear extension single-crossing w.r.t. ``order``?

    Tries one cheap sufficient check first: break all ties by ascending id
    and test the resulting strict profile.  If that fails, searches the tie
    resolutions exactly, voter by voter along the axis.  The exact search
    refuses tie groups larger than ``max_tie_group`` (TieGroupTooLarge)
    rather than guessing.
    """
    pos = _order_positions(profile, order)
    if not has_ties(profile):
        return _strict_crossing_ok(profile, pos)
    tiebroken = break_ties_fixed(profile, WitnessOrder(sorted(profile.agent_set)))
    if _strict_crossing_ok(tiebroken, pos):
        return True
    for i in sorted(profile.orders):
        for group in profile.orders[i].groups:
            if len(group) > max_tie_group:
                raise TieGroupTooLarge(i, len(group), max_tie_group)
    return _sc_exact(profile, pos)


def _sc_exact(profile: Profile, pos: dict[AgentId, int]) -> bool:
    """Exact single-crossing decision by backtracking over tie resolutions.

    Voters are processed along the axis; each maintains per-pair run states
    ((first, last) relation of the collapsed sequence), and a tie group's
    permutations are only explored as far as the states admit.  Exponential
    in the worst case — callers go through :func:`is_sc_wrt`, which guards
    group sizes and handles the common cases cheaply.
    """
    voters = sorted(profile.orders, key=pos.__getitem__)
    states: dict[tuple[AgentId, AgentId], tuple[str, str]] = {}

    def apply_rel(x: AgentId, y: AgentId, rel: str, trail: list) -> bool:
        pair = (x, y) if x < y else (y, x)
        if y < x:
            rel = _A if rel == _B else _B
        state = states.get(pair)
        if state is None:
            trail.append((pair, None))
            states[pair] = (rel, rel)
            return True
        first, last = state
        if rel == last:
            return True
        if first != last:
            return False  # a third run would appear
        trail.append((pair, state))
        states[pair] = (first, rel)
        return True

    def undo(trail: list) -> None:
        for pair, old in reversed(trail):
            if old is None:
                del states[pair]
            else:
                states[pair] = old

    def place_groups(v: AgentId, groups: tuple[frozenset[AgentId], ...], g: int) -> bool:
        if g == len(groups):
            return next_voter_step()
        group = sorted(groups[g])
        if len(group) == 1:
            return place_groups(v, groups, g + 1)
        for perm in permutations(group):
            trail: list = []
            ok = True
            for a_idx in range(len(perm)):
                for b_idx in range(a_idx + 1, len(perm)):
                    if not apply_rel(perm[a_idx], perm[b_idx], _A, trail):
                        ok = False
                        break
                if not ok:
                    break
            if ok and place_groups(v, groups, g + 1):
                return True
            undo(trail)
        return False

    remaining = list(voters)

    def next_voter_step() -> bool:
        if not remaining:
            return True
        v = remaining.pop(0)
        order = profile.orders[v]
        ranks = order.ranks
        members = sorted(ranks)
        trail: list = []
        ok = True
        for idx, x in enumerate(members):
            rx = ranks[x]
            for y in members[idx + 1 :]:
                ry = ranks[y]
                if rx == ry:
                    continue  # resolved by the group permutations below
                if not apply_rel(x, y, _A if rx < ry else _B, trail):
                    ok = False
                    break
            if not ok:
                break
        if ok and place_groups(v, order.groups, 0):
            return True
        undo(trail)
        remaining.insert(0, v)
        return False

    return next_voter_step()


# ---------------------------------------------------------------------------
# Exhaustive witness-order search
# ---------------------------------------------------------------------------

DEFAULT_SEARCH_AGENTS = 10


def find_single_peaked_order(
    profile: Profile, *, max_agents: int = DEFAULT_SEARCH_AGENTS
) -> WitnessOrder | None:
    """Lexicographically smallest single-peaked axis, or None.

    Exhaustive search over agent orders, pruned by the placement rule that
    an agent's strictly-better set must lie entirely on one side of it.
    Refuses profiles above ``max_agents`` (TooManyAgents).
    """
    agents = profile.agents
    if len(agents) > max_agents:
        raise TooManyAgents(len(agents), max_agents)
    if not agents:
        return WitnessOrder(())
    index = {a: i for i, a in enumerate(agents)}

    # better_masks[y]: for each voter, the agents it strictly prefers to y
    # (as an index bitmask), skipping empty sets.
    better_masks: list[list[int]] = [[] for _ in agents]
    constrained = 0
    for order in profile.orders.values():
        ranks = order.ranks
        members = sorted(ranks, key=ranks.__getitem__)
        mask = 0
        prev_rank = None
        prefix = 0
        for a in members:
            if prev_rank is not None and ranks[a] > prev_rank:
                prefix = mask
            if prefix:
                better_masks[index[a]].append(prefix)
                constrained |= prefix | (1 << index[a])
            prev_rank = ranks[a]
            mask |= 1 << index[a]

    full = (1 << len(agents)) - 1
    dead: set[int] = set()
    prefix_order: list[AgentId] = []

    def placeable(y: int, placed: int) -> bool:
        for b in better_masks[y]:
            inter = b & placed
            if inter and inter != b:
                return False
        return True

    def search(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        for y in range(len(agents)):
            bit = 1 << y
            if placed & bit:
                continue
            if not constrained & bit:
                # y is in no constraint: placing it now is safe and smallest.
                prefix_order.append(agents[y])
                if search(placed | bit):
                    return True
                prefix_order.pop()
                break
            if placeable(y, placed):
                prefix_order.append(agents[y])
                if search(placed | bit):
                    return True
                prefix_order.pop()
        dead.add(placed)
        return False

    if search(0):
        return WitnessOrder(prefix_order)
    return None


def find_tssc_order(
    profile: Profile, *, max_agents: int = DEFAULT_SEARCH_AGENTS
) -> WitnessOrder | None:
    """Lexicographically smallest tie-sensitive single-crossing voter axis.

    Same exhaustive regime as :func:`find_single_peaked_order`.  For
    profiles without ties this doubles as a single-crossing search, since
    the two properties coincide there.
    """
    agents = profile.agents
    if len(agents) > max_agents:
        raise TooManyAgents(len(agents), max_agents)
    if not agents:
        return WitnessOrder(())

    # Pair constraints: voters of each co-ranked pair with their relations.
    by_pair: dict[tuple[AgentId, AgentId], dict[AgentId, str]] = {}
    for v, order in profile.orders.items():
        ranks = order.ranks
        members = sorted(ranks)
        for idx, x in enumerate(members):
            rx = ranks[x]
            for y in members[idx + 1 :]:
                ry = ranks[y]
                rel = _A if rx < ry else _B if rx > ry else _T
                by_pair.setdefault((x, y), {})[v] = rel
    # Pairs where every participating voter agrees can never fail.
    pair_rel: list[dict[AgentId, str]] = [
        votes for votes in by_pair.values() if len(set(votes.values())) > 1
    ]
    voter_pairs: dict[AgentId, list[int]] = {a: [] for a in agents}
    for p_idx, votes in enumerate(pair_rel):
        for v in votes:
            voter_pairs[v].append(p_idx)

    # Per-pair state: the collapsed run list seen so far.  A placement is
    # admissible while every such list stays a subsequence of A,T,B or of
    # B,T,A — so at most three runs, with a third only as strict/tie/strict.
    state: list[tuple[str, ...]] = [()] * len(pair_rel)
    prefix_order: list[AgentId] = []

    def try_place(v: AgentId) -> list | None:
        trail = []
        for p_idx in voter_pairs[v]:
            rel = pair_rel[p_idx][v]
            runs = state[p_idx]
            if runs and runs[-1] == rel:
                continue
            extendable = (
                len(runs) < 2
                or (len(runs) == 2 and runs[0] != _T and runs[1] == _T and rel != runs[0])
            )
            if not extendable:
                for idx, old in reversed(trail):
                    state[idx] = old
                return None
            trail.append((p_idx, runs))
            state[p_idx] = runs + (rel,)
        return trail

    def undo(trail: list) -> None:
        for idx, old in reversed(trail):
            state[idx] = old

    free = {a for a in agents if not voter_pairs[a]}

    def search(placed: set[AgentId]) -> bool:
        if len(placed) == len(agents):
            return True
        for v in agents:
            if v in placed:
                continue
            if v in free:
                prefix_order.append(v)
                placed.add(v)
                if search(placed):
                    return True
                placed.discard(v)
                prefix_order.pop()
                return False
            trail = try_place(v)
            if trail is None:
                continue
            prefix_order.append(v)
            placed.add(v)
            if search(placed):
                return True
            placed.discard(v)
            prefix_order.pop()
            undo(trail)
        return False

    if search(set()):
        return WitnessOrder(prefix_order)
    return None


# ---------------------------------------------------------------------------
# Worst-restrictedness
# ---------------------------------------------------------------------------

def is_worst_restricted(profile: Profile) -> bool:
    """True when at most two distinct agents occur as somebody's worst choice.

    Only defined for profiles without ties; tied input raises
    TiesUnsupported rather than guessing at a generalization.
    """
    worsts: set[AgentId] = set()
    for i in sorted(profile.orders):
        order = profile.orders[i]
        if order.has_tie:
            raise TiesUnsupported(i)
        candidates = [next(iter(g)) for g in reversed(order.groups)]
        worst = next((a for a in candidates if a != i), None)
        if worst is not None:
            worsts.add(worst)
    return len(worsts) <= 2


# ---------------------------------------------------------------------------
# Reporting
# ---------------------------------------------------------------------------

def property_report(profile: Profile, order: OrderLike | None = None) -> PropertyReport:
    """Bundle the definitional checks, plus per-axis verdicts when given one."""
    notes: list[str] = []
    single_peaked = tssc = None
    single_crossing: bool | None = None
    if order is not None:
        single_peaked = is_single_peaked_wrt(profile, order)
        tssc = is_tssc_wrt(profile, order)
        try:
            single_crossing = is_sc_wrt(profile, order)
        except TieGroupTooLarge as exc:
            notes.append(str(exc))
    return PropertyReport(
        complete=is_complete(profile),
        has_ties=has_ties(profile),
        narcissistic=is_narcissistic(profile),
        single_peaked=single_peaked,
        tssc=tssc,
        single_crossing=single_crossing,
        notes=tuple(notes),
    )
