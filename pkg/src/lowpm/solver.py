"""Minimum-|weight| perfect matchings: exchange local search and exact oracle.

The local move replaces ``r`` edges of the current perfect matching with a
different perfect matching on the same ``2r`` vertices (their symmetric
difference is a union of alternating cycles).  Moves with r in {2, 3, 4}
suffice in practice to drive the weight to its minimum on every instance we
can oracle-check; the search escalates 2 -> 3 -> 4 and only looks at a
larger r when no smaller improving move exists.

Plateaus matter: an optimal matching is often reachable only through
weight-preserving exchanges, so the search walks plateaus under a sideways
budget with a visited set of canonical matchings to prevent cycling.

The oracle computes the exact minimum of |weight| over all perfect
matchings by recursing on the smallest unmatched vertex, memoizing the set
of achievable weights per remaining vertex set (bitmask keyed).  The
witness is reconstructed greedily afterwards and is the lexicographically
smallest optimal matching, which pins oracle output for a given instance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import blossom
from .core import (
    MatchingError,
    Pair,
    ParameterError,
    PerfectMatching,
    SignedCompleteGraph,
    sigma_matching,
    sign_subgraph,
)
from .rng import SplitMix64

DEFAULT_ORACLE_LIMIT = 16
MAX_ORACLE_LIMIT = 20

R_LEVELS = (2, 3, 4)


class OracleLimitError(ParameterError):
    """Instance order exceeds the enumeration limit of the oracle."""


@dataclass(frozen=True)
class Exchange:
    """Replace ``removed`` (edges of the current matching) by ``added``.

    Both sides are canonical pair tuples on the same 2r vertices, edge
    disjoint from each other; ``delta`` is the weight shift
    sigma(added) - sigma(removed) and is always even.
    """

    removed: tuple[Pair, ...]
    added: tuple[Pair, ...]
    delta: int

    def __post_init__(self) -> None:
        r = len(self.removed)
        if r not in R_LEVELS or len(self.added) != r:
            raise MatchingError(f"exchange must touch 2, 3 or 4 matching edges, got {r}")
        removed_verts = {v for p in self.removed for v in p}
        added_verts = {v for p in self.added for v in p}
        if removed_verts != added_verts or len(removed_verts) != 2 * r:
            raise MatchingError("added edges must cover exactly the removed vertices")
        if set(self.removed) & set(self.added):
            raise MatchingError("added edges must be disjoint from removed edges")

    def inverse(self) -> "Exchange":
        return Exchange(removed=tuple(sorted(self.added)),
                        added=tuple(sorted(self.removed)),
                        delta=-self.delta)


@dataclass
class SolveReport:
    """Trace of one local-search run (all restarts included)."""

    initial_weight: int
    final_weight: int
    moves_applied: dict[int, int]
    sideways_moves: int
    restarts: int
    budgets_exhausted: bool
    oracle_checked: bool = False
    oracle_min_weight: int | None = None
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "initial_weight": self.initial_weight,
            "final_weight": self.final_weight,
            "moves_applied": {str(r): c for r, c in sorted(self.moves_applied.items())},
            "sideways_moves": self.sideways_moves,
            "restarts": self.restarts,
            "budgets_exhausted": self.budgets_exhausted,
            "oracle_checked": self.oracle_checked,
            "oracle_min_weight": self.oracle_min_weight,
            "elapsed": self.elapsed,
        }


@dataclass(frozen=True)
class SearchPolicy:
    """Local search knobs; defaults are the documented desk-scale settings."""

    seed: int = 0
    start: PerfectMatching | None = None
    improvement: str = "first"  # "first" or "best", within one r level
    sideways_budget: int = 256
    restarts: int = 8

    def __post_init__(self) -> None:
        if self.improvement not in ("first", "best"):
            raise ParameterError(f"improvement must be 'first' or 'best', got {self.improvement!r}")
        if self.sideways_budget < 0 or self.restarts < 0:
            raise ParameterError("budgets must be non-negative")


def _pairings(verts: tuple[int, ...]) -> Iterator[tuple[Pair, ...]]:
    """All perfect pairings of sorted ``verts``, in lexicographic order."""
    if not verts:
        yield ()
        return
    u = verts[0]
    for i in range(1, len(verts)):
        rest = verts[1:i] + verts[i + 1:]
        for tail in _pairings(rest):
            yield ((u, verts[i]),) + tail


def enumerate_exchanges(g: SignedCompleteGraph, m: PerfectMatching, r: int) -> Iterator[Exchange]:
    """Every exchange touching exactly r matching edges, deterministic order.

    For each r-subset of matching edges there are 2 (r=2), 8 (r=3) or 60
    (r=4) crossing pairings that avoid all removed edges; subsets and
    pairings are both scanned lexicographically.
    """
    if r not in R_LEVELS:
        raise ParameterError(f"r must be one of {R_LEVELS}, got {r}")
    if 2 * r > g.order:
        raise ParameterError(f"r={r} needs at least {2 * r} vertices, order is {g.order}")
    if m.order != g.order:
        raise MatchingError(f"matching covers {m.order} vertices, graph has order {g.order}")
    for removed in combinations(m.pairs, r):
        verts = tuple(sorted(v for p in removed for v in p))
        removed_set = set(removed)
        sigma_removed = sum(g.sign(a, b) for a, b in removed)
        for added in _pairings(verts):
            if any(p in removed_set for p in added):
                continue
            delta = sum(g.sign(a, b) for a, b in added) - sigma_removed
            yield Exchange(removed=removed, added=added, delta=delta)


def apply_exchange(m: PerfectMatching, x: Exchange) -> PerfectMatching:
    """The matching after the exchange; weight shifts by exactly x.delta."""
    current = set(m.pairs)
    removed = set(x.removed)
    if not removed <= current:
        raise MatchingError("exchange removes edges that are not in the matching")
    return PerfectMatching(tuple(sorted((current - removed) | set(x.added))))


def random_perfect_matching(order: int, rng: SplitMix64) -> PerfectMatching:
    """Uniform random perfect matching (shuffle, pair consecutive)."""
    verts = list(range(order))
    rng.shuffle(verts)
    return PerfectMatching.from_pairs(
        (verts[i], verts[i + 1]) for i in range(0, order, 2)
    )


# Crossing pairings as position patterns over 2r sorted vertices; shared by
# every subset scan.  3 / 15 / 105 patterns for r = 2 / 3 / 4.
_PATTERNS = {r: tuple(_pairings(tuple(range(2 * r)))) for r in R_LEVELS}


def _sign_matrix(g: SignedCompleteGraph) -> list[list[int]]:
    order = g.order
    matrix = [[0] * order for _ in range(order)]
    it = iter(g.signs)
    for u in range(order):
        row = matrix[u]
        for v in range(u + 1, order):
            s = next(it)
            row[v] = s
            matrix[v][u] = s
    return matrix


def _edges_after(edges: tuple[Pair, ...], removed_idxs, added) -> tuple[Pair, ...]:
    keep = [e for i, e in enumerate(edges) if i not in removed_idxs]
    keep.extend(added)
    keep.sort()
    return tuple(keep)


def _iter_raw_moves(matrix, edges, r):
    """(removed_idxs, added_pairs, delta) in canonical order, r fixed."""
    patterns = _PATTERNS[r]
    for idxs in combinations(range(len(edges)), r):
        removed = [edges[i] for i in idxs]
        verts = sorted(v for p in removed for v in p)
        pos = {v: i for i, v in enumerate(verts)}
        removed_pos = {(pos[a], pos[b]) for a, b in removed}
        sigma_removed = sum(matrix[a][b] for a, b in removed)
        for pattern in patterns:
            total = 0
            for pp in pattern:
                if pp in removed_pos:
                    break
                total += matrix[verts[pp[0]]][verts[pp[1]]]
            else:
                added = tuple((verts[pa], verts[pb]) for pa, pb in pattern)
                yield idxs, added, total - sigma_removed


def _find_improving(matrix, edges, weight, rule):
    current_abs = abs(weight)
    for r in R_LEVELS:
        if 2 * r > 2 * len(edges):
            break
        best = None
        best_key = None
        for idxs, added, delta in _iter_raw_moves(matrix, edges, r):
            new_abs = abs(weight + delta)
            if new_abs >= current_abs:
                continue
            if rule == "first":
                return idxs, added, delta
            key = (new_abs, _edges_after(edges, idxs, added))
            if best_key is None or key < best_key:
                best, best_key = (idxs, added, delta), key
        if best is not None:
            return best
    return None


def _find_sideways(matrix, edges, weight, visited):
    current_abs = abs(weight)
    for r in R_LEVELS:
        if 2 * r > 2 * len(edges):
            break
        for idxs, added, delta in _iter_raw_moves(matrix, edges, r):
            if abs(weight + delta) != current_abs:
                continue
            new_edges = _edges_after(edges, idxs, added)
            if new_edges not in visited:
                return new_edges, delta, r
    return None


def local_search_min_weight(
    g: SignedCompleteGraph, policy: SearchPolicy | None = None
) -> tuple[PerfectMatching, SolveReport]:
    """Minimize |weight| by exchange local search with restarts.

    Every restart ends in a matching with no improving exchange of r <= 4
    (sideways moves are only taken when no improving move exists), so the
    returned best-of-restarts is always such a local optimum.  The search
    stops early once |weight| hits the parity floor (0 when order/2 is
    even, else 1), which no matching can beat.
    """
    if g.order < 4 or g.order % 2:
        raise ParameterError(f"local search needs even order >= 4, got {g.order}")
    policy = policy or SearchPolicy()
    floor = 0 if (g.order // 2) % 2 == 0 else 1
    rng = SplitMix64(policy.seed)
    matrix = _sign_matrix(g)
    t0 = time.perf_counter()

    moves_applied = {r: 0 for r in R_LEVELS}
    sideways_total = 0
    restarts_used = 0
    initial_weight = 0
    best_edges: tuple[Pair, ...] | None = None
    best_w = 0

    for attempt in range(policy.restarts + 1):
        if attempt == 0 and policy.start is not None:
            if policy.start.order != g.order:
                raise MatchingError("start matching does not cover the graph's vertex set")
            edges = policy.start.pairs
        else:
            edges = random_perfect_matching(g.order, rng).pairs
        if attempt > 0:
            restarts_used += 1
        w = sum(matrix[a][b] for a, b in edges)
        if attempt == 0:
            initial_weight = w

        visited = {edges}
        sideways_used = 0
        while abs(w) > floor:
            move = _find_improving(matrix, edges, w, policy.improvement)
            if move is not None:
                idxs, added, delta = move
                edges = _edges_after(edges, idxs, added)
                w += delta
                moves_applied[len(idxs)] += 1
                visited.add(edges)
                continue
            if sideways_used >= policy.sideways_budget:
                break
            sideways = _find_sideways(matrix, edges, w, visited)
            if sideways is None:
                break
            edges, delta, _ = sideways
            w += delta
            sideways_used += 1
            sideways_total += 1
            visited.add(edges)

        if best_edges is None or abs(w) < abs(best_w):
            best_edges, best_w = edges, w
        if abs(best_w) <= floor:
            break

    report = SolveReport(
        initial_weight=initial_weight,
        final_weight=best_w,
        moves_applied=moves_applied,
        sideways_moves=sideways_total,
        restarts=restarts_used,
        budgets_exhausted=abs(best_w) > floor,
        elapsed=time.perf_counter() - t0,
    )
    assert best_edges is not None
    return PerfectMatching(best_edges), report


# ---------------------------------------------------------------------------
# Exact oracle


def enumerate_perfect_matchings(order: int) -> Iterator[PerfectMatching]:
    """All perfect matchings of K_order in lexicographic canonical order."""
    if order < 2 or order % 2:
        raise ParameterError(f"order must be an even integer >= 2, got {order}")

    def rec(verts: tuple[int, ...]) -> Iterator[tuple[Pair, ...]]:
        if not verts:
            yield ()
            return
        u = verts[0]
        for i in range(1, len(verts)):
            rest = verts[1:i] + verts[i + 1:]
            for tail in rec(rest):
                yield ((u, verts[i]),) + tail

    for pairs in rec(tuple(range(order))):
        yield PerfectMatching(pairs)


def oracle_min_weight(
    g: SignedCompleteGraph, order_limit: int = DEFAULT_ORACLE_LIMIT
) -> tuple[int, PerfectMatching]:
    """Exact minimum of |weight| over all perfect matchings, with witness.

    Recursion on the smallest unmatched vertex, memoized on the remaining
    vertex bitmask; the memo value is the set of achievable weights packed
    into an int (bit i <=> weight i - order/2 is achievable).  The witness
    is the lexicographically smallest matching attaining the minimum.

    Refuses instances with order above ``order_limit`` (default 16, which
    already means 2,027,025 matchings; 20 is the documented ceiling).
    """
    if g.order > order_limit:
        raise OracleLimitError(
            f"order {g.order} exceeds the oracle limit {order_limit}; "
            f"raise order_limit (max advisable {MAX_ORACLE_LIMIT}) to force it"
        )
    order = g.order
    offset = order // 2
    sign = g.sign
    memo: dict[int, int] = {0: 1 << offset}

    def achievable(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        u = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << u)
        acc = 0
        mm = rest
        while mm:
            vbit = mm & -mm
            mm ^= vbit
            v = vbit.bit_length() - 1
            sub = achievable(rest ^ vbit)
            acc |= (sub << 1) if sign(u, v) > 0 else (sub >> 1)
        memo[mask] = acc
        return acc

    full = (1 << order) - 1
    weights = achievable(full)
    min_abs = -1
    for w in range(offset + 1):
        if (weights >> (offset + w)) & 1 or (weights >> (offset - w)) & 1:
            min_abs = w
            break
    assert min_abs >= 0

    targets = {t for t in (min_abs, -min_abs) if (weights >> (offset + t)) & 1}
    pairs: list[Pair] = []
    mask = full
    while mask:
        u = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << u)
        mm = rest
        while mm:
            vbit = mm & -mm
            mm ^= vbit
            v = vbit.bit_length() - 1
            sub_mask = rest ^ vbit
            sub_weights = achievable(sub_mask)
            s = sign(u, v)
            new_targets = {
                t - s
                for t in targets
                if abs(t - s) <= offset and (sub_weights >> (offset + t - s)) & 1
            }
            if new_targets:
                pairs.append((u, v))
                mask = sub_mask
                targets = new_targets
                break
        else:
            raise AssertionError("witness reconstruction lost feasibility")

    return min_abs, PerfectMatching(tuple(pairs))


# ---------------------------------------------------------------------------
# Sign-restricted matchings


def max_matching(g: SignedCompleteGraph, sign: int) -> tuple[Pair, ...]:
    """Maximum matching of the subgraph of edges carrying ``sign``."""
    sub = sign_subgraph(g, sign)
    return blossom.maximum_matching(sub.order, sub.edges)


def pm_from_sign_max_matching(g: SignedCompleteGraph, sign: int) -> PerfectMatching:
    """Perfect matching built from a maximum matching of one sign class.

    The vertices missed by the maximum matching span no edge of that sign
    (else the matching could grow), so pairing them consecutively uses only
    opposite-sign edges.  The result has weight
    ``(order/2 - 2*nu) * (-sign)`` where nu is the sign's matching number;
    for sign=-1 that is order/2 - 2*nu.
    """
    if g.order % 2:
        raise ParameterError("perfect matchings need even order")
    mm = max_matching(g, sign)
    covered = {v for p in mm for v in p}
    uncovered = [v for v in range(g.order) if v not in covered]
    rest = [(uncovered[i], uncovered[i + 1]) for i in range(0, len(uncovered), 2)]
    for a, b in rest:
        # maximality witness: an uncovered same-sign edge would extend mm
        assert g.sign(a, b) == -sign, f"uncovered pair ({a},{b}) carries sign {sign}"
    return PerfectMatching.from_pairs(list(mm) + rest)
