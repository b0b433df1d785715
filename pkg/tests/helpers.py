"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately written against different traversals than
the package (largest-vertex-first pairing enumeration, bitmask matching
recursion) so the two sides cannot share a bug by construction.
"""

from __future__ import annotations

from functools import lru_cache

from lowpm import SignedCompleteGraph, sigma_total  # noqa: F401  (re-export convenience)


def iter_pairings_desc(verts: tuple[int, ...]):
    """All perfect pairings, recursing on the LARGEST remaining vertex."""
    if not verts:
        yield ()
        return
    u = verts[-1]
    rest = verts[:-1]
    for i in range(len(rest)):
        v = rest[i]
        remaining = rest[:i] + rest[i + 1:]
        for tail in iter_pairings_desc(remaining):
            yield tail + ((v, u),)


def brute_perfect_matchings(order: int):
    """All perfect matchings of K_order as canonical pair tuples."""
    for pairing in iter_pairings_desc(tuple(range(order))):
        yield tuple(sorted(pairing))


def brute_min_weight(g: SignedCompleteGraph) -> tuple[int, tuple]:
    """Exact minimum |weight| and the lexicographically smallest witness."""
    best = None
    witness = None
    for pairs in sorted(brute_perfect_matchings(g.order)):
        w = abs(sum(g.sign(a, b) for a, b in pairs))
        if best is None or w < best:
            best, witness = w, pairs
    return best, witness


def brute_matching_number(order: int, edges) -> int:
    """Maximum matching size by branch-on-lowest-vertex bitmask recursion."""
    adj = [0] * order
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    @lru_cache(maxsize=None)
    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        u = low.bit_length() - 1
        rest = mask ^ low
        best = rec(rest)  # u stays unmatched
        candidates = adj[u] & rest
        while candidates:
            vbit = candidates & -candidates
            candidates ^= vbit
            best = max(best, 1 + rec(rest ^ vbit))
        return best

    result = rec((1 << order) - 1)
    rec.cache_clear()
    return result


def crossing_pairings(removed: tuple) -> list[tuple]:
    """All pairings of removed's vertices sharing no edge with removed."""
    verts = tuple(sorted(v for p in removed for v in p))
    removed_set = set(removed)
    return [
        tuple(sorted(p))
        for p in iter_pairings_desc(verts)
        if not any(e in removed_set for e in p)
    ]
