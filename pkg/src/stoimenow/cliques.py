"""Maximal clique enumeration on small graphs stored as adjacency bitmasks.

Vertex ``i`` is bit ``1 << i``; ``adj[i]`` holds the neighbours of ``i``
(without ``i`` itself).
"""

from __future__ import annotations

from typing import Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(adj: Sequence[int]) -> list[int]:
    """Return every inclusion-maximal clique as a bitmask (Bron-Kerbosch with pivoting)."""
    out: list[int] = []
    if not adj:
        return out

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot maximising |P & N(u)| keeps the branching small
        pivot = max(iter_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << len(adj)) - 1, 0)
    out.sort()
    return out


def max_clique_size(adj: Sequence[int]) -> int:
    return max((c.bit_count() for c in maximal_cliques(adj)), default=0)
