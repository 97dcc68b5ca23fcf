"""Forbidden sub-matchings: the five length-4 patterns, their infinite families, and containment."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .cliques import iter_bits
from .errors import BadFamilyIndex
from .matchings import EMPTY, Matching, merge, parse_matching, reverse, stoimenow_matchings

_CROSS, _NEST, _DISJ = 0, 1, 2


@dataclass(frozen=True)
class Pattern:
    matching: Matching
    name: str = "custom"

    def __str__(self) -> str:
        return self.name

    @property
    def size(self) -> int:
        return self.matching.n

    @cached_property
    def relation_codes(self) -> tuple[tuple[int, ...], ...]:
        """``codes[t][s]`` is the relation of arc ``s < t`` towards arc ``t``."""
        masks = self.matching.relation_masks
        codes = []
        for t in range(self.size):
            row = []
            for s in range(t):
                cross, nest, _ = masks[s]
                bit = 1 << t
                row.append(_CROSS if cross & bit else _NEST if nest & bit else _DISJ)
            codes.append(tuple(row))
        return tuple(codes)


def chain(k: int) -> Matching:
    """The ``k``-chain: arc ``i`` crosses arcs ``i - 1`` and ``i + 1`` only."""
    if k <= 0:
        return EMPTY
    if k == 1:
        return Matching(((1, 2),))
    # openers 1, 2 then alternate closer/opener, finishing with two closers
    arcs = [(1, 3)] + [(2 * i, 2 * i + 3) for i in range(1, k - 1)] + [(2 * k - 2, 2 * k)]
    return Matching(tuple(arcs))


_ARC = Matching(((1, 2),))


def build_family(i: int, k: int) -> Pattern:
    """Member ``k`` of family ``i`` (2..5); ``k = 4`` recovers the pattern ``P_i``."""
    if i not in (2, 3, 4, 5):
        raise BadFamilyIndex(f"family index must be 2..5, got {i}")
    if k < 1:
        raise BadFamilyIndex(f"family parameter must be >= 1, got {k}")
    if k == 1:
        return Pattern(_ARC, f"P{i}k({k})")
    if i == 2:
        m = chain(k)
    elif i == 3:
        m = merge(merge(_ARC, chain(k - 2)), _ARC)
    elif i == 4:
        m = merge(_ARC, chain(k - 1))
    else:
        m = merge(chain(k - 1), _ARC)
    return Pattern(m, f"P{i}k({k})")


P1 = Pattern(parse_matching("1-3,2-7,4-5,6-8"), "P1")
P2 = Pattern(parse_matching("1-3,2-5,4-7,6-8"), "P2")
P3 = Pattern(parse_matching("1-2,3-5,4-6,7-8"), "P3")
P4 = Pattern(parse_matching("1-2,3-5,4-7,6-8"), "P4")
P5 = Pattern(parse_matching("1-3,2-5,4-6,7-8"), "P5")

NAMED = {"P1": P1, "P2": P2, "P3": P3, "P4": P4, "P5": P5}

_FAMILY_RE = re.compile(r"^P([2-5])k[:(]?(\d+)\)?$")


def pattern_by_name(name: str) -> Pattern:
    """Resolve ``P1``..``P5``, ``P3k:5`` / ``P3k(5)``, or an arc list such as ``1-3,2-4``."""
    key = name.strip()
    if key in NAMED:
        return NAMED[key]
    m = _FAMILY_RE.match(key)
    if m:
        return build_family(int(m.group(1)), int(m.group(2)))
    return Pattern(parse_matching(key), "custom")


def find_occurrence(m: Matching, q: Pattern | Matching) -> tuple[int, ...] | None:
    """Lexicographically first occurrence of ``q`` in ``m`` as a tuple of arc indices.

    Arcs of ``q`` are matched in opener order; the relative order of all
    endpoints of two arcs is fixed by their crossing/nesting/disjoint type,
    so matching those types pairwise is equivalent to order-isomorphism.
    """
    if isinstance(q, Matching):
        q = Pattern(q)
    k = q.size
    if k == 0:
        return ()
    if k > m.n:
        return None
    masks = m.relation_masks
    codes = q.relation_codes
    full = (1 << m.n) - 1
    chosen: list[int] = []

    def extend(t: int, after: int) -> bool:
        if t == k:
            return True
        cand = full & ~((1 << (after + 1)) - 1)
        for s, code in enumerate(codes[t]):
            cand &= masks[chosen[s]][code]
            if not cand:
                return False
        # leave room for the arcs still to be placed
        for j in iter_bits(cand):
            if j > m.n - (k - t):
                break
            chosen.append(j)
            if extend(t + 1, j):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if extend(0, -1) else None


def contains(m: Matching, q: Pattern | Matching) -> bool:
    return find_occurrence(m, q) is not None


def avoids(m: Matching, q: Pattern | Matching) -> bool:
    return find_occurrence(m, q) is None


@lru_cache(maxsize=None)
def _avoiders(n: int, q: Matching) -> tuple[Matching, ...]:
    pat = Pattern(q)
    return tuple(m for m in stoimenow_matchings(n) if find_occurrence(m, pat) is None)


def avoiders(n: int, q: Pattern | Matching) -> tuple[Matching, ...]:
    """Cached tuple of the Stoimenow matchings with ``n`` arcs avoiding ``q``."""
    return _avoiders(n, q.matching if isinstance(q, Pattern) else q)


def enumerate_avoiding(n: int, q: Pattern | Matching) -> Iterator[Matching]:
    yield from avoiders(n, q)


def reverse_pattern(q: Pattern) -> Pattern:
    return Pattern(reverse(q.matching), f"rev({q.name})")
