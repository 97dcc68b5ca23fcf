"""(2+2)-free posets: construction from matchings, canonical forms, statistics and induced patterns.

A poset on ``{0, ..., n-1}`` is stored by the strict down-set of every
element as a bitmask.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .cliques import iter_bits, max_clique_size
from .errors import Not22Free
from .matchings import Matching, stoimenow_matchings


@dataclass(frozen=True)
class Poset:
    n: int
    down: tuple[int, ...]

    def __post_init__(self):
        if len(self.down) != self.n:
            raise ValueError("need one down-set per element")
        for x, d in enumerate(self.down):
            if d >> x & 1:
                raise ValueError(f"element {x} lies below itself")
            if d >> self.n:
                raise ValueError(f"down-set of {x} mentions unknown elements")
            for y in iter_bits(d):
                if self.down[y] & ~d:
                    raise ValueError("relation is not transitive")

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of the cover pairs ``(x, y)`` meaning ``x < y`` (0-based)."""
        down = [0] * n
        for x, y in pairs:
            down[y] |= 1 << x
        changed = True
        while changed:
            changed = False
            for y in range(n):
                acc = down[y]
                for x in iter_bits(down[y]):
                    acc |= down[x]
                if acc != down[y]:
                    down[y] = acc
                    changed = True
        return cls(n, tuple(down))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, (0,) * n)

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(n, tuple((1 << i) - 1 for i in range(n)))

    def less(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [0] * self.n
        for y, d in enumerate(self.down):
            for x in iter_bits(d):
                up[x] |= 1 << y
        return tuple(up)

    @cached_property
    def incomparable(self) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        return tuple(full & ~(self.down[x] | self.up[x] | 1 << x) for x in range(self.n))

    def relations(self) -> list[tuple[int, int]]:
        return [(x, y) for y in range(self.n) for x in iter_bits(self.down[y])]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for y in range(self.n):
            for x in iter_bits(self.down[y]):
                if not any(self.less(x, z) for z in iter_bits(self.down[y])):
                    out.append((x, y))
        return out

    def relation_matrix(self) -> list[list[bool]]:
        return [[self.less(i, j) for j in range(self.n)] for i in range(self.n)]

    def to_json(self) -> str:
        rels = sorted((x + 1, y + 1) for x, y in self.relations())
        return json.dumps({"n": self.n, "relations": [list(r) for r in rels]})

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        data = json.loads(text)
        return cls.from_relations(data["n"], ((x - 1, y - 1) for x, y in data["relations"]))

    def restrict(self, elements: Sequence[int]) -> "Poset":
        """Induced subposet, relabelled ``0..k-1`` in the given order."""
        index = {x: i for i, x in enumerate(elements)}
        down = []
        for x in elements:
            d = 0
            for y in iter_bits(self.down[x]):
                if y in index:
                    d |= 1 << index[y]
            down.append(d)
        return Poset(len(elements), tuple(down))

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Image under the bijection ``x -> perm[x]``."""
        down = [0] * self.n
        for x in range(self.n):
            for y in iter_bits(self.down[x]):
                down[perm[x]] |= 1 << perm[y]
        return Poset(self.n, tuple(down))

    # -- level structure ----------------------------------------------------

    def is_22_free(self) -> bool:
        ds = sorted(set(self.down), key=int.bit_count)
        return all(a & ~b == 0 for a, b in zip(ds, ds[1:]))

    @cached_property
    def down_levels(self) -> tuple[int, ...]:
        """Index of each strict down-set in the inclusion chain of distinct down-sets."""
        if not self.is_22_free():
            raise Not22Free("strict down-sets are not linearly ordered")
        ds = sorted(set(self.down), key=int.bit_count)
        rank = {d: i for i, d in enumerate(ds)}
        return tuple(rank[d] for d in self.down)

    @cached_property
    def up_levels(self) -> tuple[int, ...]:
        us = sorted(set(self.up), key=int.bit_count)
        if any(a & ~b for a, b in zip(us, us[1:])):
            raise Not22Free("strict up-sets are not linearly ordered")
        rank = {u: i for i, u in enumerate(us)}
        return tuple(rank[u] for u in self.up)

    @property
    def magnitude(self) -> int:
        return len(set(self.down))


def omega(m: Matching) -> Poset:
    """Poset on the arcs of ``m``: arc ``i`` lies below arc ``j`` when ``i`` closes before ``j`` opens."""
    down = []
    for a, _ in m.arcs:
        d = 0
        for i, (_, b) in enumerate(m.arcs):
            if b < a:
                d |= 1 << i
        down.append(d)
    return Poset(m.n, tuple(down))


CanonicalForm = tuple[tuple[int, int], ...]


def canonical_form(p: Poset) -> CanonicalForm:
    """Sorted multiset of ``(down level, up level)`` pairs; equal exactly for isomorphic posets."""
    if not p.is_22_free():
        raise Not22Free("canonical forms are only defined for (2+2)-free posets")
    return tuple(sorted(zip(p.down_levels, p.up_levels)))


def from_canonical_form(key: CanonicalForm) -> Poset:
    """Rebuild a poset from its level pairs; ``x < y`` iff ``down(y) >= mag - up(x)``."""
    if not key:
        return Poset(0, ())
    mag = 1 + max(d for d, _ in key)
    down = []
    for dy, _ in key:
        down.append(sum(1 << x for x, (_, ux) in enumerate(key) if dy >= mag - ux))
    return Poset(len(key), tuple(down))


# -- statistics -------------------------------------------------------------


def stat_min(p: Poset) -> int:
    return sum(1 for d in p.down if d == 0)


def stat_height(p: Poset) -> int:
    """Size of the longest chain."""
    order = sorted(range(p.n), key=lambda x: p.down[x].bit_count())
    best = [0] * p.n
    for y in order:
        best[y] = 1 + max((best[x] for x in iter_bits(p.down[y])), default=0)
    return max(best, default=0)


def stat_width(p: Poset) -> int:
    """Size of the largest antichain (maximum clique of the incomparability graph)."""
    return max_clique_size(p.incomparable)


def stat_smc(p: Poset) -> int:
    """Size of the shortest maximal chain.

    Maximal chains are exactly the cover paths from a minimal to a maximal
    element, so a breadth-first search over covers suffices.
    """
    if p.n == 0:
        return 0
    succ = [[] for _ in range(p.n)]
    for x, y in p.covers():
        succ[x].append(y)
    frontier = [x for x in range(p.n) if p.down[x] == 0]
    seen = set(frontier)
    size = 1
    while frontier:
        if any(not succ[x] for x in frontier):
            return size
        nxt = []
        for x in frontier:
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        size += 1
    raise AssertionError("unreachable: every finite poset has a maximal element")


def ordinal_summands(p: Poset) -> list[list[int]]:
    """Elements of each irreducible summand of the ordinal sum decomposition, bottom first."""
    if p.n == 0:
        return []
    levels = p.down_levels
    out: list[list[int]] = []
    current: list[int] = []
    below = 0
    for level in range(1 + max(levels)):
        layer = [x for x in range(p.n) if levels[x] == level]
        # a cut just below this level works when every element here sits above all earlier ones
        if current and all(p.down[x] & below == below for x in range(p.n) if levels[x] >= level):
            out.append(current)
            current = []
        current.extend(layer)
        for x in layer:
            below |= 1 << x
    out.append(current)
    return out


def stat_ssd(p: Poset) -> int:
    return len(ordinal_summands(p))


def ordinal_sum(lower: Poset, upper: Poset) -> Poset:
    shift = lower.n
    all_lower = (1 << shift) - 1
    down = list(lower.down) + [all_lower | d << shift for d in upper.down]
    return Poset(lower.n + upper.n, tuple(down))


def isolated_elements(p: Poset) -> list[int]:
    return [x for x in range(p.n) if p.down[x] == 0 and p.up[x] == 0]


@dataclass(frozen=True)
class PosetStats:
    mag: int
    min: int
    h: int
    w: int
    smc: int
    ssd: int


def stats(p: Poset) -> PosetStats:
    return PosetStats(
        mag=p.magnitude,
        min=stat_min(p),
        h=stat_height(p),
        w=stat_width(p),
        smc=stat_smc(p),
        ssd=stat_ssd(p),
    )


# -- induced containment ----------------------------------------------------

THREE_PLUS_ONE = Poset.from_relations(4, [(0, 1), (1, 2)])
N_POSET = Poset.from_relations(4, [(0, 2), (0, 3), (1, 3)])
TWO_PLUS_TWO = Poset.from_relations(4, [(0, 1), (2, 3)])

NAMED_POSETS = {"3+1": THREE_PLUS_ONE, "N": N_POSET, "2+2": TWO_PLUS_TWO}


def contains_induced(p: Poset, q: Poset) -> bool:
    """True iff some ``q.n`` elements of ``p`` induce a copy of ``q``."""
    if q.n > p.n:
        return False
    if q.n == 0:
        return True
    full = (1 << p.n) - 1
    image: list[int] = []

    def extend(t: int, used: int) -> bool:
        if t == q.n:
            return True
        cand = full & ~used
        for s in range(t):
            ps = image[s]
            if q.less(s, t):
                cand &= p.up[ps]
            elif q.less(t, s):
                cand &= p.down[ps]
            else:
                cand &= p.incomparable[ps]
            if not cand:
                return False
        for x in iter_bits(cand):
            image.append(x)
            if extend(t + 1, used | 1 << x):
                return True
            image.pop()
        return False

    return extend(0, 0)


@lru_cache(maxsize=None)
def _posets(n: int) -> tuple[Poset, ...]:
    seen: dict[CanonicalForm, Poset] = {}
    for m in stoimenow_matchings(n):
        p = omega(m)
        seen.setdefault(canonical_form(p), p)
    return tuple(seen.values())


def enumerate_posets(n: int, avoid: str | Poset | None = None) -> list[Poset]:
    """Isomorphism classes of (2+2)-free posets on ``n`` elements, as images of Stoimenow matchings."""
    if isinstance(avoid, str):
        avoid = NAMED_POSETS[avoid]
    out = list(_posets(n))
    if avoid is not None:
        out = [p for p in out if not contains_induced(p, avoid)]
    return out


def level_profile(p: Poset) -> Counter:
    return Counter(p.down_levels)


def format_poset(p: Poset) -> str:
    """Compact text form ``n:x<y,...`` listing cover relations with 1-based labels."""
    return f"{p.n}:" + ",".join(f"{x + 1}<{y + 1}" for x, y in p.covers())


def parse_poset(text: str) -> Poset:
    """Read either the JSON form or the compact ``n:x<y,...`` form."""
    text = text.strip()
    if text.startswith("{"):
        return Poset.from_json(text)
    head, _, body = text.partition(":")
    n = int(head)
    pairs = []
    for item in filter(None, (s.strip() for s in body.split(","))):
        x, y = item.split("<")
        pairs.append((int(x) - 1, int(y) - 1))
    if any(not (0 <= v < n) for pair in pairs for v in pair):
        raise ValueError(f"labels must lie in 1..{n}")
    return Poset.from_relations(n, pairs)
