"""Perfect matchings of ``{1, ..., 2n}``, Stoimenow validity and matching statistics.

A matching is stored as its arcs ``(opener, closer)`` sorted by opener.  Arcs
are referred to by their 0-based index in that order throughout the package.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .cliques import max_clique_size, maximal_cliques, iter_bits
from .errors import DuplicatePosition, NotPerfect, OpenerAfterCloser, TooLarge

BITMASK_LIMIT = 60

Arc = tuple[int, int]


class ArcRelation(Enum):
    """How an arc relates to a later-opening arc."""

    CROSSING = "crossing"
    NESTING = "nesting"
    DISJOINT = "disjoint"


def arc_relation(first: Arc, second: Arc) -> ArcRelation:
    """Classify two arcs; ``first`` must open before ``second``."""
    (a, b), (c, d) = first, second
    if a > c:
        raise ValueError("first arc must open before the second")
    if b < c:
        return ArcRelation.DISJOINT
    if b < d:
        return ArcRelation.CROSSING
    return ArcRelation.NESTING


_REL_CODE = {ArcRelation.CROSSING: 0, ArcRelation.NESTING: 1, ArcRelation.DISJOINT: 2}


@dataclass(frozen=True)
class Matching:
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(sorted((int(a), int(b)) for a, b in self.arcs))
        seen = set()
        for a, b in arcs:
            if a in seen or b in seen or a == b:
                raise DuplicatePosition(f"position reused in arc [{a},{b}]")
            seen.update((a, b))
            if a > b:
                raise OpenerAfterCloser(f"arc [{a},{b}] opens after it closes")
        if seen != set(range(1, 2 * len(arcs) + 1)):
            raise NotPerfect(f"positions {sorted(seen)} are not exactly 1..{2 * len(arcs)}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def _trusted(cls, arcs: tuple[Arc, ...]) -> "Matching":
        # skips validation; arcs must already be sorted and perfect
        obj = object.__new__(cls)
        object.__setattr__(obj, "arcs", arcs)
        return obj

    @classmethod
    def from_partner(cls, partner: Iterable[int]) -> "Matching":
        """Build from a 1-based partner list ``partner[p-1]`` for positions ``p = 1..2n``."""
        partner = list(partner)
        arcs = []
        for p, q in enumerate(partner, start=1):
            if partner[q - 1] != p:
                raise NotPerfect("partner list is not an involution")
            if p < q:
                arcs.append((p, q))
        return cls(tuple(arcs))

    # -- basic views -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __str__(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.arcs)

    def __repr__(self) -> str:
        return f"Matching({self})"

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """Partner of each position; index 0 is unused padding."""
        out = [0] * (2 * self.n + 1)
        for a, b in self.arcs:
            out[a], out[b] = b, a
        return tuple(out)

    @cached_property
    def arc_at(self) -> tuple[int, ...]:
        """Arc index occupying each position (index 0 unused)."""
        out = [-1] * (2 * self.n + 1)
        for i, (a, b) in enumerate(self.arcs):
            out[a] = out[b] = i
        return tuple(out)

    @property
    def openers(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.arcs)

    @property
    def closers(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.arcs)

    def is_opener(self, p: int) -> bool:
        return self.partner[p] > p

    @property
    def word(self) -> str:
        """Opener/closer word, ``(`` for openers and ``)`` for closers."""
        return "".join("(" if self.partner[p] > p else ")" for p in range(1, 2 * self.n + 1))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "arcs": [list(arc) for arc in self.arcs]})

    @classmethod
    def from_json(cls, text: str) -> "Matching":
        data = json.loads(text)
        m = cls(tuple(tuple(arc) for arc in data["arcs"]))
        if data.get("n", m.n) != m.n:
            raise NotPerfect(f"declared n={data['n']} but {m.n} arcs given")
        return m

    def relabel(self, positions: Iterable[int]) -> "Matching":
        """Restrict to the arcs touching ``positions`` and renumber them 1..2k in order."""
        keep = sorted(positions)
        index = {p: i for i, p in enumerate(keep, start=1)}
        arcs = []
        for a, b in self.arcs:
            if a in index:
                if b not in index:
                    raise NotPerfect(f"arc [{a},{b}] is cut by the restriction")
                arcs.append((index[a], index[b]))
        return Matching._trusted(tuple(arcs))

    def without_arcs(self, drop: Iterable[int]) -> "Matching":
        drop = set(drop)
        keep = [p for i, arc in enumerate(self.arcs) if i not in drop for p in arc]
        return self.relabel(keep)

    def sub_matching(self, indices: Iterable[int]) -> "Matching":
        return self.relabel([p for i in indices for p in self.arcs[i]])

    # -- arc relation tables ----------------------------------------------

    @cached_property
    def relation_masks(self) -> tuple[tuple[int, int, int], ...]:
        """For arc ``i``: bitmasks of later arcs ``j > i`` that cross, nest inside, or follow ``i``."""
        out = []
        arcs = self.arcs
        for i, (a, b) in enumerate(arcs):
            cross = nest = disj = 0
            for j in range(i + 1, len(arcs)):
                c, d = arcs[j]
                if b < c:
                    disj |= 1 << j
                elif b < d:
                    cross |= 1 << j
                else:
                    nest |= 1 << j
            out.append((cross, nest, disj))
        return tuple(out)

    @cached_property
    def crossing_adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for i, (cross, _, _) in enumerate(self.relation_masks):
            adj[i] |= cross
            for j in iter_bits(cross):
                adj[j] |= 1 << i
        return tuple(adj)

    def relation(self, i: int, j: int) -> ArcRelation:
        if i > j:
            i, j = j, i
        return arc_relation(self.arcs[i], self.arcs[j])

    def has_nesting(self) -> bool:
        return any(nest for _, nest, _ in self.relation_masks)


EMPTY = Matching(())

_ARC_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def parse_matching(text: str) -> Matching:
    """Parse ``"1-3,2-4"`` (commas and/or whitespace between arcs) into a matching."""
    text = text.strip()
    if text.startswith("{"):
        return Matching.from_json(text)
    arcs = []
    for chunk in re.split(r"[,\s]+", text):
        if not chunk:
            continue
        m = _ARC_RE.match(chunk)
        if m is None:
            raise ValueError(f"cannot parse arc {chunk!r}")
        a, b = int(m.group(1)), int(m.group(2))
        if a > b:
            raise OpenerAfterCloser(f"arc {chunk!r} opens after it closes")
        arcs.append((a, b))
    return Matching(tuple(arcs))


def is_stoimenow(m: Matching) -> bool:
    """True iff ``m`` has no nested pair with adjacent openers or adjacent closers."""
    partner = m.partner
    for p in range(1, 2 * m.n):
        q = p + 1
        p_open, q_open = partner[p] > p, partner[q] > q
        if p_open and q_open and partner[q] < partner[p]:
            return False  # Type I: [p, x] contains [p+1, y]
        if not p_open and not q_open and partner[q] < partner[p]:
            return False  # Type II: [x, q] contains [y, p]
    return True


def enumerate_stoimenow(n: int) -> Iterator[Matching]:
    """Yield every Stoimenow matching with ``n`` arcs.

    Matchings are produced in lexicographic order of their position tokens,
    where a closer sorts before an opener and closers compare by the position
    of their opener.  Both forbidden configurations are pruned the moment the
    offending closer is placed.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield EMPTY
        return
    size = 2 * n
    partner = [0] * (size + 2)
    opener = [False] * (size + 2)
    open_arcs: list[int] = []

    def rec(p: int, opened: int) -> Iterator[Matching]:
        if p > size:
            yield Matching._trusted(tuple((a, partner[a]) for a in range(1, size + 1) if opener[a]))
            return
        prev_closer_partner = partner[p - 1] if p > 1 and not opener[p - 1] else None
        for idx, o in enumerate(open_arcs):
            # Type I: the opener just left of o belongs to an arc that is still open
            if o > 1 and opener[o - 1] and partner[o - 1] == 0:
                continue
            # Type II: the closer just placed belongs to an arc nested inside [o, p]
            if prev_closer_partner is not None and prev_closer_partner > o:
                continue
            del open_arcs[idx]
            partner[o], partner[p] = p, o
            opener[p] = False
            yield from rec(p + 1, opened)
            partner[o] = partner[p] = 0
            open_arcs.insert(idx, o)
        if opened < n:
            opener[p] = True
            open_arcs.append(p)
            yield from rec(p + 1, opened + 1)
            open_arcs.pop()
            opener[p] = False

    yield from rec(1, 0)


@lru_cache(maxsize=None)
def stoimenow_matchings(n: int) -> tuple[Matching, ...]:
    """Cached tuple form of :func:`enumerate_stoimenow`."""
    return tuple(enumerate_stoimenow(n))


def merge(m1: Matching, m2: Matching) -> Matching:
    """Concatenate ``m2`` to the right of ``m1``."""
    shift = 2 * m1.n
    return Matching._trusted(m1.arcs + tuple((a + shift, b + shift) for a, b in m2.arcs))


def block_boundaries(m: Matching) -> list[int]:
    """Positions ``2i`` at which the prefix holds as many openers as closers."""
    cuts, depth = [], 0
    for p in range(1, 2 * m.n + 1):
        depth += 1 if m.partner[p] > p else -1
        if depth == 0:
            cuts.append(p)
    return cuts


def blocks(m: Matching) -> list[Matching]:
    out, start = [], 1
    for cut in block_boundaries(m):
        out.append(m.relabel(range(start, cut + 1)))
        start = cut + 1
    return out


def stat_bl(m: Matching) -> int:
    return len(block_boundaries(m))


def is_irreducible(m: Matching) -> bool:
    return stat_bl(m) == 1


def stat_cr(m: Matching) -> int:
    """Size of the largest set of pairwise crossing arcs."""
    return max_clique_size(m.crossing_adjacency)


def stat_nr(m: Matching) -> int:
    """Length of the longest run of arcs each closing before the next opens."""
    best = [0] * m.n
    for j, (a, _) in enumerate(m.arcs):
        best[j] = 1 + max((best[i] for i in range(j) if m.arcs[i][1] < a), default=0)
    return max(best, default=0)


def maximal_crossings(m: Matching) -> list[tuple[Arc, ...]]:
    """All inclusion-maximal sets of pairwise crossing arcs."""
    if m.n > BITMASK_LIMIT:
        raise TooLarge(f"{m.n} arcs exceed the bitmask bound {BITMASK_LIMIT}")
    return [tuple(m.arcs[i] for i in iter_bits(c)) for c in maximal_cliques(m.crossing_adjacency)]


def stat_mcr(m: Matching) -> int:
    if m.n > BITMASK_LIMIT:
        raise TooLarge(f"{m.n} arcs exceed the bitmask bound {BITMASK_LIMIT}")
    return len(maximal_cliques(m.crossing_adjacency))


def first_crossing(m: Matching) -> tuple[Arc, ...]:
    """Arcs whose openers precede the first closer."""
    if m.n == 0:
        return ()
    first_closer = min(b for _, b in m.arcs)
    return tuple(arc for arc in m.arcs if arc[0] < first_closer)


def stat_fcr(m: Matching) -> int:
    if m.n > BITMASK_LIMIT:
        raise TooLarge(f"{m.n} arcs exceed the bitmask bound {BITMASK_LIMIT}")
    return len(first_crossing(m))


def downset_signatures(m: Matching) -> list[frozenset[int]]:
    """For each arc, the indices of arcs whose closers precede its opener."""
    return [frozenset(i for i, (_, b) in enumerate(m.arcs) if b < a) for a, _ in m.arcs]


def reverse(m: Matching) -> Matching:
    """Mirror image: position ``p`` becomes ``2n + 1 - p``."""
    top = 2 * m.n + 1
    return Matching._trusted(tuple(sorted((top - b, top - a) for a, b in m.arcs)))


def matching_stats(m: Matching) -> dict[str, int]:
    return {
        "cr": stat_cr(m),
        "nr": stat_nr(m),
        "mcr": stat_mcr(m),
        "fcr": stat_fcr(m),
        "bl": stat_bl(m),
    }
