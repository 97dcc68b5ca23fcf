"""Ascent sequences and Fishburn permutations, with their statistics and the maps Delta, T and Lambda."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .errors import NotRGF

Seq = tuple[int, ...]
Perm = tuple[int, ...]


def ascents(alpha: Sequence[int]) -> list[int]:
    """0-based indices ``i`` with ``alpha[i] < alpha[i + 1]``."""
    return [i for i in range(len(alpha) - 1) if alpha[i] < alpha[i + 1]]


def stat_asc(alpha: Sequence[int]) -> int:
    return len(ascents(alpha))


def is_ascent_sequence(alpha: Sequence[int]) -> bool:
    if not alpha:
        return True
    if alpha[0] != 0:
        return False
    asc = 0
    for prev, cur in zip(alpha, alpha[1:]):
        if not 0 <= cur <= asc + 1:
            return False
        asc += prev < cur
    return True


def _word_occurs(alpha: Sequence[int], pattern: str) -> bool:
    """Subsequence of ``alpha`` order-isomorphic (equalities included) to the digit word ``pattern``."""
    k = len(pattern)
    pat = [int(c) for c in pattern]
    for idx in combinations(range(len(alpha)), k):
        vals = [alpha[i] for i in idx]
        if all(
            (vals[s] < vals[t]) == (pat[s] < pat[t]) and (vals[s] == vals[t]) == (pat[s] == pat[t])
            for s in range(k)
            for t in range(s + 1, k)
        ):
            return True
    return False


def contains_101(alpha: Sequence[int]) -> bool:
    # an entry followed later by a smaller one and then by itself again
    n = len(alpha)
    for i in range(n):
        lowest = None
        for j in range(i + 1, n):
            if alpha[j] == alpha[i] and lowest is not None and lowest < alpha[i]:
                return True
            lowest = alpha[j] if lowest is None else min(lowest, alpha[j])
    return False


def contains_word(alpha: Sequence[int], pattern: str) -> bool:
    if pattern == "101":
        return contains_101(alpha)
    return _word_occurs(alpha, pattern)


def _ascent_sequences(n: int) -> Iterator[Seq]:
    if n == 0:
        yield ()
        return

    def grow(prefix: list[int], asc: int) -> Iterator[Seq]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for v in range(asc + 2):
            prefix.append(v)
            yield from grow(prefix, asc + (last < v))
            prefix.pop()

    yield from grow([0], 0)


@lru_cache(maxsize=None)
def _cached_sequences(n: int, avoid: str | None) -> tuple[Seq, ...]:
    seqs = _ascent_sequences(n)
    if avoid is None:
        return tuple(seqs)
    return tuple(a for a in seqs if not contains_word(a, avoid))


def enumerate_ascent_sequences(n: int, avoid: str | None = None) -> Iterator[Seq]:
    """Ascent sequences of length ``n`` (lexicographic), optionally avoiding ``101`` or ``0101``."""
    if avoid not in (None, "101", "0101"):
        raise ValueError(f"unsupported word pattern {avoid!r}")
    yield from _cached_sequences(n, avoid)


def stat_lmax(xs: Sequence[int]) -> int:
    """Number of strict left-to-right maxima."""
    count, best = 0, None
    for x in xs:
        if best is None or x > best:
            count += 1
            best = x
    return count


def stat_rmin(xs: Sequence[int]) -> int:
    """Number of strict right-to-left minima (entries smaller than everything after them)."""
    count, best = 0, None
    for x in reversed(xs):
        if best is None or x < best:
            count += 1
            best = x
    return count


@dataclass(frozen=True)
class SeqStats:
    asc: int
    zero: int
    lmax: int
    rmin: int


def seq_stats(alpha: Sequence[int]) -> SeqStats:
    return SeqStats(
        asc=stat_asc(alpha),
        zero=sum(1 for a in alpha if a == 0),
        lmax=stat_lmax(alpha),
        rmin=stat_rmin(alpha),
    )


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal weakly increasing runs that raise the maximum, and the stretches between them."""

    runs: tuple[Seq, ...]
    gaps: tuple[Seq, ...]


def is_rgf_runs(alpha: Sequence[int]) -> RunDecomposition:
    """Split a 101-avoiding ascent sequence into its record-setting runs.

    Each run starts one above the running maximum and increases weakly;
    ``gaps[i]`` is the stretch after ``runs[i]``, which must sit strictly
    below the maximum and decrease weakly.  Raises :class:`NotRGF` otherwise.
    """
    runs: list[Seq] = []
    gaps: list[Seq] = []
    i, n = 0, len(alpha)
    top = -1
    while i < n:
        if alpha[i] != top + 1:
            raise NotRGF(f"run starts at {alpha[i]}, expected {top + 1}")
        start = i
        i += 1
        while i < n and alpha[i] >= alpha[i - 1]:
            i += 1
        runs.append(tuple(alpha[start:i]))
        top = alpha[i - 1]
        start = i
        while i < n and alpha[i] <= top:
            i += 1
        gap = tuple(alpha[start:i])
        if any(b > a for a, b in zip(gap, gap[1:])):
            raise NotRGF(f"entries {gap} between runs are not weakly decreasing")
        gaps.append(gap)
    return RunDecomposition(tuple(runs), tuple(gaps))


# -- Delta, T, Lambda -------------------------------------------------------


def delta(alpha: Sequence[int]) -> Seq:
    """Apply the raising step at each ascent of ``alpha`` from left to right.

    Raising at ascent ``j`` adds 1 to every earlier entry that is at least the
    entry just after the ascent.  Ascent positions are those of the input.
    """
    out = list(alpha)
    for j in ascents(alpha):
        bound = out[j + 1]
        for i in range(j + 1):
            if out[i] >= bound:
                out[i] += 1
    return tuple(out)


def transpose_T(alpha_hat: Sequence[int]) -> Perm:
    """Positions ``1..n`` sorted by value ascending, ties by position descending."""
    order = sorted(range(len(alpha_hat)), key=lambda i: (alpha_hat[i], -i))
    return tuple(i + 1 for i in order)


def lambda_(alpha: Sequence[int]) -> Perm:
    return transpose_T(delta(alpha))


def is_permutation(pi: Sequence[int]) -> bool:
    return sorted(pi) == list(range(1, len(pi) + 1))


def is_fishburn(pi: Sequence[int]) -> bool:
    """No ``i < i+1 < j`` with ``pi[j] + 1 == pi[i] < pi[i+1]``."""
    pos = {v: i for i, v in enumerate(pi)}
    for i in range(len(pi) - 1):
        if pi[i] < pi[i + 1]:
            j = pos.get(pi[i] - 1)
            if j is not None and j > i + 1:
                return False
    return True


def initial_descending_run(pi: Sequence[int]) -> int:
    if not pi:
        return 0
    k = 1
    while k < len(pi) and pi[k] < pi[k - 1]:
        k += 1
    return k


def contains_classical(pi: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    for idx in combinations(range(len(pi)), k):
        vals = [pi[i] for i in idx]
        if all((vals[s] < vals[t]) == (pattern[s] < pattern[t]) for s in range(k) for t in range(s + 1, k)):
            return True
    return False


def contains_3142(pi: Sequence[int]) -> bool:
    # choose the "1" and "4" positions, then look for a "3" before and a "2" after
    n = len(pi)
    for b in range(n):
        for c in range(b + 1, n):
            lo, hi = pi[b], pi[c]
            if lo >= hi:
                continue
            if any(lo < pi[a] < hi for a in range(b)):
                for d in range(c + 1, n):
                    if lo < pi[d] < hi and any(pi[d] < pi[a] < hi for a in range(b)):
                        return True
    return False


@dataclass(frozen=True)
class PermStats:
    lmax: int
    rmin: int
    idr: int
    contains3142: bool


def perm_ops(pi: Sequence[int]) -> PermStats:
    return PermStats(
        lmax=stat_lmax(pi),
        rmin=stat_rmin(pi),
        idr=initial_descending_run(pi),
        contains3142=contains_3142(pi),
    )


@lru_cache(maxsize=None)
def _fishburn(n: int, avoid3142: bool) -> tuple[Perm, ...]:
    out = []
    for pi in permutations(range(1, n + 1)):
        if is_fishburn(pi) and not (avoid3142 and contains_3142(pi)):
            out.append(pi)
    return tuple(out)


def enumerate_fishburn(n: int, avoid3142: bool = False) -> Iterator[Perm]:
    """Fishburn permutations of ``1..n`` by filtering all permutations (lexicographic)."""
    yield from _fishburn(n, avoid3142)


# -- text forms --------------------------------------------------------------


def parse_sequence(text: str) -> Seq:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    if " " in text:
        return tuple(int(t) for t in text.split())
    return tuple(int(c) for c in text)


def parse_permutation(text: str) -> Perm:
    pi = parse_sequence(text)
    if not is_permutation(pi):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(pi)}")
    return pi


def format_sequence(alpha: Sequence[int]) -> str:
    return ",".join(map(str, alpha))


def format_permutation(pi: Sequence[int]) -> str:
    return " ".join(map(str, pi))
