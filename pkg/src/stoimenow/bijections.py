"""Constructive bijections between Catalan-many Fishburn objects and their recursive decompositions.

Matchings are edited as endpoint words: a list of arc labels in which each
label occurs twice, first as opener and then as closer.  Moves such as
"put these openers just before that position" become list surgery, after
which the word is renumbered into a :class:`Matching`.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import IterationCapExceeded, NoIsolatedElement, NotDyck, NotNonnesting, NotRGF, PatternViolation
from .matchings import EMPTY, Matching, block_boundaries, is_stoimenow, merge, reverse
from .patterns import P1, P2, Pattern, avoids, build_family, find_occurrence
from .posets import (
    N_POSET,
    THREE_PLUS_ONE,
    Poset,
    contains_induced,
    isolated_elements,
    ordinal_sum,
    ordinal_summands,
)
from .sequences import Perm, Seq, contains_3142, is_ascent_sequence, is_fishburn, is_rgf_runs, transpose_T

# -- endpoint words ------------------------------------------------------------


def _word(m: Matching) -> list[int]:
    return [m.arc_at[p] for p in range(1, 2 * m.n + 1)]


def _from_word(word: Sequence[int]) -> Matching:
    first: dict[int, int] = {}
    arcs = []
    for p, label in enumerate(word, start=1):
        if label in first:
            arcs.append((first.pop(label), p))
        else:
            first[label] = p
    return Matching(tuple(arcs))


def _pair_in_order(word: Sequence[str]) -> Matching:
    """Matching on a ``(``/``)`` word pairing the i-th opener with the i-th closer."""
    opens = [p for p, c in enumerate(word, start=1) if c == "("]
    closes = [p for p, c in enumerate(word, start=1) if c == ")"]
    return Matching(tuple(zip(opens, closes)))


def first_block(m: Matching) -> tuple[Matching, Matching]:
    """Split ``m`` into its first irreducible block and the remaining arcs."""
    if m.n == 0:
        raise ValueError("the empty matching has no blocks")
    cut = block_boundaries(m)[0]
    return m.relabel(range(1, cut + 1)), m.relabel(range(cut + 1, 2 * m.n + 1))


def _require_avoids(m: Matching, q: Pattern) -> None:
    if not is_stoimenow(m):
        raise PatternViolation(f"{m} is not a Stoimenow matching")
    if not avoids(m, q):
        raise PatternViolation(f"{m} contains {q.name}")


# -- Dyck paths ----------------------------------------------------------------


def is_dyck(mu: str) -> bool:
    depth = 0
    for step in mu:
        if step not in "UD":
            return False
        depth += 1 if step == "U" else -1
        if depth < 0:
            return False
    return depth == 0


def _require_dyck(mu: str) -> None:
    if not is_dyck(mu):
        raise NotDyck(f"{mu!r} is not a Dyck path")


def gamma(mu: str) -> Matching:
    """Pair the i-th up step with the i-th down step."""
    _require_dyck(mu)
    return _pair_in_order(["(" if s == "U" else ")" for s in mu])


def gamma_inverse(m: Matching) -> str:
    if m.has_nesting():
        raise NotNonnesting(f"{m} has nested arcs")
    return "".join("U" if c == "(" else "D" for c in m.word)


def dyck_height(mu: str) -> int:
    best = depth = 0
    for step in mu:
        depth += 1 if step == "U" else -1
        best = max(best, depth)
    return best


def first_return(mu: str) -> tuple[str, str]:
    """``mu = U mu1 D mu2`` with ``mu1`` returning to its own base line."""
    _require_dyck(mu)
    if not mu:
        raise ValueError("the empty path has no first return")
    depth = 0
    for i, step in enumerate(mu):
        depth += 1 if step == "U" else -1
        if depth == 0:
            return mu[1:i], mu[i + 1 :]
    raise AssertionError("unreachable for a valid path")


def enumerate_dyck(n: int) -> Iterator[str]:
    """Dyck paths of semilength ``n`` in lexicographic order (``D`` < ``U``)."""

    def grow(prefix: str, ups: int, downs: int) -> Iterator[str]:
        if downs == n:
            yield prefix
            return
        if downs < ups:
            yield from grow(prefix + "D", ups, downs + 1)
        if ups < n:
            yield from grow(prefix + "U", ups + 1, downs)

    yield from grow("", 0, 0)


# -- P1: Theta and its gluing ---------------------------------------------------


def theta(m1: Matching) -> Matching:
    """Wrap ``m1`` in a new first opener and last closer, then re-pair openers and closers in order."""
    _require_avoids(m1, P1)
    return _pair_in_order(["(", *m1.word, ")"])


def glue_p1(m1: Matching, m2: Matching) -> Matching:
    _require_avoids(m2, P1)
    return merge(theta(m1), m2)


def split_p1(m: Matching) -> tuple[Matching, Matching]:
    _require_avoids(m, P1)
    head, rest = first_block(m)
    return _pair_in_order(list(head.word[1:-1])), rest


# -- P2: the reduction-arc insertion and its gluing -----------------------------


def redarc(m: Matching) -> tuple[int, int]:
    """The arc whose closer sits immediately after the last opener."""
    if m.n == 0:
        raise ValueError("the empty matching has no reduction arc")
    last_opener = max(a for a, _ in m.arcs)
    return m.arcs[m.arc_at[last_opener + 1]]


def v_map(m: Matching) -> Matching:
    """Insert a new reduction arc into ``m``, giving an irreducible P2-avoider one arc larger."""
    _require_avoids(m, P2)
    if m.n == 0:
        return Matching(((1, 2),))
    new = m.n
    word = _word(m)
    a_last = max(a for a, _ in m.arcs)
    b_first = m.arcs[0][1]
    # closer goes straight after the last opener (0-based slot a_last)
    word.insert(a_last, new)
    if a_last < b_first:
        word.insert(0, new)
    else:
        run = [a for a, b in m.arcs if a < b_first and b > a_last]
        target = min(run) if run else b_first
        word.insert(target - 1, new)
    return _from_word(word)


def glue_p2(m1: Matching, m2: Matching) -> Matching:
    _require_avoids(m2, P2)
    return merge(v_map(m1), m2)


def split_p2(m: Matching) -> tuple[Matching, Matching]:
    _require_avoids(m, P2)
    head, rest = first_block(m)
    drop = head.arcs.index(redarc(head))
    return head.without_arcs([drop]), rest


# -- Phi: P2^k avoiders to P4^k avoiders ------------------------------------------


def _run_length(m: Matching, occ: Sequence[int], step: int) -> int:
    """Length of the run ``[a + s*step, b + s*step]`` of arcs starting from arc ``occ[1]``.

    The run stops early at any other arc of the occurrence, which matters
    only when ``k = 3`` (the chain partner of the second arc can be its
    immediate shift) and in the backward direction (the first arc).
    """
    a, b = m.arcs[occ[1]]
    others = {m.arcs[i][0] for i in occ if i != occ[1]}
    j = 0
    size = 2 * m.n
    while True:
        p, q = a + j * step, b + j * step
        if not (1 <= p <= size and 1 <= q <= size) or m.partner[p] != q or p in others:
            return j
        j += 1


def _move_openers(m: Matching, openers: Sequence[int], before: int) -> Matching:
    """Move the opener tokens at ``openers`` (in order) to just before position ``before``."""
    word = _word(m)
    labels = [word[p - 1] for p in openers]
    anchor = word[before - 1]
    anchor_is_opener = m.is_opener(before)
    for p in sorted(openers, reverse=True):
        del word[p - 1]
    # locate the anchor token again; labels are shared by both endpoints
    hits = [i for i, lab in enumerate(word) if lab == anchor]
    idx = hits[0] if anchor_is_opener else hits[-1]
    word[idx:idx] = labels
    return _from_word(word)


def phi_step(m: Matching, k: int) -> Matching | None:
    """One move of the forward map, or ``None`` when ``m`` already avoids ``P4k(k)``."""
    occ = find_occurrence(m, build_family(4, k))
    if occ is None:
        return None
    a1, b1 = m.arcs[occ[0]]
    a2, b2 = m.arcs[occ[1]]
    j = _run_length(m, occ, +1)
    inside = [a for a, b in m.arcs if a1 < a < b1 and b > b2]
    target = min(inside) if inside else b1
    return _move_openers(m, [a2 + s for s in range(j)], target)


def _cap(m: Matching) -> int:
    return max(1, m.n * 2 * m.n)


def phi(m: Matching, k: int = 4, trace: list[Matching] | None = None) -> Matching:
    """Move crossing runs left until no ``P4k(k)`` occurrence remains."""
    if k < 2:
        raise ValueError("phi needs k >= 2")
    _require_avoids(m, build_family(2, k))
    for _ in range(_cap(m)):
        nxt = phi_step(m, k)
        if nxt is None:
            return m
        m = nxt
        if trace is not None:
            trace.append(m)
    if find_occurrence(m, build_family(4, k)) is None:
        return m
    raise IterationCapExceeded(f"phi did not settle within {_cap(m)} moves")


def _rightmost_chain(m: Matching, k: int) -> tuple[int, ...] | None:
    """``P2k(k)`` occurrence taking the rightmost last closer, then the rightmost previous one, and so on."""
    occ = find_occurrence(reverse(m), build_family(2, k))
    if occ is None:
        return None
    # arc t of the mirror is the arc of m with the t-th largest closer
    by_closer = sorted(range(m.n), key=lambda i: -m.arcs[i][1])
    return tuple(by_closer[t] for t in reversed(occ))


def phi_inverse_step(m: Matching, k: int) -> Matching | None:
    occ = _rightmost_chain(m, k)
    if occ is None:
        return None
    _, b1 = m.arcs[occ[0]]
    a2, b2 = m.arcs[occ[1]]
    j = _run_length(m, occ, -1)
    # with k = 2 there is no third arc; the run's own first closer bounds the search
    bound = m.arcs[occ[2]][0] if k > 2 else b2 - j + 1
    between = [a for a, b in m.arcs if b1 < a < bound and b > b2]
    target = min(between) if between else bound
    return _move_openers(m, [a2 - s for s in reversed(range(j))], target)


def phi_inverse(m: Matching, k: int = 4, trace: list[Matching] | None = None) -> Matching:
    if k < 2:
        raise ValueError("phi_inverse needs k >= 2")
    _require_avoids(m, build_family(4, k))
    for _ in range(_cap(m)):
        nxt = phi_inverse_step(m, k)
        if nxt is None:
            return m
        m = nxt
        if trace is not None:
            trace.append(m)
    if _rightmost_chain(m, k) is None:
        return m
    raise IterationCapExceeded(f"phi_inverse did not settle within {_cap(m)} moves")


# -- sequences and permutations ---------------------------------------------------


def decompose_seq_101(alpha: Sequence[int]) -> tuple[Seq, Seq]:
    """Cut at the last zero: ``alpha = alpha' 0 (alpha'' + m)`` with ``m = max(alpha' 0) + 1``."""
    alpha = tuple(alpha)
    if not alpha or not is_ascent_sequence(alpha):
        raise PatternViolation(f"{alpha} is not a nonempty ascent sequence")
    try:
        is_rgf_runs(alpha)
    except NotRGF as exc:
        raise PatternViolation(f"{alpha} contains 101") from exc
    k = max(i for i, a in enumerate(alpha) if a == 0)
    shift = max(alpha[: k + 1]) + 1
    return alpha[:k], tuple(a - shift for a in alpha[k + 1 :])


def compose_seq_101(first: Sequence[int], second: Sequence[int]) -> Seq:
    head = tuple(first) + (0,)
    shift = max(head) + 1
    return head + tuple(a + shift for a in second)


def decompose_perm_3142(pi: Sequence[int]) -> tuple[Perm, Perm]:
    """``pi = k pi' (pi'' + k)`` where ``k = pi_1`` and ``pi'`` permutes ``1..k-1``."""
    pi = tuple(pi)
    if not pi or not is_fishburn(pi) or contains_3142(pi):
        raise PatternViolation(f"{pi} is not a nonempty 3142-avoiding Fishburn permutation")
    k = pi[0]
    head, tail = pi[1:k], pi[k:]
    if sorted(head) != list(range(1, k)):
        raise PatternViolation(f"{pi} is not a direct sum after its first entry")
    return head, tuple(v - k for v in tail)


def compose_perm_3142(first: Sequence[int], second: Sequence[int]) -> Perm:
    k = len(first) + 1
    return (k, *first, *(v + k for v in second))


def psi_p2(m: Matching) -> Seq:
    """Ascent sequence of a P2-avoider, built recursively along its reduction-arc decomposition."""
    if m.n == 0:
        return ()
    first, second = split_p2(m)
    return compose_seq_101(psi_p2(first), psi_p2(second))


def psi_p2_inverse(alpha: Sequence[int]) -> Matching:
    if not alpha:
        return EMPTY
    first, second = decompose_seq_101(alpha)
    return glue_p2(psi_p2_inverse(first), psi_p2_inverse(second))


def upsilon_p2(m: Matching) -> Perm:
    # the raising map fixes 101-avoiders, so Lambda reduces to sorting here
    return transpose_T(psi_p2(m))


def upsilon_p2_inverse(pi: Sequence[int]) -> Matching:
    if not pi:
        return EMPTY
    first, second = decompose_perm_3142(pi)
    return glue_p2(upsilon_p2_inverse(first), upsilon_p2_inverse(second))


# -- posets -------------------------------------------------------------------------


def _split_first_summand(p: Poset) -> tuple[Poset, Poset]:
    parts = ordinal_summands(p)
    rest = [x for part in parts[1:] for x in part]
    return p.restrict(parts[0]), p.restrict(rest)


def _star_order(p: Poset) -> list[int]:
    levels = p.down_levels
    return sorted(range(p.n), key=lambda x: (levels[x], -p.up[x].bit_count(), x))


def decompose_poset_3plus1(p: Poset) -> tuple[Poset, Poset]:
    """Split off the first ordinal summand and shift its relations one step down the level order."""
    if p.n == 0 or contains_induced(p, THREE_PLUS_ONE):
        raise PatternViolation("expected a nonempty (3+1)-free poset")
    star, rest = _split_first_summand(p)
    order = _star_order(star)
    k = star.n
    # element i of the result stands for star element order[i + 1]; i < j iff order[i] < order[j + 1]
    pairs = [(i, j) for i in range(k - 1) for j in range(k - 1) if star.less(order[i], order[j + 1])]
    return Poset.from_relations(k - 1, pairs), rest


def compose_poset_3plus1(first: Poset, second: Poset) -> Poset:
    k = first.n + 1
    pairs = [(u, v + 1) for u in range(k - 1) for v in range(k - 1) if first.less(u, v)]
    return ordinal_sum(Poset.from_relations(k, pairs), second)


def decompose_poset_N(p: Poset) -> tuple[Poset, Poset]:
    """Split off the first ordinal summand and drop one of its isolated elements."""
    if p.n == 0 or contains_induced(p, N_POSET):
        raise PatternViolation("expected a nonempty N-free poset")
    head, rest = _split_first_summand(p)
    lone = isolated_elements(head)
    if not lone:
        raise NoIsolatedElement("the first ordinal summand has no isolated element")
    return head.restrict([x for x in range(head.n) if x != lone[0]]), rest


def compose_poset_N(first: Poset, second: Poset) -> Poset:
    head = Poset(first.n + 1, first.down + (0,))
    return ordinal_sum(head, second)
