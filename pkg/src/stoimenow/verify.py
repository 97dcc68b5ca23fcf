"""Exhaustive verification suites for the counting, bijection and distribution results.

Every suite returns a :class:`VerifyReport`; a report passes iff all of its
checks pass.  Bounds are the largest sizes that run comfortably in pure
Python on one core.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import chain
from typing import Callable, Iterable

from . import bijections as bij
from .matchings import (
    downset_signatures,
    parse_matching,
    stat_bl,
    stat_cr,
    stat_fcr,
    stat_mcr,
    stat_nr,
    stoimenow_matchings,
)
from .patterns import NAMED, P1, P2, avoiders, build_family
from .posets import (
    canonical_form,
    enumerate_posets,
    omega,
    stat_height,
    stat_min,
    stat_smc,
    stat_ssd,
    stat_width,
)
from .sequences import (
    enumerate_ascent_sequences,
    enumerate_fishburn,
    initial_descending_run,
    is_rgf_runs,
    delta,
    stat_asc,
    stat_lmax,
    stat_rmin,
)
from .series import (
    Series,
    catalan_series,
    distribution_polynomial,
    fishburn_series,
    format_poly,
    narayana_series,
    thm15_rhs,
    thm16_rhs,
)

CATALAN = catalan_series(12).ints()
FISHBURN = fishburn_series(12).ints()


@dataclass
class Check:
    name: str
    passed: bool
    n_range: tuple[int, int]
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, n_range: tuple[int, int], fn: Callable[[], tuple[bool, str]]) -> Check:
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash inside a check is a failed check, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        check = Check(name, bool(ok), n_range, detail, round(time.perf_counter() - start, 3))
        self.checks.append(check)
        return check

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [asdict(c) for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def format_table(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lo, hi = c.n_range
            line = f"  [{status}] {c.name} (n={lo}..{hi}, {c.seconds:.2f}s)"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        return "\n".join(lines)


# -- object families -------------------------------------------------------------


def _upto(fn: Callable[[int], Iterable], max_n: int) -> list:
    return list(chain.from_iterable(fn(n) for n in range(max_n + 1)))


def _matchings(max_n: int, q=None) -> list:
    return _upto(lambda n: stoimenow_matchings(n) if q is None else avoiders(n, q), max_n)


def _posets(max_n: int, avoid: str) -> list:
    return _upto(lambda n: enumerate_posets(n, avoid), max_n)


def _seqs(max_n: int) -> list:
    return _upto(lambda n: enumerate_ascent_sequences(n, "101"), max_n)


def _perms(max_n: int) -> list:
    return _upto(lambda n: enumerate_fishburn(n, True), max_n)


def _size(obj) -> int:
    return obj.n if hasattr(obj, "n") else len(obj)


def _mag(p) -> int:
    return p.magnitude


def _zero(alpha) -> int:
    return sum(1 for a in alpha if a == 0)


def _distribution(objects: list, stats: tuple, max_n: int) -> Series:
    return distribution_polynomial(objects, stats, size=_size, order=max_n)


def _compare(got: Series, want: Series, max_n: int) -> tuple[bool, str]:
    for d in range(max_n + 1):
        if got[d] != want[d]:
            return False, f"t^{d}: got {format_poly(got[d])}, expected {format_poly(want[d])}"
    return True, ""


def _counts(objs_by_n: Callable[[int], Iterable], expected: list[int], max_n: int) -> tuple[bool, str]:
    got = [sum(1 for _ in objs_by_n(n)) for n in range(max_n + 1)]
    want = expected[: max_n + 1]
    return got == want, f"counts {got}" + ("" if got == want else f", expected {want}")


# -- suites -------------------------------------------------------------------------


def suite_catalan(max_n: int = 9) -> VerifyReport:
    report = VerifyReport("catalan")
    for name, q in NAMED.items():
        report.add(f"|M_n({name})| = C_n", (0, max_n), lambda q=q: _counts(lambda n: avoiders(n, q), CATALAN, max_n))
    return report


def suite_fishburn(max_n: int = 9) -> VerifyReport:
    report = VerifyReport("fishburn")
    perm_n = min(max_n, 8)
    report.add("|M_n| = Fishburn", (0, max_n), lambda: _counts(stoimenow_matchings, FISHBURN, max_n))
    report.add("|P_n| = Fishburn", (0, max_n), lambda: _counts(enumerate_posets, FISHBURN, max_n))
    report.add("|A_n| = Fishburn", (0, max_n), lambda: _counts(enumerate_ascent_sequences, FISHBURN, max_n))
    report.add("|F_n| = Fishburn", (0, perm_n), lambda: _counts(enumerate_fishburn, FISHBURN, perm_n))
    return report


def suite_wilf(max_n: int = 9, ks: Iterable[int] = (2, 3, 5, 6)) -> VerifyReport:
    report = VerifyReport("wilf")
    for k in ks:

        def check(k=k) -> tuple[bool, str]:
            rows = {i: [len(avoiders(n, build_family(i, k))) for n in range(max_n + 1)] for i in (2, 3, 4, 5)}
            ok = all(rows[i] == rows[2] for i in rows)
            return ok, f"counts {rows[2]}" if ok else f"rows differ: {rows}"

        report.add(f"P2k..P5k equinumerous, k={k}", (0, max_n), check)
    return report


def suite_nonnesting(max_n: int = 9) -> VerifyReport:
    report = VerifyReport("nonnesting")

    def same_sets() -> tuple[bool, str]:
        for n in range(max_n + 1):
            nn = {m for m in stoimenow_matchings(n) if not m.has_nesting()}
            if nn != set(avoiders(n, P1)):
                return False, f"n={n}: P1-avoiders differ from nonnesting matchings"
        return True, ""

    def gamma_onto() -> tuple[bool, str]:
        for n in range(max_n + 1):
            paths = list(bij.enumerate_dyck(n))
            images = [bij.gamma(mu) for mu in paths]
            if set(images) != set(avoiders(n, P1)) or len(set(images)) != len(paths):
                return False, f"n={n}: gamma is not a bijection onto M_n(P1)"
            if any(bij.gamma_inverse(m) != mu for m, mu in zip(images, paths)):
                return False, f"n={n}: gamma_inverse does not invert gamma"
            if any(bij.dyck_height(mu) != stat_cr(m) for m, mu in zip(images, paths)):
                return False, f"n={n}: height differs from crossing number"
        return True, ""

    report.add("M_n(P1) = nonnesting matchings", (0, max_n), same_sets)
    report.add("gamma: D_n -> M_n(P1) bijective, h = cr", (0, max_n), gamma_onto)
    report.add("|D_n| = C_n", (0, max_n), lambda: _counts(bij.enumerate_dyck, CATALAN, max_n))
    return report


PHI_EXAMPLE_INPUT = "1-3,2-10,4-7,5-8,6-11,9-12,13-16,14-18,15-21,17-19,20-22"
PHI_EXAMPLE_STEPS = (
    "1-5,2-7,3-8,4-10,6-11,9-12,13-16,14-18,15-21,17-19,20-22",
    "1-6,2-8,3-9,4-11,5-16,7-12,10-13,14-18,15-21,17-19,20-22",
    "1-7,2-9,3-10,4-12,5-16,6-18,8-13,11-14,15-21,17-19,20-22",
)


def _bijective(domain: list, image_of: Callable, codomain: set, inverse: Callable | None = None) -> tuple[bool, str]:
    images = [image_of(x) for x in domain]
    if len(set(images)) != len(images):
        return False, "not injective"
    if set(images) != codomain:
        return False, f"image has {len(set(images))} elements, codomain {len(codomain)}"
    if inverse is not None and any(inverse(y) != x for x, y in zip(domain, images)):
        return False, "inverse does not undo the map"
    return True, f"{len(images)} objects"


def suite_bijections(max_n: int = 7, k: int = 4) -> VerifyReport:
    report = VerifyReport("bijections")

    def phi_example() -> tuple[bool, str]:
        trace: list = []
        bij.phi(parse_matching(PHI_EXAMPLE_INPUT), 4, trace)
        got = tuple(str(m) for m in trace)
        return got == PHI_EXAMPLE_STEPS, "steps " + " | ".join(got)

    def phi_all() -> tuple[bool, str]:
        p2k, p4k = build_family(2, k), build_family(4, k)
        for n in range(max_n + 1):
            ok, detail = _bijective(
                list(avoiders(n, p2k)),
                lambda m: bij.phi(m, k),
                set(avoiders(n, p4k)),
                lambda m: bij.phi_inverse(m, k),
            )
            if not ok:
                return False, f"n={n}: {detail}"
        return True, ""

    def glue(split, glue_fn, q) -> Callable[[], tuple[bool, str]]:
        def check() -> tuple[bool, str]:
            for n in range(1, max_n + 1):
                pairs = [
                    (a, b) for j in range(1, n + 1) for a in avoiders(j - 1, q) for b in avoiders(n - j, q)
                ]
                ok, detail = _bijective(pairs, lambda ab: glue_fn(*ab), set(avoiders(n, q)), split)
                if not ok:
                    return False, f"n={n}: {detail}"
            return True, ""

        return check

    def psi() -> tuple[bool, str]:
        for n in range(max_n + 1):
            ok, detail = _bijective(
                list(avoiders(n, P2)),
                bij.psi_p2,
                set(enumerate_ascent_sequences(n, "101")),
                bij.psi_p2_inverse,
            )
            if not ok:
                return False, f"n={n}: {detail}"
        return True, ""

    def upsilon() -> tuple[bool, str]:
        for n in range(max_n + 1):
            ok, detail = _bijective(
                list(avoiders(n, P2)),
                bij.upsilon_p2,
                set(enumerate_fishburn(n, True)),
                bij.upsilon_p2_inverse,
            )
            if not ok:
                return False, f"n={n}: {detail}"
        return True, ""

    def poset_roundtrip(avoid, decompose, compose) -> Callable[[], tuple[bool, str]]:
        def check() -> tuple[bool, str]:
            for n in range(1, max_n + 1):
                for p in enumerate_posets(n, avoid):
                    if canonical_form(compose(*decompose(p))) != canonical_form(p):
                        return False, f"round trip fails on {p.to_json()}"
            return True, ""

        return check

    report.add("phi reproduces the three-step worked example", (11, 11), phi_example)
    report.add(f"phi: M_n(P2k({k})) -> M_n(P4k({k})) bijective", (0, max_n), phi_all)
    report.add("theta glue: M(P1) pairs -> M(P1)", (1, max_n), glue(lambda m: bij.split_p1(m), bij.glue_p1, P1))
    report.add("reduction-arc glue: M(P2) pairs -> M(P2)", (1, max_n), glue(lambda m: bij.split_p2(m), bij.glue_p2, P2))
    report.add("psi: M_n(P2) -> A_n(101) bijective", (0, max_n), psi)
    report.add("upsilon: M_n(P2) -> F_n(3142) bijective", (0, max_n), upsilon)
    report.add(
        "(3+1)-free poset decomposition round trip",
        (1, max_n),
        poset_roundtrip("3+1", bij.decompose_poset_3plus1, bij.compose_poset_3plus1),
    )
    report.add(
        "N-free poset decomposition round trip",
        (1, max_n),
        poset_roundtrip("N", bij.decompose_poset_N, bij.compose_poset_N),
    )
    return report


def suite_restrictions(max_n: int = 8, seq_n: int = 7) -> VerifyReport:
    report = VerifyReport("restrictions")

    def omega_image(q, avoid) -> Callable[[], tuple[bool, str]]:
        def check() -> tuple[bool, str]:
            for n in range(max_n + 1):
                got = {canonical_form(omega(m)) for m in avoiders(n, q)}
                want = {canonical_form(p) for p in enumerate_posets(n, avoid)}
                if got != want or len(got) != len(avoiders(n, q)):
                    return False, f"n={n}: image differs"
            return True, ""

        return check

    def image(fn, target) -> Callable[[], tuple[bool, str]]:
        def check() -> tuple[bool, str]:
            for n in range(seq_n + 1):
                if {fn(m) for m in avoiders(n, P2)} != set(target(n)):
                    return False, f"n={n}: image differs"
            return True, ""

        return check

    report.add("Omega(M_n(P1)) = P_n(3+1)", (0, max_n), omega_image(P1, "3+1"))
    report.add("Omega(M_n(P2)) = P_n(N)", (0, max_n), omega_image(P2, "N"))
    report.add("Psi(M_n(P2)) = A_n(101)", (0, seq_n), image(bij.psi_p2, lambda n: enumerate_ascent_sequences(n, "101")))
    report.add("Upsilon(M_n(P2)) = F_n(3142)", (0, seq_n), image(bij.upsilon_p2, lambda n: enumerate_fishburn(n, True)))
    return report


def suite_width(max_n: int = 8) -> VerifyReport:
    report = VerifyReport("width")
    dyck = _upto(bij.enumerate_dyck, max_n)
    reference = distribution_polynomial(dyck, (bij.dyck_height,), size=lambda mu: len(mu) // 2, order=max_n)
    families = {
        "cr over M_n(P1)": (lambda: _matchings(max_n, P1), stat_cr),
        "w over P_n(3+1)": (lambda: _posets(max_n, "3+1"), stat_width),
        "w over P_n(N)": (lambda: _posets(max_n, "N"), stat_width),
    }
    for name, (objs, stat) in families.items():
        report.add(
            f"{name} = h over D_n",
            (0, max_n),
            lambda objs=objs, stat=stat: _compare(_distribution(objs(), (stat,), max_n), reference, max_n),
        )
    return report


def suite_narayana(max_n: int = 7) -> VerifyReport:
    report = VerifyReport("narayana")
    want = narayana_series(max_n)
    families = {
        "mcr over M_n(P1)": (lambda: _matchings(max_n, P1), stat_mcr),
        "mcr over M_n(P2)": (lambda: _matchings(max_n, P2), stat_mcr),
        "nr over M_n(P2)": (lambda: _matchings(max_n, P2), stat_nr),
        "mag over P_n(3+1)": (lambda: _posets(max_n, "3+1"), _mag),
        "mag over P_n(N)": (lambda: _posets(max_n, "N"), _mag),
        "h over P_n(N)": (lambda: _posets(max_n, "N"), stat_height),
        "lmax over A_n(101)": (lambda: _seqs(max_n), stat_lmax),
        "rmin over F_n(3142)": (lambda: _perms(max_n), stat_rmin),
    }
    for name, (objs, stat) in families.items():
        report.add(
            f"{name} = N_n(x)",
            (0, max_n),
            lambda objs=objs, stat=stat: _compare(_distribution(objs(), (stat,), max_n), want, max_n),
        )
    return report


def _pair_families(max_n: int) -> dict:
    return {
        "(fcr, bl) over M_n(P1)": (lambda: _matchings(max_n, P1), (stat_fcr, stat_bl)),
        "(fcr, bl) over M_n(P2)": (lambda: _matchings(max_n, P2), (stat_fcr, stat_bl)),
        "(min, ssd) over P_n(3+1)": (lambda: _posets(max_n, "3+1"), (stat_min, stat_ssd)),
        "(min, smc) over P_n(N)": (lambda: _posets(max_n, "N"), (stat_min, stat_smc)),
        "(zero, rmin) over A_n(101)": (lambda: _seqs(max_n), (_zero, stat_rmin)),
        "(idr, lmax) over F_n(3142)": (lambda: _perms(max_n), (initial_descending_run, stat_lmax)),
    }


def suite_ballot(max_n: int = 7) -> VerifyReport:
    report = VerifyReport("ballot")
    want = thm15_rhs(max_n)
    report.add("closed form symmetric in y and z", (0, max_n), lambda: (want.swap("y", "z") == want, ""))
    for name, (objs, stats) in _pair_families(max_n).items():

        def check(objs=objs, stats=stats) -> tuple[bool, str]:
            # shift the pair into the (y, z) slots
            got = distribution_polynomial(objs(), (lambda _: 0, *stats), size=_size, order=max_n)
            ok, detail = _compare(got, want, max_n)
            if ok and got.swap("y", "z") != got:
                return False, "distribution is not symmetric"
            return ok, detail

        report.add(f"{name} = 1 + yzt C(y,t) C(z,t)", (0, max_n), check)
    return report


def suite_joint(max_n: int = 7) -> VerifyReport:
    report = VerifyReport("joint")
    want = thm16_rhs(max_n)
    families = {
        "(mcr, fcr, bl) over M_n(P1)": (lambda: _matchings(max_n, P1), (stat_mcr, stat_fcr, stat_bl)),
        "(mcr, fcr, bl) over M_n(P2)": (lambda: _matchings(max_n, P2), (stat_mcr, stat_fcr, stat_bl)),
        "(mag, min, ssd) over P_n(3+1)": (lambda: _posets(max_n, "3+1"), (_mag, stat_min, stat_ssd)),
        "(mag, min, smc) over P_n(N)": (lambda: _posets(max_n, "N"), (_mag, stat_min, stat_smc)),
        "(lmax, zero, rmin) over A_n(101)": (lambda: _seqs(max_n), (stat_lmax, _zero, stat_rmin)),
        "(rmin, idr, lmax) over F_n(3142)": (lambda: _perms(max_n), (stat_rmin, initial_descending_run, stat_lmax)),
    }
    report.add("x = 1 specialisation gives the (y, z) series", (0, max_n), lambda: (want.specialize(x=1) == thm15_rhs(max_n), ""))
    report.add("y = z = 1 specialisation gives N(x, t)", (0, max_n), lambda: (want.specialize(y=1, z=1) == narayana_series(max_n), ""))
    for name, (objs, stats) in families.items():
        report.add(
            f"{name} matches the closed form",
            (0, max_n),
            lambda objs=objs, stats=stats: _compare(_distribution(objs(), stats, max_n), want, max_n),
        )
    return report


def _pointwise(objs: Iterable, left: Callable, right: Callable) -> tuple[bool, str]:
    bad = [o for o in objs if left(o) != right(o)]
    if bad:
        return False, f"{len(bad)} counterexamples, first {bad[0]}"
    return True, ""


def suite_remark(max_n: int = 7) -> VerifyReport:
    report = VerifyReport("remark")
    everything = _matchings(max_n)
    pairs = {
        "nr = h o Omega": (stat_nr, stat_height),
        "mcr = mag o Omega": (stat_mcr, _mag),
        "fcr = min o Omega": (stat_fcr, stat_min),
        "bl = ssd o Omega": (stat_bl, stat_ssd),
    }
    for name, (ms, ps) in pairs.items():
        report.add(name, (0, max_n), lambda ms=ms, ps=ps: _pointwise(everything, ms, lambda m: ps(omega(m))))
    report.add(
        "mcr = number of distinct down-set signatures",
        (0, max_n),
        lambda: _pointwise(everything, stat_mcr, lambda m: len(set(downset_signatures(m)))),
    )
    report.add(
        "mcr = mag o Omega on M_n(P1) and M_n(P2)",
        (0, max_n),
        lambda: _pointwise(_matchings(max_n, P1) + _matchings(max_n, P2), stat_mcr, lambda m: omega(m).magnitude),
    )
    return report


def suite_corollaries(max_n: int = 8) -> VerifyReport:
    report = VerifyReport("corollaries")
    n_free = _posets(max_n, "N")
    report.add("nr = mcr on M_n(P2)", (0, max_n), lambda: _pointwise(_matchings(max_n, P2), stat_nr, stat_mcr))
    report.add("h = mag on P_n(N)", (0, max_n), lambda: _pointwise(n_free, stat_height, _mag))
    # the block count of a poset is read as its number of ordinal summands
    report.add("ssd = smc on P_n(N)", (0, max_n), lambda: _pointwise(n_free, stat_ssd, stat_smc))
    return report


def suite_kitaev_remmel(max_n: int = 7) -> VerifyReport:
    report = VerifyReport("kitaev-remmel")
    posets = _upto(enumerate_posets, max_n)
    seqs = _upto(enumerate_ascent_sequences, max_n)
    perms = _upto(enumerate_fishburn, max_n)

    def same(*dists: Series) -> tuple[bool, str]:
        for other in dists[1:]:
            ok, detail = _compare(other, dists[0], max_n)
            if not ok:
                return ok, detail
        return True, ""

    report.add(
        "min over P_n = zero over A_n = idr over F_n",
        (0, max_n),
        lambda: same(
            _distribution(posets, (stat_min,), max_n),
            _distribution(seqs, (_zero,), max_n),
            _distribution(perms, (initial_descending_run,), max_n),
        ),
    )
    report.add(
        "mag over P_n = asc + 1 over A_n",
        (0, max_n),
        lambda: same(
            _distribution(posets, (_mag,), max_n),
            # the empty sequence has no ascents and magnitude 0
            _distribution(seqs, (lambda a: stat_asc(a) + 1 if a else 0,), max_n),
        ),
    )
    return report


def suite_rgf(max_n: int = 8) -> VerifyReport:
    report = VerifyReport("rgf")

    def runs() -> tuple[bool, str]:
        for alpha in _seqs(max_n):
            is_rgf_runs(alpha)
        return True, ""

    def fixed() -> tuple[bool, str]:
        bad = [a for a in _seqs(max_n) if delta(a) != a]
        return not bad, f"moved: {bad[:3]}" if bad else ""

    def same_sets() -> tuple[bool, str]:
        for n in range(max_n + 1):
            if set(enumerate_ascent_sequences(n, "0101")) != set(enumerate_ascent_sequences(n, "101")):
                return False, f"n={n}: sets differ"
        return True, ""

    report.add("A_n(101) entries split into record runs", (0, max_n), runs)
    report.add("Delta fixes A_n(101)", (0, max_n), fixed)
    report.add("A_n(0101) = A_n(101)", (0, max_n), same_sets)
    return report


SUITES: dict[str, Callable[..., VerifyReport]] = {
    "catalan": suite_catalan,
    "fishburn": suite_fishburn,
    "wilf": suite_wilf,
    "nonnesting": suite_nonnesting,
    "bijections": suite_bijections,
    "restrictions": suite_restrictions,
    "width": suite_width,
    "narayana": suite_narayana,
    "ballot": suite_ballot,
    "joint": suite_joint,
    "remark": suite_remark,
    "corollaries": suite_corollaries,
    "kitaev-remmel": suite_kitaev_remmel,
    "rgf": suite_rgf,
}


def run_suite(name: str, max_n: int | None = None) -> VerifyReport:
    fn = SUITES[name]
    return fn() if max_n is None else fn(max_n)


# -- the open question on non-crossing runs ----------------------------------------


@dataclass
class ConjectureRow:
    n: int
    nr_p1: str
    h_3plus1: str
    h_dyck: str

    @property
    def agree(self) -> bool:
        return self.nr_p1 == self.h_3plus1 == self.h_dyck


def _row(values: Iterable[int]) -> str:
    return format_poly({(e, 0, 0): c for e, c in Counter(values).items()})


def conjecture_rows(max_n: int = 9) -> list[ConjectureRow]:
    """Distributions of nr over M_n(P1), h over P_n(3+1) and h over D_n; reported, never asserted."""
    rows = []
    for n in range(max_n + 1):
        rows.append(
            ConjectureRow(
                n,
                _row(stat_nr(m) for m in avoiders(n, P1)),
                _row(stat_height(p) for p in enumerate_posets(n, "3+1")),
                _row(bij.dyck_height(mu) for mu in bij.enumerate_dyck(n)),
            )
        )
    return rows


