"""Exact truncated power series in ``t`` with polynomial coefficients in ``x, y, z``.

A coefficient is a sparse map from exponent triples ``(i, j, k)`` to
integers, standing for the monomial ``x^i y^j z^k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import NonUnitConstantTerm

Monomial = tuple[int, int, int]
Poly = dict[Monomial, int]

DEFAULT_ORDER = 12
VARS = ("x", "y", "z")


def _clean(p: Mapping[Monomial, int]) -> Poly:
    return {m: c for m, c in p.items() if c}


def poly_add(p: Mapping[Monomial, int], q: Mapping[Monomial, int], sign: int = 1) -> Poly:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + sign * c
    return _clean(out)


def poly_mul(p: Mapping[Monomial, int], q: Mapping[Monomial, int]) -> Poly:
    out: Poly = {}
    for (a, b, c), u in p.items():
        for (d, e, f), v in q.items():
            key = (a + d, b + e, c + f)
            out[key] = out.get(key, 0) + u * v
    return _clean(out)


def format_poly(p: Mapping[Monomial, int]) -> str:
    if not p:
        return "0"
    terms = []
    for mono in sorted(p, key=lambda m: (sum(m), m)):
        coef = p[mono]
        factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, mono) if e]
        body = "*".join(factors)
        if not body:
            text = str(abs(coef))
        elif abs(coef) == 1:
            text = body
        else:
            text = f"{abs(coef)}*{body}"
        terms.append(("-" if coef < 0 else "+", text))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, text in terms[1:]:
        out += f" {sign} {text}"
    return out


def monomial(coef: int = 1, x: int = 0, y: int = 0, z: int = 0) -> Poly:
    return {(x, y, z): coef} if coef else {}


@dataclass(frozen=True)
class Series:
    order: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        coeffs = tuple(_clean(c) for c in self.coeffs[: self.order + 1])
        coeffs += ({},) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, p: Poly | int, order: int = DEFAULT_ORDER) -> "Series":
        if isinstance(p, int):
            p = monomial(p)
        return cls(order, (p,))

    @classmethod
    def t(cls, order: int = DEFAULT_ORDER, coef: Poly | None = None) -> "Series":
        return cls(order, ({}, coef if coef is not None else monomial(1)))

    @classmethod
    def from_ints(cls, values: Iterable[int], order: int | None = None) -> "Series":
        values = list(values)
        return cls(len(values) - 1 if order is None else order, tuple(monomial(v) for v in values))

    def __getitem__(self, d: int) -> Poly:
        return self.coeffs[d] if 0 <= d <= self.order else {}

    def _order_with(self, other: "Series") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "Series") -> "Series":
        n = self._order_with(other)
        return Series(n, tuple(poly_add(self[d], other[d]) for d in range(n + 1)))

    def __sub__(self, other: "Series") -> "Series":
        n = self._order_with(other)
        return Series(n, tuple(poly_add(self[d], other[d], -1) for d in range(n + 1)))

    def __neg__(self) -> "Series":
        return Series(self.order, tuple({m: -c for m, c in p.items()} for p in self.coeffs))

    def __mul__(self, other: "Series") -> "Series":
        n = self._order_with(other)
        out = []
        for d in range(n + 1):
            acc: Poly = {}
            for i in range(d + 1):
                if self[i] and other[d - i]:
                    acc = poly_add(acc, poly_mul(self[i], other[d - i]))
            out.append(acc)
        return Series(n, tuple(out))

    def scale(self, p: Poly) -> "Series":
        return Series(self.order, tuple(poly_mul(p, c) for c in self.coeffs))

    def shift(self, k: int = 1) -> "Series":
        """Multiply by ``t^k``."""
        return Series(self.order, ({},) * k + self.coeffs)

    def reciprocal(self) -> "Series":
        c0 = self[0]
        if c0 not in ({(0, 0, 0): 1}, {(0, 0, 0): -1}):
            raise NonUnitConstantTerm(f"constant term {format_poly(c0)} is not +1 or -1")
        u = c0[(0, 0, 0)]
        inv: list[Poly] = [monomial(u)]
        for d in range(1, self.order + 1):
            acc: Poly = {}
            for i in range(1, d + 1):
                if self[i] and inv[d - i]:
                    acc = poly_add(acc, poly_mul(self[i], inv[d - i]))
            inv.append({m: -u * c for m, c in acc.items()})
        return Series(self.order, tuple(inv))

    def truncate(self, order: int) -> "Series":
        return Series(min(order, self.order), self.coeffs)

    def specialize(self, **values: int) -> "Series":
        """Substitute integers for some of ``x``, ``y``, ``z``."""
        idx = {VARS.index(k): v for k, v in values.items()}
        out = []
        for p in self.coeffs:
            acc: Poly = {}
            for mono, c in p.items():
                key = list(mono)
                for i, v in idx.items():
                    c *= v ** key[i]
                    key[i] = 0
                acc = poly_add(acc, {tuple(key): c})
            out.append(acc)
        return Series(self.order, tuple(out))

    def swap(self, a: str, b: str) -> "Series":
        i, j = VARS.index(a), VARS.index(b)
        out = []
        for p in self.coeffs:
            q = {}
            for mono, c in p.items():
                key = list(mono)
                key[i], key[j] = key[j], key[i]
                q[tuple(key)] = c
            out.append(q)
        return Series(self.order, tuple(out))

    def __eq__(self, other: object) -> bool:
        # series of different orders compare on their common truncation
        if not isinstance(other, Series):
            return NotImplemented
        n = self._order_with(other)
        return all(self[d] == other[d] for d in range(n + 1))

    __hash__ = None  # type: ignore[assignment]

    def ints(self) -> list[int]:
        """Coefficients of a series whose coefficients are plain integers."""
        out = []
        for p in self.coeffs:
            if any(m != (0, 0, 0) for m in p):
                raise ValueError(f"coefficient {format_poly(p)} is not a constant")
            out.append(p.get((0, 0, 0), 0))
        return out

    def to_json(self) -> str:
        data = {
            str(d): {_mono_key(m): c for m, c in sorted(p.items())}
            for d, p in enumerate(self.coeffs)
            if p
        }
        return json.dumps(data, sort_keys=False)

    def __str__(self) -> str:
        parts = []
        for d, p in enumerate(self.coeffs):
            if p:
                parts.append(f"t^{d}: {format_poly(p)}")
        return "\n".join(parts) if parts else "0"


def _mono_key(m: Monomial) -> str:
    return "".join(v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, m) if e) or "1"


# -- named series -----------------------------------------------------------


def catalan_series(order: int = DEFAULT_ORDER) -> Series:
    c = [1]
    for n in range(1, order + 1):
        c.append(sum(c[k - 1] * c[n - k] for k in range(1, n + 1)))
    return Series.from_ints(c)


def narayana_series(order: int = DEFAULT_ORDER) -> Series:
    """Solve ``N = 1 + t(x-1)N + tN^2`` one coefficient at a time."""
    xm1 = {(1, 0, 0): 1, (0, 0, 0): -1}
    coeffs: list[Poly] = [monomial(1)]
    for n in range(1, order + 1):
        acc = poly_mul(xm1, coeffs[n - 1])
        for i in range(n):
            acc = poly_add(acc, poly_mul(coeffs[i], coeffs[n - 1 - i]))
        coeffs.append(acc)
    return Series(order, tuple(coeffs))


def _var(name: str) -> Poly:
    exps = [0, 0, 0]
    exps[VARS.index(name)] = 1
    return {tuple(exps): 1}


def ballot_series(var: str = "x", order: int = DEFAULT_ORDER) -> Series:
    """``1 / (1 - v t C(t))``."""
    one = Series.constant(1, order)
    return (one - catalan_series(order).scale(_var(var)).shift()).reciprocal()


def fishburn_series(order: int = DEFAULT_ORDER) -> Series:
    """Sum over ``n`` of the products ``(1 - (1-t)^k)`` for ``k = 1..n``, truncated."""
    one = Series.constant(1, order)
    one_minus_t = one - Series.t(order)
    total = one
    prod = one
    power = one
    # the n-th product has t-valuation n, so terms past the order vanish
    for k in range(1, order + 1):
        power = power * one_minus_t
        prod = prod * (one - power)
        total = total + prod
    return total


def thm15_rhs(order: int = DEFAULT_ORDER) -> Series:
    """``1 + y z t C(y,t) C(z,t)``: joint first-crossing / block series."""
    one = Series.constant(1, order)
    core = ballot_series("y", order) * ballot_series("z", order)
    return one + core.scale(monomial(1, y=1, z=1)).shift()


def thm16_rhs(order: int = DEFAULT_ORDER) -> Series:
    """``1 + x y z t / ((1 - y t N) (1 - z t (N + x - 1)))``."""
    one = Series.constant(1, order)
    n = narayana_series(order)
    xm1 = Series.constant({(1, 0, 0): 1, (0, 0, 0): -1}, order)
    left = (one - n.scale(_var("y")).shift()).reciprocal()
    right = (one - (n + xm1).scale(_var("z")).shift()).reciprocal()
    return one + (left * right).scale(monomial(1, 1, 1, 1)).shift()


Statistic = Callable[[object], int]


def distribution_polynomial(
    objects: Iterable[object],
    stats: tuple[Statistic, ...] = (),
    size: Callable[[object], int] = len,
    order: int | None = None,
) -> Series:
    """Sum of ``x^s1 y^s2 z^s3 t^size`` over the objects (up to three statistics)."""
    if len(stats) > 3:
        raise ValueError("at most three statistics (x, y, z)")
    buckets: dict[int, Poly] = {}
    for obj in objects:
        exps = [0, 0, 0]
        for i, stat in enumerate(stats):
            exps[i] = stat(obj)
        d = size(obj)
        row = buckets.setdefault(d, {})
        key = tuple(exps)
        row[key] = row.get(key, 0) + 1
    top = max(buckets, default=0) if order is None else order
    return Series(top, tuple(buckets.get(d, {}) for d in range(top + 1)))


def coefficient_poly(rows: Mapping[int, int]) -> Poly:
    """Univariate ``sum c_e x^e`` from a map exponent -> coefficient."""
    return _clean({(e, 0, 0): c for e, c in rows.items()})
