"""Compare enumerated statistic distributions with their closed forms."""

from stoimenow.matchings import stat_bl, stat_fcr, stat_mcr
from stoimenow.patterns import P1, P2, avoiders
from stoimenow.series import distribution_polynomial, format_poly, narayana_series, thm16_rhs

N = 6
objs = [m for n in range(N + 1) for m in avoiders(n, P2)]
got = distribution_polynomial(objs, (stat_mcr,), size=lambda m: m.n, order=N)
want = narayana_series(N)
for d in range(N + 1):
    mark = "ok" if got[d] == want[d] else "MISMATCH"
    print(f"t^{d}: {format_poly(got[d]):45} {mark}")

joint = distribution_polynomial(
    [m for n in range(N + 1) for m in avoiders(n, P1)],
    (stat_mcr, stat_fcr, stat_bl),
    size=lambda m: m.n,
    order=N,
)
print(f"\njoint (mcr, fcr, bl) over P1-avoiders matches the closed form: {joint == thm16_rhs(N)}")
print(f"t^3 coefficient: {format_poly(joint[3])}")
