"""Follow one object through each of the maps."""

from stoimenow import bijections as bij
from stoimenow.matchings import parse_matching
from stoimenow.sequences import delta, lambda_, transpose_T

mu = "UUDUUDDDUDUD"
m = bij.gamma(mu)
print(f"Dyck path {mu} -> nonnesting matching {m}")
first, rest = bij.split_p1(m)
print(f"split at the first block: {first} | {rest}")
print(f"glued back: {bij.glue_p1(first, rest)}")

start = parse_matching("1-3,2-10,4-7,5-8,6-11,9-12,13-16,14-18,15-21,17-19,20-22")
steps: list = []
end = bij.phi(start, 4, steps)
print(f"\nphi moves a P2-avoider to a P4-avoider in {len(steps)} steps:")
for s in steps:
    print(f"  {s}")
print(f"and back: {bij.phi_inverse(end, 4) == start}")

for text in ("1-2,3-4", "1-3,2-4", "1-4,2-5,3-6,7-8"):
    p2 = parse_matching(text)
    print(f"\n{p2}: psi = {bij.psi_p2(p2)}, upsilon = {bij.upsilon_p2(p2)}")

alpha = (0, 1, 0, 1, 3, 1, 1, 2)
print(f"\nascent sequence {alpha}")
print(f"  raised: {delta(alpha)}")
print(f"  sorted into a permutation: {transpose_T(delta(alpha))} (= lambda {lambda_(alpha)})")
