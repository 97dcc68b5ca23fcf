"""Walk through the basic objects: Stoimenow matchings, patterns, posets."""

from stoimenow.matchings import matching_stats, parse_matching, stoimenow_matchings
from stoimenow.patterns import NAMED, avoiders
from stoimenow.posets import canonical_form, omega
from stoimenow.render import render_matching, render_poset

print("Stoimenow matchings with three arcs:")
for m in stoimenow_matchings(3):
    print(f"  {m}  {matching_stats(m)}")

print("\nCounts of each pattern class, n = 0..8:")
for name, q in NAMED.items():
    print(f"  {name}: {[len(avoiders(n, q)) for n in range(9)]}")

m = parse_matching("1-3,2-6,4-7,5-8,9-10,11-12")
print(f"\n{m} as an arc diagram:")
print(render_matching(m))

p = omega(m)
print("\nIts interval order (arc i below arc j when i closes before j opens):")
print(render_poset(p))
print(f"canonical form {canonical_form(p)}")
