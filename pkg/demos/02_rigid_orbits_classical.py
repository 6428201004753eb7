"""
Rigid orbits whose closure contains a non-rigid orbit
=====================================================

A rigid nilpotent orbit is a sheet by itself.  If its closure contains a
non-rigid orbit, that closure cannot be a union of sheets: the sheets
through the non-rigid orbit contain non-nilpotent elements.

In type A only the zero orbit is rigid and this never happens.  In so_8 it
does, with the rigid orbit [3,2^2,1] and the non-rigid orbit [3,1^5].
"""

from liesheets import (
    NilpotentOrbit,
    is_induced,
    is_rigid,
    orbit_dimension,
    parse_kind,
    parse_partition,
    phenomenon1_counterexamples,
    valid_orbits,
)

so8 = parse_kind("D:8")

print("nilpotent orbits of so_8 (partition, dimension, rigid):")
for o in valid_orbits(so8):
    print(f"  {o.lam.exponent_str():>10}  {orbit_dimension(o.lam, so8):>3}  {is_rigid(o)}")

o1 = NilpotentOrbit(so8, parse_partition("3,2^2,1"))
o2 = NilpotentOrbit(so8, parse_partition("3,1^5"))
print("O1 rigid:", is_rigid(o1), " O2 rigid:", is_rigid(o2), " O2 induced:", is_induced(o2))

###############################################################################
# The rigidity test above is a closed-form partition criterion.  It is
# checked against an exhaustive search over induction data; here is that
# comparison for every classical algebra up to rank 6.

mismatches = 0
for fam, dims in {"B": range(3, 14, 2), "C": range(2, 13, 2), "D": range(4, 13, 2)}.items():
    for N in dims:
        kind = parse_kind(f"{fam}:{N}")
        mismatches += sum(is_rigid(o) == is_induced(o) for o in valid_orbits(kind))
print("criterion vs brute force mismatches:", mismatches)

###############################################################################
# Similar pairs in types B and C, found by search rather than by hand.
# The smallest cases are so_11 and sp_8.

for text in ["B:9", "B:11", "B:13", "C:6", "C:8", "C:10", "D:8", "A:6"]:
    kind = parse_kind(text)
    pairs = phenomenon1_counterexamples(kind)
    listing = "; ".join(f"[{hi.lam.exponent_str()}] > [{lo.lam.exponent_str()}]" for hi, lo in pairs[:3])
    print(f"{text}: {len(pairs)} pairs  {listing}")
