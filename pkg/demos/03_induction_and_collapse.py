"""
Induced orbits and the collapse
===============================

Inducing from gl_a x g' adds twice the gl_a partition to the g' partition
row by row, then moves down to the nearest valid partition (the collapse).
The induced orbit always has dimension dim(orbit on the Levi) plus twice the
dimension of the nilradical.
"""

from liesheets import LeviSpec, collapse, induce, orbit_dimension, parse_kind, parse_partition

P = parse_partition

sp6 = parse_kind("C:6")
print("C-collapse of [3,1^3]:", collapse(P("3,1^3"), sp6))

levi = LeviSpec(sp6, (1,), 4)  # gl_1 x sp_4
res = induce(levi, [P("1")], P("1^4"))
print("induced from the zero orbit of gl_1 x sp_4:", res.lam)
print("dimension", orbit_dimension(res.lam, sp6), "= 2 *", levi.nilradical_dim)

###############################################################################
# Two gl blocks can be processed in either order.

so11 = parse_kind("B:11")
for blocks, orbits in [((1, 2), [P("1"), P("2")]), ((2, 1), [P("2"), P("1")])]:
    out = induce(LeviSpec(so11, blocks, 11 - 2 * sum(blocks)), orbits, P("3,1^2"))
    print(f"blocks {blocks}: {out.lam}")

###############################################################################
# In sl_n, inducing the zero orbit from a Levi with blocks a_1, ..., a_r gives
# the orbit whose dual partition is the sorted block sizes.

sl7 = parse_kind("A:7")
for blocks in [(3, 2, 2), (1, 1, 1, 1, 1, 1, 1), (4, 3)]:
    print(blocks, "->", induce(LeviSpec(sl7, blocks)).lam)
