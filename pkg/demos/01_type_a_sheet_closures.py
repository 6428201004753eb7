"""
Sheet closures in sl_n
======================

Every sheet of sl_n holds exactly one nilpotent orbit, so sheets are named
by partitions.  The sheet of ``lam`` comes from a Levi subalgebra whose
block sizes are the dual partition, and one sheet sits in the closure of
another exactly when its Levi blocks are merges of the other's blocks.

This is a finer relation than the closure order on nilpotent orbits, and
the gap produces sheets whose closure is not a union of sheets.
"""

from liesheets import dominates, dual, parse_partition, sheet_from_orbit, sheet_precedes
from liesheets.type_a import find_block_merge, phenomenon2_counterexamples, sheet_poset_dot

P = parse_partition

# The two sheets of sl_5 through the orbits [3,2] and [3,1,1].
big, small = P("3,2"), P("3,1,1")
for lam in (big, small):
    s = sheet_from_orbit(lam)
    print(f"sheet {lam}: Levi blocks {s.levi_blocks}, orbits of dimension {s.orbit_dim}")

# The orbit [3,1,1] lies in the closure of the orbit [3,2] ...
print("orbit closure:", dominates(big, small))
# ... but the blocks 2,2,1 cannot be grouped into 3,1,1, so the sheet of
# [3,1,1] is not in the closure of the sheet of [3,2].
print("sheet closure:", sheet_precedes(small, big))

# When the relation does hold there is an explicit grouping of blocks.
print("grouping for [2,1] below [3]:", find_block_merge(P("2,1"), P("3")))
print("dual of [2,1] is", dual(P("2,1")))

###############################################################################
# All such pairs for small n.  Each pair (lam, lam') says: the closure of the
# sheet of lam' meets the sheet of lam (in its nilpotent orbit) but does not
# contain it.

for n in range(3, 8):
    pairs = phenomenon2_counterexamples(n)
    shown = ", ".join(f"{a} < {b}" for a, b in pairs[:4])
    print(f"n={n}: {len(pairs)} pairs  {shown}{' ...' if len(pairs) > 4 else ''}")

###############################################################################
# The Hasse diagram of sheet closures for n = 5, as Graphviz input.  Compare
# with the dominance order: there is no edge from 3,1,1 up to 3,2.

print(sheet_poset_dot(5))
