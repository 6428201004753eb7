"""
Checking the type A formulas with exact matrices
================================================

Orbit dimensions and closure order in sl_n can be read off partitions.
Here they are recomputed from Jordan matrices with exact rational
arithmetic: the centralizer is the kernel of X -> XM - MX, and closure is
decided by ranks of powers.
"""

from liesheets import centralizer_dim, closure_leq_via_ranks, dual, jordan_matrix, parse_partition
from liesheets.matrix_oracle import oracle_check, power_ranks

P = parse_partition

lam = P("3,2")
J = jordan_matrix(lam)
for row in J.entries:
    print(" ".join(str(x) for x in row))
print("centralizer dimension:", centralizer_dim(J), "| sum of squared dual parts:",
      sum(d * d for d in dual(lam)))

print("rank profile of [3,2]:  ", power_ranks(P("3,2")))
print("rank profile of [3,1,1]:", power_ranks(P("3,1,1")))
print("[3,1,1] in closure of [3,2]:", closure_leq_via_ranks(P("3,1,1"), P("3,2")))
print("[3,1] in closure of [2,2]:  ", closure_leq_via_ranks(P("3,1"), P("2,2")))

print(oracle_check(6).render())
