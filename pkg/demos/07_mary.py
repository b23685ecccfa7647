"""Integer bases: m-ary partitions and their congruence modulo m."""

from betapart.enumerator import count_integer_base
from betapart.mary import afs_congruence_check, bm

print("b_2(0..16):", [bm(2, n) for n in range(17)])
print("b_2(37) =", bm(2, 37))
print("enumerator agrees for m=3, n<=100:",
      all(count_integer_base(3, n) == bm(3, n) for n in range(101)))
print("b_m(mn) = prod(digits+1) mod m for m in 2,3,5, n<=200:",
      all(afs_congruence_check(m, n)[2] for m in (2, 3, 5) for n in range(201)))
