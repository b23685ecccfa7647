"""Certificates that some element has infinitely many partitions."""

from betapart.quadfield import QuadPoly
from betapart.witness import complex_zero_partition, witness

for text in ["5,-5,1", "1,2,-1", "3,-1,-1", "1,1,3"]:
    fam = witness(QuadPoly.parse(text))
    print(text, fam.case.value, "target", fam.target if fam.target is not None else 0)
    for q in fam.take(3):
        print("   ", q)

for text in ["1,0,1", "1,-1,1", "2,-3,2"]:
    print(f"zero partition for {text}:", complex_zero_partition(QuadPoly.parse(text)))
