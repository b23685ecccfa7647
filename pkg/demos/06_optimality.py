"""Lemma on leading terms, the reciprocal bound and the lower bounds."""

from betapart.quadfield import QuadPoly
from betapart.verifier import reciprocal_bound, verify_lemmaE, verify_opt1, verify_opt2

f = QuadPoly(1, -6, 6)
print("lemma E for t^2-6t+6, n=2:", verify_lemmaE(f, 2).all_ok)

g = QuadPoly(1, -4, 2)          # beta = 2 + sqrt(2), Tr > Nm
rep = verify_opt1(g, 6)
print("reciprocal bound for 2+sqrt(2):", reciprocal_bound(g),
      "counts", [i.computed for i in rep.instances], "ok", rep.all_ok)

for text in ["1,-9,19", "1,-7,11"]:
    rep = verify_opt2(QuadPoly.parse(text))
    counts = [i.computed for i in rep.instances if i.input.get("kind") == "count"]
    print(f"lower bounds for {text}: counts {counts}, identities and bounds ok: {rep.all_ok}")
