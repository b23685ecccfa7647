"""Which bases beta make every partition count finite?"""

from betapart.classifier import classify
from betapart.quadfield import QuadPoly

for text in ["1,-1,-1", "1,-6,6", "1,2,-1", "5,-5,1", "3,-1,-1", "1,1,3", "1,-1,1"]:
    c = classify(QuadPoly.parse(text))
    print(f"{text:>8}: {c.verdict.value:<15} {c.reason.value:<20} target={c.to_dict()['witness_target']}")
