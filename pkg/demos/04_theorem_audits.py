"""
Auditing the derived-action criterion
=====================================

Compare the law-based test for derived actions with validity of the
semi-direct product over every triple of Z2 on Z2, then sample Z3 on Z3.
"""

import numpy as np

from gwa import audit_implication, audit_theorem_3_3, audit_theorem_4_3
from gwa.io import fixture

z2, z3 = fixture("z2"), fixture("z3")

s = audit_theorem_3_3(z2, z2)
print(f"all triples: agree {s.agree}/{s.total}")

# every disagreement is a valid product from a triple that breaks the laws;
# all of them move 0_A under the star action
for triple, laws, product in s.disagreements:
    print(" star", np.array(triple["star"]).tolist(), "laws", laws, "product", product)

s = audit_theorem_3_3(z2, z2, filter=["0_A^b=0_A"])
print(f"with 0_A^b=0_A pinned: agree {s.agree}/{s.total}")

s = audit_theorem_4_3(z2, z2, filter=["0_A^b=0_A"])
print(f"reduced, pinned: agree {s.agree}/{s.total}")

# 3^27 triples is too many to scan, so sample with a fixed seed
s = audit_theorem_4_3(z3, z3, seed=1, samples=20_000)
print(f"Z3 on Z3, sampled: agree {s.agree}/{s.total} in {s.elapsed:.2f}s")

# the zero laws need the unit law for the dot action as well
print("without 0·a=a:", len(audit_implication(z2, z2).disagreements), "counterexamples")
fixed = audit_implication(z2, z2, premises=("(1_A)", "(2_A)", "(1_B)", "0·a=a"))
print("with 0·a=a:", len(fixed.disagreements), "counterexamples")
