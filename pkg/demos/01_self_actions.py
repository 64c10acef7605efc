"""
Groups acting on themselves
===========================

Build a few small groups, validate their actions and count every
self-action a group admits.
"""

import numpy as np

from gwa import (FiniteGwa, conjugation_gwa, cyclic_group, enumerate_self_actions, identity_action_gwa,
                 is_reduced, klein_four, symmetric_group, validate_gwa)

# S3 acting on itself by conjugation: g^h = -h + g + h
s3 = conjugation_gwa(symmetric_group(3))
print(s3.act)
print("valid:", validate_gwa(s3).ok, " reduced:", is_reduced(s3).ok)

# the identity action g^h = g is always valid; it is reduced when the group is abelian
print("Z4 identity reduced:", is_reduced(identity_action_gwa(cyclic_group(4))).ok)
print("S3 identity reduced:", is_reduced(identity_action_gwa(symmetric_group(3))).ok)

# a broken table: Z2 with 1^1 = 0. The report names the law and a witness.
z2 = cyclic_group(2)
bad = FiniteGwa("broken", z2.add, z2.neg, np.array([[0, 0], [1, 0]]))
print(validate_gwa(bad).to_text())

# every self-action of a few groups
for grp in (cyclic_group(2), cyclic_group(4), klein_four(), symmetric_group(3)):
    acts = list(enumerate_self_actions(grp))
    reduced = sum(is_reduced(g).ok for g in acts)
    print(f"{grp.name}: {len(acts)} self-actions, {reduced} reduced")
