"""
Semi-direct products and split extensions
=========================================

Turn an action triple into B ⋉ A, wrap it in its split extension and read
the triple back off the extension.
"""

from gwa import (build_semidirect, canonical_split_extension, conjugation_gwa, enumerate_ideals,
                 extract_derived_actions, ideal_action, naive_self_action, self_action,
                 symmetric_group, validate_candidate)

s3 = conjugation_gwa(symmetric_group(3))
t = self_action(s3)

c = build_semidirect(s3, s3, t)
print(c.product.name, "order", c.product.order, "valid:", validate_candidate(c).ok)

x = canonical_split_extension(c)
print("split extension laws:", x.check().ok)
print("triple recovered:", extract_derived_actions(x).same_tables(t))

# each ideal acts on itself through the ambient algebra
for ideal in enumerate_ideals(s3):
    ta = ideal_action(s3, ideal)
    back = extract_derived_actions(canonical_split_extension(build_semidirect(s3, ta.target, ta)))
    print(f"ideal {ideal.elements}: roundtrip {back.same_tables(ta)}")

# reusing the action as the dual action gives an invalid product
bad = build_semidirect(s3, s3, naive_self_action(s3))
print("naive product failures:", validate_candidate(bad).failed)
