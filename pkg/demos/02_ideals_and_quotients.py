"""
Ideals and quotients
====================

List the ideals of S3 under conjugation, close a seed into an ideal and
project onto the quotient.
"""

from gwa import (conjugation_gwa, enumerate_ideals, ideal_closure, is_ideal, is_morphism,
                 quotient_map, symmetric_group, SubsetMask)

s3 = conjugation_gwa(symmetric_group(3))

# permutations are numbered lexicographically, so A3 = {0, 3, 4}
for ideal in enumerate_ideals(s3):
    print("ideal:", ideal.elements)

# a transposition subgroup is not normal, so not an ideal
print(is_ideal(SubsetMask.of(s3, [0, 1])).to_text())

# the smallest ideal holding one transposition is everything
print("closure of {1}:", ideal_closure(s3, [1]).elements)
print("closure of {3}:", ideal_closure(s3, [3]).elements)

f = quotient_map(s3, SubsetMask.of(s3, [0, 3, 4]))
print("S3/A3 has order", f.target.order, "with map", f.map.tolist())
print("projection is a morphism:", is_morphism(f).ok)
