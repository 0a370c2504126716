"""
Poincare polynomials of G^r
===========================

Over Q a compact semisimple group looks like a product of odd spheres.  The
catalog turns a Lie type into that list of sphere dimensions, and the Poincare
polynomial of G^r is prod (1 + x^d)^r.
"""

from autfr_homology.catalog import (
    SU, SO, degrees_of, dimension_of, format_polynomial, parse_group, poincare_polynomial,
)

# SU(3) is A2: spheres of dimension 3 and 5
spec = parse_group("A2")
print("A2 degrees:", degrees_of(spec))
print("H_*(SU(3))   :", format_polynomial(poincare_polynomial(spec, 1)))

# SU(2)^3 and (SU(2))^r with r = 3 are the same space
print("H_*(SU(2)^3) :", format_polynomial(poincare_polynomial(parse_group("A1xA1xA1"), 1)))
print("r = 3, A1    :", format_polynomial(poincare_polynomial(SU(2), 3)))

# the degrees always add up to the dimension of the group
for name in ["B3", "D4", "G2", "E8"]:
    (f,) = parse_group(name).factors
    print(f"{name}: degrees {f.degrees()} sum {sum(f.degrees())} dim {dimension_of(f)}")

# SO(8) in catalog order: the extra 2n-1 sphere comes last
print("SO(8):", degrees_of(SO(8)))
