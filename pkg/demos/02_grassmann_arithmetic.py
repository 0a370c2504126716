"""
Arithmetic in the Pontryagin ring
=================================

H_*(G^r; Q) is a Grassmann algebra on generators t^k_i.  Odd generators
anticommute and square to zero, so every product has a canonical form.
"""

from autfr_homology.grassmann import Context, HomologyClass, basis_of_degree

ctx = Context(degrees=(3, 5), r=3)  # the [3, 5] degree list, three copies
t = lambda k, i: HomologyClass.generator(ctx, k, i)

print("t2_3 * t2_2      =", t(2, 3) * t(2, 2))
print("t1_1 * t1_1      =", t(1, 1) * t(1, 1))
print("(t1_1+t1_3)*t1_3 =", (t(1, 1) + t(1, 3)) * t(1, 3))

# classes can be typed in any order; output is canonical
x = HomologyClass.parse(ctx, "t2_2 t1_3 t2_1 t1_1")
print("parsed           :", x, " degree", x.is_homogeneous())

# a graded piece of the algebra, in bit-set order
print("H_8 basis:", [ctx.monomial_str(m) for m in basis_of_degree(ctx, 8)])
