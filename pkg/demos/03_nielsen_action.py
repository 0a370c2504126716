"""
Nielsen transformations acting on homology
==========================================

A right Nielsen move R(1,3) sends a_3 to a_3 a_1.  On homology it sends every
t^k_1 to t^k_1 + t^k_3 and fixes the other generators.  Applied to
t1_1 t1_3 t2_1 t2_2 the square terms vanish and one sign appears.
"""

from autfr_homology.action import act_path_a, endo_of_letter
from autfr_homology.freegroup import Letter, letter_to_autmap
from autfr_homology.grassmann import Context, HomologyClass

ctx = Context((3, 5), 3)
letter = Letter("R", 1, 3)
print("on F_3:", letter_to_autmap(letter, 3))
print("on homology:", endo_of_letter(letter, ctx))

x = HomologyClass.parse(ctx, "t1_1 t1_3 t2_1 t2_2")
print(f"R(1,3) . ({x}) = {act_path_a('R(1,3)', x)}")

# transpositions and inversions
print("s(1,2) . t1_1 t2_2 =", act_path_a("s(1,2)", HomologyClass.parse(ctx, "t1_1 t2_2")))
print("v(1)   . t1_1      =", act_path_a("v(1)", HomologyClass.parse(ctx, "t1_1")))
