"""
Two routes to the same matrix
=============================

Path A pushes a class through each generator letter.  Path B only looks at the
abelianization matrix of the automorphism and acts on each k-block of a
monomial by minors of its transpose.  They agree, and the matrices compose in
reversed word order because precomposition is a right action.
"""

import random

from autfr_homology.action import full_matrix, representation_matrix
from autfr_homology.freegroup import abelianization_matrix, parse_letters, random_letters, word_to_autmap
from autfr_homology.grassmann import Context

ctx = Context((3, 5), 2)
word = parse_letters("R(1,2) L(2,1) v(1) Ri(1,2)")
f = word_to_autmap(word, 2)
print("automorphism:", f)
print("abelianization:", abelianization_matrix(f))

a = representation_matrix(word, 8, ctx)
b = representation_matrix(f, 8, ctx)
print("H_8 via path A:", a.rows())
print("H_8 via path B:", b.rows())

rng = random.Random(0)
agree = 0
for _ in range(50):
    w = random_letters(2, 20, rng)
    agree += full_matrix(w, ctx) == full_matrix(word_to_autmap(w, 2), ctx)
print(f"random words where the full 16x16 matrices agree: {agree}/50")

u, v = parse_letters("R(1,2)"), parse_letters("s(1,2) v(2)")
print("M(u v) == M(v) M(u):", full_matrix(u + v, ctx) == full_matrix(v, ctx) @ full_matrix(u, ctx))
