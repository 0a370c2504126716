"""
The kernel is IA_r, and only the rank matters
=============================================

Magnus generators act trivially on the abelianization, so they act trivially
on homology in every degree.  A word that moves the abelianization shows up in
the t^1 block.  And the full matrices do not see the degree list at all, only
how many spheres there are.
"""

from autfr_homology.action import full_matrix
from autfr_homology.freegroup import format_letters, magnus_factorizations
from autfr_homology.grassmann import Context
from autfr_homology.verify import verify_theorems

ctx = Context((3, 5), 3)
for name, f, word in magnus_factorizations(3)[:4]:
    print(f"{name} = {format_letters(word):<32} {f}  identity: {full_matrix(f, ctx).is_identity()}")

report = verify_theorems(ctx, trials=20, seed=1)
print("\n".join(report.lines()))

mats = {d: full_matrix("R(1,2) L(2,1) v(2)", Context(d, 2)) for d in [(3, 5, 7), (3, 7, 11), (3, 3, 3)]}
first = next(iter(mats.values()))
for degrees, m in mats.items():
    print(degrees, "same 64x64 matrix as (3, 5, 7):", m.sparse_columns == first.sparse_columns)
