"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal summary
prints one PASS/FAIL line per criterion.  Everything here is exact integer
arithmetic, so every comparison is equality."""

import itertools
import math
import random
import time

import pytest
import sympy

from autfr_homology.action import act_path_a, act_path_b, full_matrix, representation_matrix
from autfr_homology.catalog import (
    EXCEPTIONAL_DEGREES,
    GroupSpec,
    SimpleFactor,
    catalog_entries,
    degrees_of,
    dimension_of,
    parse_group,
    poincare_polynomial,
)
from autfr_homology.freegroup import abelianization_matrix, random_letters, word_to_autmap
from autfr_homology.grassmann import Context, HomologyClass, basis_of_degree, canonicalize
from autfr_homology.verify import (
    check_faithful,
    check_ia,
    check_paths,
    check_rank_invariance,
    random_non_ia_words,
)

crit = pytest.mark.criterion


# 1 -------------------------------------------------------------------------------

@crit(1, "N^R_{1,3} example: exact class, < 1 s")
def test_c1_worked_example():
    ctx = Context((3, 5), 3)
    start = time.perf_counter()
    x = HomologyClass.parse(ctx, "t1_1 t1_3 t2_1 t2_2")
    y = act_path_a("R(1,3)", x)
    elapsed = time.perf_counter() - start
    expected = (HomologyClass.product(ctx, [(1, 1), (1, 3), (2, 1), (2, 2)])
                - HomologyClass.product(ctx, [(1, 1), (1, 3), (2, 2), (2, 3)]))
    assert y == expected
    assert elapsed < 1.0


# 2 -------------------------------------------------------------------------------

@crit(2, "Poincare polynomials: [3,5] and SU(2)^n for n <= 6")
def test_c2_poincare():
    assert poincare_polynomial(GroupSpec.from_degrees([3, 5]), 1) == [1, 0, 0, 1, 0, 1, 0, 0, 1]
    for n in range(1, 7):
        spec = parse_group("x".join(["A1"] * n))
        coeffs = poincare_polynomial(spec, 1)
        expected = [0] * (3 * n + 1)
        for j in range(n + 1):
            expected[3 * j] = math.comb(n, j)
        assert coeffs == expected
        # the same group as SU(2) with r = n
        assert poincare_polynomial([3], n) == expected


# 3 -------------------------------------------------------------------------------

PATH_CONTEXTS = [((3,), 2), ((3,), 4), ((3, 5), 2), ((3, 5), 3), ((3, 5, 7), 2), ((3,), 6),
                 ((3, 5, 7), 4), ((3, 5, 7, 9), 3), ((3, 5, 7, 9, 11, 13), 2), ((3, 5), 6)]


@crit(3, "path A == path B on every basis monomial, 1000 words of length <= 20, n*r <= 12, <= 5 min")
def test_c3_cross_path():
    rng = random.Random(2024)
    per_context = 1000 // len(PATH_CONTEXTS)
    start = time.perf_counter()
    total = 0
    for degrees, r in PATH_CONTEXTS:
        ctx = Context(degrees, r)
        assert ctx.size <= 12
        words = [random_letters(r, 20, rng) for _ in range(per_context)]
        result = check_paths(ctx, words)
        assert result.passed, result.counterexample
        total += result.cases
    assert total == 1000
    assert time.perf_counter() - start <= 300


# 4 -------------------------------------------------------------------------------

@crit(4, "Magnus IA generators act as the identity in every degree (A1, A2, B2; r <= 4)")
@pytest.mark.parametrize("group", ["A1", "A2", "B2"])
@pytest.mark.parametrize("r", [2, 3, 4])
def test_c4_ia_trivial(group, r):
    ctx = Context(degrees_of(parse_group(group)), r)
    result = check_ia(ctx)
    assert result.passed, result.counterexample
    assert result.cases == r * (r - 1) + r * math.comb(r - 1, 2)


# 5 -------------------------------------------------------------------------------

@crit(5, "200 random non-IA words per context act nontrivially; t^1 block = exponent-sum matrix")
@pytest.mark.parametrize("degrees, r", [((3,), 2), ((3, 5), 3), ((3, 7), 2), ((3, 5, 7), 2), ((3,), 4)])
def test_c5_faithful_mod_ia(degrees, r):
    ctx = Context(degrees, r)
    words = random_non_ia_words(r, 200, 20, random.Random(f"c5:{degrees}:{r}"))
    result = check_faithful(ctx, words)
    assert result.passed, result.counterexample
    assert result.cases == 200
    for w in words[:20]:
        assert not full_matrix(w, ctx).is_identity()


# 6 -------------------------------------------------------------------------------

@crit(6, "full matrices identical over [3,5,7], [3,7,11], [3,3,3] (r=2), 200 words")
def test_c6_rank_only():
    contexts = [Context(d, 2) for d in ((3, 5, 7), (3, 7, 11), (3, 3, 3))]
    rng = random.Random(6)
    words = [random_letters(2, 20, rng) for _ in range(200)]
    result = check_rank_invariance(contexts, words)
    assert result.passed, result.counterexample
    assert result.cases == 200


# 7 -------------------------------------------------------------------------------

def bubble_sign(positions):
    if len(set(positions)) != len(positions):
        return 0
    xs, sign = list(positions), 1
    for end in range(len(xs) - 1, 0, -1):
        for a in range(end):
            if xs[a] > xs[a + 1]:
                xs[a], xs[a + 1] = xs[a + 1], xs[a]
                sign = -sign
    return sign


def order_patterns(length, max_distinct):
    """Lists of the given length up to order-preserving relabelling, <= max_distinct values."""
    for m in range(1, max_distinct + 1):
        for xs in itertools.product(range(m), repeat=length):
            if len(set(xs)) == m:
                yield m, xs


@crit(7, "canonicalize sign == adjacent-swap oracle; basis dimensions match Poincare coefficients")
def test_c7_sign_oracle():
    ctx12 = Context((3, 5, 7), 4)
    # every list of length <= 5 over all 12 generators
    for length in range(6):
        for pos in itertools.product(range(12), repeat=length):
            assert canonicalize(pos, ctx12)[1] == bubble_sign(pos)
    # every list of length <= 8 over a 4-generator context
    ctx4 = Context((3, 5), 2)
    for length in range(9):
        for pos in itertools.product(range(4), repeat=length):
            assert canonicalize(pos, ctx4)[1] == bubble_sign(pos)
    # lengths 6..8 over 12 generators: every order pattern (all of them at
    # length 6, those with <= 5 distinct values beyond), each placed on a
    # random increasing set of positions
    rng = random.Random(7)
    for length in range(6, 9):
        for m, xs in order_patterns(length, 6 if length == 6 else 5):
            slots = sorted(rng.sample(range(12), m))
            pos = [slots[x] for x in xs]
            assert canonicalize(pos, ctx12)[1] == bubble_sign(pos)
    # and random lists of length 6..8 with any number of distinct values
    for _ in range(30000):
        pos = [rng.randrange(12) for _ in range(rng.randint(6, 8))]
        assert canonicalize(pos, ctx12)[1] == bubble_sign(pos)


@crit(7, "canonicalize sign == adjacent-swap oracle; basis dimensions match Poincare coefficients")
@pytest.mark.parametrize("degrees, r", [((3,), 12), ((3, 5), 6), ((3, 5, 7), 4), ((3, 7, 11, 7), 3),
                                        ((3, 3, 5), 4), ((3, 11), 5)])
def test_c7_dimensions(degrees, r):
    ctx = Context(degrees, r)
    coeffs = poincare_polynomial(degrees, r)
    dims = [len(basis_of_degree(ctx, d)) for d in range(len(coeffs))]
    assert dims == coeffs
    assert sum(dims) == 2 ** ctx.size


# 8 -------------------------------------------------------------------------------

@crit(8, "anti-homomorphism, grading, ring-map and top-degree det^n laws on >= 100 instances each")
def test_c8_anti_homomorphism():
    rng = random.Random(81)
    for i in range(100):
        degrees, r = [((3, 5), 2), ((3,), 3), ((3, 5), 3)][i % 3]
        ctx = Context(degrees, r)
        u, v = random_letters(r, 10, rng), random_letters(r, 10, rng)
        assert full_matrix(u + v, ctx) == full_matrix(v, ctx) @ full_matrix(u, ctx)


@crit(8, "anti-homomorphism, grading, ring-map and top-degree det^n laws on >= 100 instances each")
def test_c8_graded():
    rng = random.Random(82)
    ctx = Context((3, 5), 3)
    for _ in range(100):
        m = full_matrix(random_letters(3, 20, rng), ctx)
        for c, col in enumerate(m.sparse_columns):
            d = ctx.degree(m.basis[c])
            assert all(ctx.degree(m.basis[row]) == d for row, _ in col)


def random_class(ctx, rng, terms=4):
    return HomologyClass(ctx, {rng.randrange(1 << ctx.size): rng.randint(-3, 3) for _ in range(terms)})


@crit(8, "anti-homomorphism, grading, ring-map and top-degree det^n laws on >= 100 instances each")
def test_c8_ring_map():
    rng = random.Random(83)
    ctx = Context((3, 5), 3)
    for _ in range(100):
        w = random_letters(3, 20, rng)
        f = word_to_autmap(w, 3)
        x, y = random_class(ctx, rng), random_class(ctx, rng)
        assert act_path_a(w, x * y) == act_path_a(w, x) * act_path_a(w, y)
        assert act_path_b(f, x * y) == act_path_b(f, x) * act_path_b(f, y)


@crit(8, "anti-homomorphism, grading, ring-map and top-degree det^n laws on >= 100 instances each")
def test_c8_top_degree():
    rng = random.Random(84)
    for i in range(100):
        degrees, r = [((3,), 3), ((3, 5), 2), ((3, 5, 7), 3)][i % 3]
        ctx = Context(degrees, r)
        w = random_letters(r, 20, rng)
        det = int(sympy.Matrix(abelianization_matrix(word_to_autmap(w, r))).det())
        top = representation_matrix(w, ctx.top_degree(), ctx)
        assert top.size == 1
        assert top.entry(0, 0) == det ** ctx.n
        assert top.entry(0, 0) in (1, -1)


# 9 -------------------------------------------------------------------------------

@crit(9, "sum of degrees == dimension for every family, ranks <= 25, and all exceptionals")
def test_c9_catalog():
    seen = set()
    for f in catalog_entries(25):
        assert sum(f.degrees()) == dimension_of(f)
        seen.add(f.family)
    assert seen == {"A", "B", "C", "D"} | set(EXCEPTIONAL_DEGREES)
    assert [dimension_of(SimpleFactor(e)) for e in ("G2", "F4", "E6", "E7", "E8")] == [14, 52, 78, 133, 248]
