"""Mechanical checks of the kernel and image statements at desk scale.

Each suite returns a :class:`CheckResult`; :func:`verify_theorems` bundles them
into a :class:`Report`.  A failing check keeps the first counterexample (the
letter word, and where relevant the monomial whose images disagree).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .action import (
    RepMatrix,
    full_matrix,
    generator_block,
    representation_matrix,
)
from .freegroup import (
    Letter,
    format_letters,
    is_IA,
    magnus_factorizations,
    random_letters,
    word_to_autmap,
    abelianization_matrix,
)
from .grassmann import Context, degrees_present
from .linalg import transpose

SUITES = ("paths", "ia", "faithful", "rank-invariance")


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "cases": self.cases, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f" - {self.detail}" if self.detail else ""
        return f"{tag} {self.name} ({self.cases} cases){extra}"


@dataclass
class Report:
    context: Context
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "context": {"degrees": list(self.context.degrees), "r": self.context.r},
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _first_difference(a: RepMatrix, b: RepMatrix) -> dict | None:
    for c, (x, y) in enumerate(zip(a.sparse_columns, b.sparse_columns)):
        if x != y:
            m = a.basis[c]
            fmt = lambda col: {a.ctx.monomial_str(a.basis[r]): v for r, v in col}
            return {"monomial": a.ctx.monomial_str(m), "left": fmt(x), "right": fmt(y)}
    return None


def check_paths(ctx: Context, words: Iterable[Sequence[Letter]]) -> CheckResult:
    """Path A and path B give the same image on every basis monomial."""
    n = 0
    for w in words:
        n += 1
        a = full_matrix(w, ctx)
        b = full_matrix(word_to_autmap(w, ctx.r), ctx)
        if a != b:
            cx = {"word": format_letters(w)}
            cx.update(_first_difference(a, b) or {})
            return CheckResult("paths", False, n, "path A and path B disagree", cx)
    return CheckResult("paths", True, n, "path A == path B on all basis monomials")


def check_ia(ctx: Context, trials: int = 0, rng: random.Random | None = None,
             max_length: int = 6) -> CheckResult:
    """Magnus generators, and random products of them, act trivially in every degree."""
    n = 0
    degrees = degrees_present(ctx)
    facts = magnus_factorizations(ctx.r)

    def fail(detail, word, name=None):
        cx = {"word": format_letters(word)}
        if name:
            cx["generator"] = name
        return CheckResult("ia", False, n, detail, cx)

    for name, f, word in facts:
        n += 1
        if word_to_autmap(word, ctx.r) != f:
            return fail("letter factorization does not equal the Magnus generator", word, name)
        if not is_IA(f):
            return fail("Magnus generator not in IA", word, name)
        for d in degrees:
            if not representation_matrix(f, d, ctx).is_identity():
                return fail(f"path B matrix in degree {d} is not the identity", word, name)
            if not representation_matrix(word, d, ctx).is_identity():
                return fail(f"path A matrix in degree {d} is not the identity", word, name)
    rng = rng or random.Random(0)
    for _ in range(trials if facts else 0):
        n += 1
        word: list[Letter] = []
        for _ in range(rng.randint(1, max_length)):
            _, _, piece = rng.choice(facts)
            if rng.random() < 0.5:
                piece = tuple(l.inverse() for l in reversed(piece))
            word.extend(piece)
        if not is_IA(word_to_autmap(word, ctx.r)):
            return fail("product of IA generators left IA", word)
        if not full_matrix(word, ctx).is_identity():
            return fail("IA product acts nontrivially", word)
    return CheckResult("ia", True, n, f"{len(facts)} Magnus generators trivial in all degrees")


def random_non_ia_words(r: int, count: int, max_length: int, rng: random.Random):
    out = []
    while len(out) < count:
        w = random_letters(r, max_length, rng)
        if not is_IA(word_to_autmap(w, r)):
            out.append(w)
    return out


def check_faithful(ctx: Context, words: Iterable[Sequence[Letter]]) -> CheckResult:
    """Non-IA words act nontrivially; the t^1 block is exactly M^T."""
    n = 0
    for w in words:
        n += 1
        f = word_to_autmap(w, ctx.r)
        m = abelianization_matrix(f)
        full = full_matrix(w, ctx)
        block = generator_block(full, 1)
        expected = [list(row) for row in transpose(m)]
        cx = {"word": format_letters(w), "abelianization": [list(r) for r in m]}
        if block != expected:
            cx["block"] = block
            return CheckResult("faithful", False, n, "t^1 block differs from the exponent-sum matrix", cx)
        if full.is_identity() != is_IA(f):
            return CheckResult("faithful", False, n, "identity matrix does not match IA membership", cx)
    return CheckResult("faithful", True, n, "non-IA words act nontrivially; t^1 block = M^T")


def same_rank_contexts(ctx: Context) -> list[Context]:
    """Two other degree lists of the same length, for the rank-invariance check."""
    n = ctx.n
    options = [tuple(2 * m + 1 for m in range(1, n + 1)), (3,) * n, tuple(4 * m - 1 for m in range(1, n + 1))]
    out = []
    for degs in options:
        if degs != ctx.degrees and all(o.degrees != degs for o in out):
            out.append(Context(degs, ctx.r))
    return out[:2]


def check_rank_invariance(contexts: Sequence[Context], words: Iterable[Sequence[Letter]]) -> CheckResult:
    """Full matrices agree entry for entry across contexts with the same n and r."""
    base = contexts[0]
    if any(c.n != base.n or c.r != base.r for c in contexts):
        raise ValueError("rank invariance compares contexts with equal n and r")
    n = 0
    for w in words:
        n += 1
        ref = full_matrix(w, base)
        f = word_to_autmap(w, base.r)
        for c in contexts:
            for m in (full_matrix(w, c), full_matrix(f, c)):
                if m.sparse_columns != ref.sparse_columns:
                    cx = {"word": format_letters(w), "contexts": [list(base.degrees), list(c.degrees)]}
                    return CheckResult("rank-invariance", False, n, "matrices depend on the degrees", cx)
    names = " vs ".join(str(list(c.degrees)) for c in contexts)
    return CheckResult("rank-invariance", True, n, f"identical full matrices for {names}")


def verify_theorems(ctx: Context, trials: int = 50, max_length: int = 20, seed: int = 0,
                    suites: Sequence[str] = SUITES,
                    compare_with: Sequence[Context] | None = None) -> Report:
    """Run the requested suites.  Each suite draws from its own seeded stream."""
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    report = Report(ctx, seed)
    streams = {name: random.Random(f"{seed}:{name}") for name in SUITES}
    if "paths" in suites:
        rng = streams["paths"]
        report.checks.append(check_paths(ctx, (random_letters(ctx.r, max_length, rng) for _ in range(trials))))
    if "ia" in suites:
        report.checks.append(check_ia(ctx, trials, streams["ia"]))
    if "faithful" in suites:
        words = random_non_ia_words(ctx.r, trials, max_length, streams["faithful"])
        report.checks.append(check_faithful(ctx, words))
    if "rank-invariance" in suites:
        others = list(compare_with) if compare_with is not None else same_rank_contexts(ctx)
        rng = streams["rank-invariance"]
        words = [random_letters(ctx.r, max_length, rng) for _ in range(trials)]
        report.checks.append(check_rank_invariance([ctx, *others], words))
    return report
