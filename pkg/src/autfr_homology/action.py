"""The action of Aut(F_r) on H_*(G^r; Q).

Two independent routes are provided.

Path A substitutes generator images letter by letter, using the Nielsen and
transposition formulas on homology, and re-expands every product in the
Grassmann algebra.

Path B forgets the automorphism down to its abelianization matrix M and acts
on the generators by  t^k_i -> sum_m M[i][m] t^k_m.  Matrices on the path B
side are built through the tensor identification of H_*(G^r) with n copies of
the exterior algebra Lambda(Z^r): a block of a monomial is mapped by minors of
M^T, never by Grassmann multiplication.

Precomposition is a right action, so a letter word acts letter by letter from
the left: ``act_path_a(u + v, x) == act_path_a(v, act_path_a(u, x))``, and
full matrices compose in reversed order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .errors import ContextMismatch, NotAutomorphismError, ParseError
from .freegroup import AutMap, Letter, abelianization_matrix, parse_letters, word_to_autmap
from .grassmann import Context, HomologyClass, basis_of_degree, mul_terms
from .linalg import Matrix, det, exterior_power_columns, transpose

Source = Union[AutMap, Sequence[Letter], str]


class RingEndomorphism:
    """A graded unital ring map of H_*(G^r) fixed by the images of the generators.

    ``images[p]`` is the image of the generator at bit position p.  Images of
    monomials are memoised as they are requested.
    """

    def __init__(self, ctx: Context, images: Sequence[HomologyClass]):
        if len(images) != ctx.size:
            raise ValueError(f"need {ctx.size} generator images, got {len(images)}")
        for p, img in enumerate(images):
            if img.ctx != ctx:
                raise ContextMismatch("generator image lives in another context")
            d = img.is_homogeneous()
            if img and d != ctx.position_degrees[p]:
                k, i = ctx.generator_at(p)
                raise ValueError(f"image of t{k}_{i} is not homogeneous of degree {ctx.position_degrees[p]}")
        self.ctx = ctx
        self.images = tuple(images)
        self._cache: dict[int, dict[int, int]] = {0: {0: 1}}

    @classmethod
    def identity(cls, ctx: Context) -> "RingEndomorphism":
        return cls(ctx, [HomologyClass.monomial(ctx, 1 << p) for p in range(ctx.size)])

    def image(self, k: int, i: int) -> HomologyClass:
        return self.images[self.ctx.position(k, i)]

    def monomial_image(self, mask: int) -> Mapping[int, int]:
        cache = self._cache
        hit = cache.get(mask)
        if hit is not None:
            return hit
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        out = mul_terms(self.monomial_image(rest), self.images[top].terms)
        cache[mask] = out
        return out

    def apply(self, x: HomologyClass) -> HomologyClass:
        if x.ctx != self.ctx:
            raise ContextMismatch(f"{x.ctx} vs {self.ctx}")
        out: dict[int, int] = {}
        for m, c in x.terms.items():
            for mm, cc in self.monomial_image(m).items():
                v = out.get(mm, 0) + c * cc
                if v:
                    out[mm] = v
                else:
                    del out[mm]
        return HomologyClass(self.ctx, out)

    __call__ = apply

    def then(self, other: "RingEndomorphism") -> "RingEndomorphism":
        """The map x -> other(self(x))."""
        return RingEndomorphism(self.ctx, [other.apply(img) for img in self.images])

    def matrix(self, basis: Sequence[int], degree: int | None = None) -> "RepMatrix":
        return RepMatrix.from_images(self.ctx, degree, basis, map(self.monomial_image, basis))

    def __eq__(self, other):
        if not isinstance(other, RingEndomorphism):
            return NotImplemented
        return self.ctx == other.ctx and self.images == other.images

    def __hash__(self):
        return hash((self.ctx, self.images))

    def __repr__(self):
        body = ", ".join(
            "t%d_%d -> %s" % (*self.ctx.generator_at(p), img) for p, img in enumerate(self.images)
        )
        return f"RingEndomorphism({body})"


def diagonal_class(j: int, i: int, k: int, ctx: Context) -> HomologyClass:
    """Image of t^j under the inclusion G -> G^r placing g in slots i and k."""
    ti = HomologyClass.generator(ctx, j, i)
    if i == k:
        return ti
    return ti + HomologyClass.generator(ctx, j, k)


@lru_cache(maxsize=4096)
def endo_of_letter(letter: Letter, ctx: Context) -> RingEndomorphism:
    """Homology action of one generator letter, simultaneously for every sphere index."""
    letter.check(ctx.r)
    imgs = [HomologyClass.monomial(ctx, 1 << p) for p in range(ctx.size)]
    i, j = letter.i, letter.j
    for k in range(1, ctx.n + 1):
        pi = ctx.position(k, i)
        if letter.kind in ("R", "L"):
            imgs[pi] = diagonal_class(k, i, j, ctx)
        elif letter.kind in ("Ri", "Li"):
            imgs[pi] = HomologyClass.generator(ctx, k, i) - HomologyClass.generator(ctx, k, j)
        elif letter.kind == "s":
            pj = ctx.position(k, j)
            imgs[pi], imgs[pj] = imgs[pj], imgs[pi]
        else:
            imgs[pi] = -imgs[pi]
    return RingEndomorphism(ctx, imgs)


def _letters(source) -> tuple[Letter, ...]:
    if isinstance(source, str):
        return parse_letters(source)
    return tuple(source)


def path_a_endomorphism(word: Sequence[Letter] | str, ctx: Context) -> RingEndomorphism:
    f = RingEndomorphism.identity(ctx)
    for l in _letters(word):
        f = f.then(endo_of_letter(l, ctx))
    return f


def act_path_a(word: Sequence[Letter] | str, x: HomologyClass) -> HomologyClass:
    """Apply the letters in written order, each by substitution in the Grassmann algebra."""
    for l in _letters(word):
        x = endo_of_letter(l, x.ctx).apply(x)
    return x


def _checked_matrix(f: AutMap) -> Matrix:
    m = abelianization_matrix(f)
    if det(m) not in (1, -1):
        raise NotAutomorphismError("abelianization matrix is not invertible over Z")
    return m


def path_b_endomorphism(f: AutMap, ctx: Context) -> RingEndomorphism:
    """t^k_i -> sum_m M[i][m] t^k_m with M the abelianization matrix of f."""
    if f.r != ctx.r:
        raise ContextMismatch(f"automorphism of F_{f.r} in a context with r={ctx.r}")
    m = _checked_matrix(f)
    imgs = []
    for k in range(1, ctx.n + 1):
        for i in range(ctx.r):
            imgs.append(HomologyClass(ctx, {1 << ctx.position(k, c + 1): m[i][c] for c in range(ctx.r)}))
    return RingEndomorphism(ctx, imgs)


def act_path_b(f: AutMap, x: HomologyClass) -> HomologyClass:
    return path_b_endomorphism(f, x.ctx).apply(x)


# -- the tensor identification with Lambda(A)^{(x) n} ------------------------------

def es_decompose(mask: int, ctx: Context) -> tuple[frozenset[int], ...]:
    """Split a monomial into its k-blocks, as subsets of {1..r}."""
    full = (1 << ctx.r) - 1
    out = []
    for b in range(ctx.n):
        block = (mask >> (b * ctx.r)) & full
        out.append(frozenset(i + 1 for i in range(ctx.r) if block >> i & 1))
    return tuple(out)


def es_compose(subsets: Sequence[Sequence[int]], ctx: Context) -> int:
    """Inverse of :func:`es_decompose`.  The identification carries no sign."""
    if len(subsets) != ctx.n:
        raise ValueError(f"need {ctx.n} subsets")
    mask = 0
    for b, s in enumerate(subsets):
        for i in s:
            if not 1 <= i <= ctx.r:
                raise ValueError(f"index {i} out of range")
            mask |= 1 << (b * ctx.r + i - 1)
    return mask


class _ExteriorAction:
    """Path B on monomials: each k-block is moved by Lambda(M^T), blocks tensored."""

    def __init__(self, f: AutMap, ctx: Context):
        if f.r != ctx.r:
            raise ContextMismatch(f"automorphism of F_{f.r} in a context with r={ctx.r}")
        self.ctx = ctx
        self.lam = exterior_power_columns(transpose(_checked_matrix(f)))

    def monomial_image(self, mask: int) -> dict[int, int]:
        r, full = self.ctx.r, (1 << self.ctx.r) - 1
        out = {0: 1}
        for b in range(self.ctx.n):
            col = self.lam[(mask >> (b * r)) & full]
            shift = b * r
            out = {m | (rows << shift): c * v for m, c in out.items() for rows, v in col.items()}
        return out

    def matrix(self, basis: Sequence[int], degree: int | None) -> "RepMatrix":
        return RepMatrix.from_images(self.ctx, degree, basis, map(self.monomial_image, basis))


# -- matrices ------------------------------------------------------------------------

@dataclass(frozen=True)
class RepMatrix:
    """Exact matrix of the action on one degree (or on everything if degree is None).

    Column c holds the coordinates of the image of ``basis[c]``.  Columns are
    stored sparsely as sorted ``(row, value)`` pairs; ``columns`` gives the
    dense form.
    """

    ctx: Context
    degree: int | None
    basis: tuple[int, ...]
    sparse_columns: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def from_images(cls, ctx, degree, basis, images) -> "RepMatrix":
        """Build from one ``{monomial: coeff}`` image per basis monomial."""
        basis = tuple(basis)
        index = {m: n for n, m in enumerate(basis)}
        cols = []
        for img in images:
            try:
                cols.append(tuple(sorted((index[m], c) for m, c in img.items())))
            except KeyError:
                raise ValueError("basis is not invariant under the map") from None
        return cls(ctx, degree, basis, tuple(cols))

    @classmethod
    def from_dense(cls, ctx, degree, basis, columns) -> "RepMatrix":
        cols = tuple(tuple((r, int(v)) for r, v in enumerate(col) if v) for col in columns)
        return cls(ctx, degree, tuple(basis), cols)

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def columns(self) -> list[list[int]]:
        out = []
        for col in self.sparse_columns:
            dense = [0] * len(self.basis)
            for r, v in col:
                dense[r] = v
            out.append(dense)
        return out

    def rows(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]

    def entry(self, row: int, col: int) -> int:
        return dict(self.sparse_columns[col]).get(row, 0)

    def is_identity(self) -> bool:
        return all(col == ((c, 1),) for c, col in enumerate(self.sparse_columns))

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.basis != other.basis or self.ctx != other.ctx:
            raise ValueError("matrices act on different bases")
        cols = []
        for col in other.sparse_columns:
            acc: dict[int, int] = {}
            for k, b in col:
                for r, a in self.sparse_columns[k]:
                    acc[r] = acc.get(r, 0) + a * b
            cols.append(tuple(sorted((r, v) for r, v in acc.items() if v)))
        return RepMatrix(self.ctx, self.degree, self.basis, tuple(cols))

    def restrict(self, monomials: Sequence[int]) -> "RepMatrix":
        """Submatrix on rows and columns indexed by the given basis monomials."""
        pos = {m: n for n, m in enumerate(self.basis)}
        idx = [pos[m] for m in monomials]
        new = {old: n for n, old in enumerate(idx)}
        cols = tuple(tuple(sorted((new[r], v) for r, v in self.sparse_columns[c] if r in new))
                     for c in idx)
        return RepMatrix(self.ctx, self.degree, tuple(monomials), cols)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "context": {"degrees": list(self.ctx.degrees), "r": self.ctx.r},
            "degree": self.degree,
            "basis": [self.ctx.monomial_str(m) for m in self.basis],
            "columns": self.columns,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "RepMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            ctx = Context(tuple(data["context"]["degrees"]), int(data["context"]["r"]))
            basis = []
            for s in data["basis"]:
                (m, c), = HomologyClass.parse(ctx, s).terms.items()
                if c != 1:
                    raise ParseError(f"basis entry {s!r} is not a canonical monomial")
                basis.append(m)
            columns = [[int(x) for x in col] for col in data["columns"]]
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad matrix JSON: {e}") from None
        if len(columns) != len(basis) or any(len(c) != len(basis) for c in columns):
            raise ParseError("matrix JSON is not square over its basis")
        return cls.from_dense(ctx, data.get("degree"), basis, columns)


def _as_source(source: Source):
    if isinstance(source, (AutMap, RingEndomorphism)):
        return source
    return _letters(source)


def representation_matrix(source: Source, d: int, ctx: Context) -> RepMatrix:
    """Matrix on H_d(G^r): letter words go through path A, AutMaps through path B."""
    return _matrix(source, basis_of_degree(ctx, d), d, ctx)


def full_matrix(source: Source, ctx: Context) -> RepMatrix:
    """Matrix on all 2^(n r) monomials in bit-set order."""
    return _matrix(source, range(1 << ctx.size), None, ctx)


def _matrix(source, basis, degree, ctx) -> RepMatrix:
    src = _as_source(source)
    if isinstance(src, AutMap):
        return _ExteriorAction(src, ctx).matrix(basis, degree)
    if isinstance(src, RingEndomorphism):
        return src.matrix(basis, degree)
    return path_a_endomorphism(src, ctx).matrix(basis, degree)


def path_b_monomial_image(f: AutMap, mask: int, ctx: Context) -> HomologyClass:
    return HomologyClass(ctx, _ExteriorAction(f, ctx).monomial_image(mask))


def generator_block(m: RepMatrix, k: int = 1) -> list[list[int]]:
    """Rows/columns of a full matrix on span(t^k_1..t^k_r), as a row-major list."""
    ctx = m.ctx
    gens = [1 << ctx.position(k, i) for i in range(1, ctx.r + 1)]
    return m.restrict(gens).rows()


def top_degree_scalar(source: Source, ctx: Context) -> int:
    m = representation_matrix(source, ctx.top_degree(), ctx)
    return m.entry(0, 0)
