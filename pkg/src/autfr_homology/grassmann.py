"""The Pontryagin ring H_*(G^r; Q) as a Grassmann algebra on odd generators.

Generators t^k_i (k = sphere factor 1..n, i = free-group coordinate 1..r) sit
at bit position p = (k-1)*r + (i-1).  A monomial is the integer whose set bits
are its generators, read in increasing position; 0 is the unit.  Since every
generator has odd degree, reordering a product costs one sign per transposition
and any repeated generator kills it.

Coefficients are Python ints throughout.  Every map used in this package has
integral matrices, so nothing here ever needs a denominator.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatch, ParseError


@dataclass(frozen=True)
class Context:
    """Degree sequence d_1..d_n of G together with the free-group rank r."""

    degrees: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.degrees:
            raise ValueError("need at least one sphere factor")
        if any(d < 1 or d % 2 == 0 for d in self.degrees):
            raise ValueError(f"degrees must be odd and positive: {self.degrees}")
        if self.r < 1:
            raise ValueError("r must be >= 1")

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def size(self) -> int:
        """Number of generators, n*r."""
        return len(self.degrees) * self.r

    def position(self, k: int, i: int) -> int:
        if not (1 <= k <= self.n and 1 <= i <= self.r):
            raise ValueError(f"generator t{k}_{i} out of range for n={self.n}, r={self.r}")
        return (k - 1) * self.r + (i - 1)

    def generator_at(self, p: int) -> tuple[int, int]:
        k, i = divmod(p, self.r)
        return k + 1, i + 1

    @cached_property
    def position_degrees(self) -> tuple[int, ...]:
        return tuple(d for d in self.degrees for _ in range(self.r))

    def block_mask(self, k: int) -> int:
        """Bits of the generators t^k_1..t^k_r."""
        return ((1 << self.r) - 1) << ((k - 1) * self.r)

    def degree(self, mask: int) -> int:
        r, full = self.r, (1 << self.r) - 1
        return sum(d * ((mask >> (b * r)) & full).bit_count()
                   for b, d in enumerate(self.degrees))

    def monomial_str(self, mask: int) -> str:
        if mask == 0:
            return "1"
        return " ".join("t%d_%d" % self.generator_at(p) for p in _bits(mask))

    def top_degree(self) -> int:
        return self.r * sum(self.degrees)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def merge_sign(left: int, right: int) -> int:
    """Sign of left*right for disjoint monomials: pairs (a in left, b in right) with a > b."""
    c = 0
    while right:
        low = right & -right
        c += (left >> low.bit_length()).bit_count()
        right ^= low
    return -1 if c & 1 else 1


def _positions(generators, ctx: Context) -> list[int]:
    out = []
    for g in generators:
        if isinstance(g, int):
            if not 0 <= g < ctx.size:
                raise ValueError(f"position {g} out of range")
            out.append(g)
        else:
            out.append(ctx.position(*g))
    return out


def canonicalize(generators: Iterable, ctx: Context) -> tuple[int, int]:
    """Sort a product of generators into position order.

    ``generators`` holds (k, i) pairs or raw positions.  Returns
    ``(mask, sign)`` where sign is 0 when some generator repeats.
    """
    pos = _positions(generators, ctx)
    mask = 0
    for p in pos:
        if mask >> p & 1:
            return 0, 0
        mask |= 1 << p
    inv = sum(1 for a, b in itertools.combinations(pos, 2) if a > b)
    return mask, -1 if inv & 1 else 1


class HomologyClass:
    """An immutable integer combination of monomials in a fixed context."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: Context, terms: Mapping[int, int] | None = None):
        self.ctx = ctx
        clean = {}
        if terms:
            limit = 1 << ctx.size
            for m, c in terms.items():
                if not 0 <= m < limit:
                    raise ValueError(f"monomial {m:#b} outside context")
                if c:
                    clean[m] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, ctx: Context) -> "HomologyClass":
        return cls._raw(ctx, {})

    @classmethod
    def one(cls, ctx: Context) -> "HomologyClass":
        return cls._raw(ctx, {0: 1})

    @classmethod
    def monomial(cls, ctx: Context, mask: int, coeff: int = 1) -> "HomologyClass":
        return cls(ctx, {mask: coeff})

    @classmethod
    def generator(cls, ctx: Context, k: int, i: int) -> "HomologyClass":
        return cls._raw(ctx, {1 << ctx.position(k, i): 1})

    @classmethod
    def product(cls, ctx: Context, generators: Iterable, coeff: int = 1) -> "HomologyClass":
        mask, sign = canonicalize(generators, ctx)
        return cls(ctx, {mask: sign * coeff})

    @classmethod
    def parse(cls, ctx: Context, text: str) -> "HomologyClass":
        return parse_class(ctx, text)

    # -- access --------------------------------------------------------------
    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def coefficient(self, mask: int) -> int:
        return self._terms.get(mask, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_homogeneous(self) -> int | None:
        """The common degree of all terms, or None.  The zero class has degree 0."""
        degs = {self.ctx.degree(m) for m in self._terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "HomologyClass"):
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if isinstance(other, int):
            other = HomologyClass.one(self.ctx) * other
        if not isinstance(other, HomologyClass):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return HomologyClass._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return HomologyClass._raw(self.ctx, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return HomologyClass.zero(self.ctx)
            return HomologyClass._raw(self.ctx, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, HomologyClass):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, HomologyClass):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_class(self)

    def __repr__(self):
        return f"HomologyClass({format_class(self)!r})"


def multiply(x: HomologyClass, y: HomologyClass) -> HomologyClass:
    """Pontryagin product x*y, expanded in the canonical basis."""
    x._check(y)
    return HomologyClass._raw(x.ctx, mul_terms(x._terms, y._terms))


def mul_terms(xs: Mapping[int, int], ys: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    get = out.get
    for a, ca in xs.items():
        for b, cb in ys.items():
            if a & b:
                continue
            # merge_sign inlined: this loop dominates matrix assembly
            c, rb = 0, b
            while rb:
                low = rb & -rb
                c += (a >> low.bit_length()).bit_count()
                rb ^= low
            m = a | b
            v = get(m, 0) + (-ca * cb if c & 1 else ca * cb)
            if v:
                out[m] = v
            else:
                del out[m]
    return out


@lru_cache(maxsize=None)
def _block_subsets(r: int) -> tuple[tuple[int, ...], ...]:
    """Subsets of an r-bit block grouped by size, each group in increasing order."""
    groups: list[list[int]] = [[] for _ in range(r + 1)]
    for s in range(1 << r):
        groups[s.bit_count()].append(s)
    return tuple(tuple(g) for g in groups)


@lru_cache(maxsize=4096)
def basis_of_degree(ctx: Context, d: int) -> tuple[int, ...]:
    """All monomials of total degree d, in increasing bit-set order."""
    if d < 0:
        return ()
    subsets = _block_subsets(ctx.r)
    out = []

    def counts(k, remaining):
        if k == ctx.n:
            if remaining == 0:
                yield ()
            return
        deg = ctx.degrees[k]
        for c in range(min(ctx.r, remaining // deg) + 1):
            for rest in counts(k + 1, remaining - c * deg):
                yield (c,) + rest

    for cs in counts(0, d):
        pieces = [[s << (k * ctx.r) for s in subsets[c]] for k, c in enumerate(cs)]
        for combo in itertools.product(*pieces):
            out.append(sum(combo))
    out.sort()
    return tuple(out)


def degrees_present(ctx: Context) -> list[int]:
    """Degrees d with H_d nonzero, ascending."""
    ds = {0}
    for d in ctx.degrees:
        ds |= {a + j * d for a in ds for j in range(1, ctx.r + 1)}
    return sorted(x for x in ds if basis_of_degree(ctx, x))


def degree_of(mask: int, ctx: Context) -> int:
    return ctx.degree(mask)


# -- text form ----------------------------------------------------------------

def format_class(x: HomologyClass) -> str:
    parts = []
    for m, c in x.items():
        mono = x.ctx.monomial_str(m)
        body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


_CLASS_TOKEN = re.compile(r"t(?P<k>\d+)_(?P<i>\d+)|(?P<int>\d+)|(?P<op>[-+*])")


def _tokenize(text: str):
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            return
        m = _CLASS_TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos)
        if m.group("k"):
            yield "gen", (int(m.group("k")), int(m.group("i"))), pos
        elif m.group("int"):
            yield "int", int(m.group("int")), pos
        else:
            yield "op", m.group("op"), pos
        pos = m.end()


def parse_class(ctx: Context, text: str) -> HomologyClass:
    """Parse ``[sign] [int '*'] monomial`` terms, e.g. ``t1_1 t2_3 - 2*t1_2``.

    A monomial is a run of ``t<k>_<i>`` factors in any order, or ``1``.  A bare
    integer is read as that multiple of the unit, so ``0`` parses to zero.
    """
    tokens = list(_tokenize(text))
    if not tokens:
        raise ParseError("empty class", text, 0)
    tokens.append(("end", None, len(text)))
    terms: dict[int, int] = {}
    idx = 0
    while tokens[idx][0] != "end":
        kind, val, at = tokens[idx]
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            idx += 1
        elif idx:
            raise ParseError("expected '+' or '-' between terms", text, at)
        kind, val, at = tokens[idx]
        coeff = 1
        if kind == "int":
            idx += 1
            if tokens[idx][:2] == ("op", "*"):
                coeff = val
                idx += 1
                kind, val, at = tokens[idx]
                if kind == "int":
                    if val != 1:
                        raise ParseError("monomial must be '1' or generators", text, at)
                    idx += 1
                    terms_add(terms, 0, sign * coeff)
                    continue
            else:
                terms_add(terms, 0, sign * val)
                continue
        gens = []
        while tokens[idx][0] == "gen":
            k, i = tokens[idx][1]
            if not (1 <= k <= ctx.n and 1 <= i <= ctx.r):
                raise ParseError(f"generator t{k}_{i} out of range", text, tokens[idx][2])
            gens.append((k, i))
            idx += 1
        if not gens:
            raise ParseError("expected a monomial", text, tokens[idx][2])
        mask, s = canonicalize(gens, ctx)
        terms_add(terms, mask, sign * s * coeff)
    return HomologyClass._raw(ctx, terms)


def terms_add(terms: dict, mask: int, c: int):
    v = terms.get(mask, 0) + c
    if v:
        terms[mask] = v
    else:
        terms.pop(mask, None)
