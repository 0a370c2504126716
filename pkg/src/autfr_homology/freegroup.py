"""Words in the free group F_r and automorphisms of F_r.

A word is stored Tietze style: a tuple of nonzero ints, ``+i`` for a_i and
``-i`` for a_i^-1.  An automorphism is the tuple of images of a_1..a_r.

Generator letters (text form in parentheses)::

    R(i,j)   a_j -> a_j a_i          Ri(i,j)  a_j -> a_j a_i^-1
    L(i,j)   a_j -> a_i a_j          Li(i,j)  a_j -> a_i^-1 a_j
    s(i,j)   a_i <-> a_j             v(i)     a_i -> a_i^-1

A word ``l1 l2 ... lm`` in letters denotes the composite l1 o l2 o ... o lm,
so the rightmost letter is substituted first.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotAutomorphismError, ParseError
from .linalg import Matrix, det, identity


def reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Free reduction: cancel adjacent x x^-1 pairs until none remain."""
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a generator index")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def inverse(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(inverse(self.letters))

    def exponent_sums(self, r: int) -> list[int]:
        sums = [0] * r
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return sums

    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"a{x}" if x > 0 else f"a{-x}^-1" for x in self.letters)


_WORD_TOKEN = re.compile(r"a(\d+)(\^-1|\^1)?")


def parse_word(text: str) -> Word:
    """Parse ``a2 a1 a2^-1``.  ``1`` or an empty string is the identity."""
    if text.strip() in ("", "1"):
        return Word()
    letters = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _WORD_TOKEN.match(text, pos)
        if not m or int(m.group(1)) < 1:
            raise ParseError("expected a<k> or a<k>^-1", text, pos)
        k = int(m.group(1))
        letters.append(-k if m.group(2) == "^-1" else k)
        pos = m.end()
    return Word(tuple(letters))


@dataclass(frozen=True)
class AutMap:
    """An endomorphism of F_r given by generator images, det-checked on construction.

    Only the determinant of the abelianization is verified; a tuple that
    passes the check but is not actually invertible is not detected.
    """

    r: int
    images: tuple[Word, ...]

    def __post_init__(self):
        imgs = tuple(w if isinstance(w, Word) else Word(tuple(w)) for w in self.images)
        object.__setattr__(self, "images", imgs)
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if len(imgs) != self.r:
            raise ValueError(f"need {self.r} images, got {len(imgs)}")
        for w in imgs:
            if w.max_index() > self.r:
                raise ValueError(f"image {w} uses a generator beyond a{self.r}")
        d = det(abelianization_matrix(self))
        if d not in (1, -1):
            raise NotAutomorphismError(
                f"abelianization has determinant {d}; not an automorphism of F_{self.r}"
            )

    @classmethod
    def identity(cls, r: int) -> "AutMap":
        return cls(r, tuple(Word((i,)) for i in range(1, r + 1)))

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __matmul__(self, other: "AutMap") -> "AutMap":
        return compose(self, other)

    def to_json(self) -> dict:
        return {"schema": 1, "r": self.r, "images": [str(w) for w in self.images]}

    @classmethod
    def from_json(cls, data: dict | str) -> "AutMap":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON ({e.msg})", data, e.pos) from None
        try:
            r = int(data["r"])
            images = [parse_word(s) for s in data["images"]]
        except (KeyError, TypeError) as e:
            raise ParseError(f"automorphism JSON needs 'r' and 'images' ({e})") from None
        return cls(r, tuple(images))

    def __str__(self):
        return "(" + ", ".join(str(w) for w in self.images) + ")"


def apply(f: AutMap, w: Word) -> Word:
    """Substitute f's images into w and freely reduce."""
    out: list[int] = []
    for x in w.letters:
        img = f.images[abs(x) - 1].letters
        out.extend(img if x > 0 else inverse(img))
    return Word(tuple(out))


def compose(f: AutMap, g: AutMap) -> AutMap:
    """f o g: first g, then f substituted into g's images."""
    if f.r != g.r:
        raise ValueError("rank mismatch")
    return AutMap(f.r, tuple(apply(f, w) for w in g.images))


def abelianization_matrix(f: AutMap) -> Matrix:
    """M[l][m] = exponent sum of a_{l+1} in f(a_{m+1}); columns are abelianized images."""
    cols = [w.exponent_sums(f.r) for w in f.images]
    return tuple(tuple(cols[m][l] for m in range(f.r)) for l in range(f.r))


def is_IA(f: AutMap) -> bool:
    return abelianization_matrix(f) == identity(f.r)


# -- generator letters ----------------------------------------------------------

KINDS = ("R", "Ri", "L", "Li", "s", "v")


@dataclass(frozen=True)
class Letter:
    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.kind == "v":
            if self.j not in (0, self.i):
                raise ValueError("v takes a single index")
        elif self.i == self.j:
            raise ValueError(f"{self.kind}({self.i},{self.j}) needs distinct indices")
        if self.i < 1 or (self.kind != "v" and self.j < 1):
            raise ValueError("letter indices start at 1")

    def check(self, r: int):
        if max(self.i, self.j) > r:
            raise ValueError(f"letter {self} needs r >= {max(self.i, self.j)}")

    def inverse(self) -> "Letter":
        flip = {"R": "Ri", "Ri": "R", "L": "Li", "Li": "L"}
        return Letter(flip.get(self.kind, self.kind), self.i, self.j)

    def __str__(self):
        if self.kind == "v":
            return f"v({self.i})"
        return f"{self.kind}({self.i},{self.j})"


_LETTER_TOKEN = re.compile(r"(Ri|Li|R|L|s)\(\s*(\d+)\s*,\s*(\d+)\s*\)|v\(\s*(\d+)\s*\)")


def parse_letters(text: str) -> tuple[Letter, ...]:
    """Parse a generator word such as ``L(2,1) Ri(2,1)``; blank means identity."""
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _LETTER_TOKEN.match(text, pos)
        if not m:
            raise ParseError("expected R(i,j), Ri(i,j), L(i,j), Li(i,j), s(i,j) or v(i)", text, pos)
        try:
            if m.group(4):
                out.append(Letter("v", int(m.group(4))))
            else:
                out.append(Letter(m.group(1), int(m.group(2)), int(m.group(3))))
        except ValueError as e:
            raise ParseError(str(e), text, pos) from None
        pos = m.end()
    return tuple(out)


def format_letters(letters: Sequence[Letter]) -> str:
    return " ".join(str(l) for l in letters)


def letter_to_autmap(l: Letter, r: int) -> AutMap:
    l.check(r)
    imgs = [(m,) for m in range(1, r + 1)]
    i, j = l.i, l.j
    if l.kind == "R":
        imgs[j - 1] = (j, i)
    elif l.kind == "Ri":
        imgs[j - 1] = (j, -i)
    elif l.kind == "L":
        imgs[j - 1] = (i, j)
    elif l.kind == "Li":
        imgs[j - 1] = (-i, j)
    elif l.kind == "s":
        imgs[i - 1], imgs[j - 1] = (j,), (i,)
    else:
        imgs[i - 1] = (-i,)
    return AutMap(r, tuple(Word(w) for w in imgs))


def word_to_autmap(letters: Sequence[Letter], r: int) -> AutMap:
    f = AutMap.identity(r)
    for l in letters:
        f = compose(f, letter_to_autmap(l, r))
    return f


# -- IA_r -----------------------------------------------------------------------

def magnus_ia_generators(r: int) -> list[AutMap]:
    return [f for _, f, _ in magnus_factorizations(r)]


def magnus_factorizations(r: int) -> list[tuple[str, AutMap, tuple[Letter, ...]]]:
    """Magnus generators of IA_r with a letter word for each.

    K_ij:  a_i -> a_j a_i a_j^-1             = L(j,i) Ri(j,i)
    K_ijk: a_i -> a_i a_j a_k a_j^-1 a_k^-1  = R(j,i) R(k,i) Ri(j,i) Ri(k,i)
    (j < k); every other generator is fixed.
    """
    out = []
    ident = [(m,) for m in range(1, r + 1)]
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            if i == j:
                continue
            imgs = list(ident)
            imgs[i - 1] = (j, i, -j)
            word = (Letter("L", j, i), Letter("Ri", j, i))
            out.append((f"K{i}{j}", AutMap(r, tuple(Word(w) for w in imgs)), word))
    for i in range(1, r + 1):
        others = [m for m in range(1, r + 1) if m != i]
        for j, k in combinations(others, 2):
            imgs = list(ident)
            imgs[i - 1] = (i, j, k, -j, -k)
            word = (Letter("R", j, i), Letter("R", k, i), Letter("Ri", j, i), Letter("Ri", k, i))
            out.append((f"K{i}{j}{k}", AutMap(r, tuple(Word(w) for w in imgs)), word))
    return out


def random_letter(r: int, rng: random.Random) -> Letter:
    if r == 1:
        return Letter("v", 1)
    kind = rng.choice(KINDS)
    if kind == "v":
        return Letter("v", rng.randint(1, r))
    i, j = rng.sample(range(1, r + 1), 2)
    return Letter(kind, i, j)


def random_letters(r: int, max_length: int, rng: random.Random) -> tuple[Letter, ...]:
    """A word of uniformly random length 0..max_length in uniformly random letters."""
    return tuple(random_letter(r, rng) for _ in range(rng.randint(0, max_length)))
