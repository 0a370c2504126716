"""Compact semisimple Lie groups reduced to their rational homology degrees.

Over Q a compact connected Lie group has the homology of a product of odd
spheres, one per generator of its Pontryagin ring.  Only that list of sphere
dimensions matters downstream, so a group is modelled as a list of simple
factors and immediately flattened into a degree sequence.

Group strings accepted by :func:`parse_group`::

    A2          SU(3)
    A2xA1       SU(3) x SU(2)
    B3xG2
    deg[3,5,7]  explicit degrees (any odd integers >= 3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError

CLASSICAL = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

# degrees are 2m+1 over the exponents m of the Weyl group
EXCEPTIONAL_DEGREES = {
    "G2": (3, 11),
    "F4": (3, 11, 15, 23),
    "E6": (3, 9, 11, 15, 17, 23),
    "E7": (3, 11, 15, 19, 23, 27, 35),
    "E8": (3, 15, 23, 27, 35, 39, 47, 59),
}
EXCEPTIONAL_DIMENSION = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}


@dataclass(frozen=True)
class SimpleFactor:
    family: str
    rank: int = 0

    def __post_init__(self):
        if self.family in EXCEPTIONAL_DEGREES:
            fixed = len(EXCEPTIONAL_DEGREES[self.family])
            if self.rank not in (0, fixed):
                raise ValueError(f"{self.family} has rank {fixed}, got {self.rank}")
            object.__setattr__(self, "rank", fixed)
        elif self.family in CLASSICAL:
            if not isinstance(self.rank, int) or self.rank < MIN_RANK[self.family]:
                raise ValueError(
                    f"{self.name}: family {self.family} needs rank >= "
                    f"{MIN_RANK[self.family]}"
                )
        else:
            raise ValueError(f"unknown Lie type {self.family!r}")

    @property
    def name(self) -> str:
        if self.family in EXCEPTIONAL_DEGREES:
            return self.family
        return f"{self.family}{self.rank}"

    def degrees(self) -> tuple[int, ...]:
        n = self.rank
        if self.family == "A":
            return tuple(2 * m + 1 for m in range(1, n + 1))
        if self.family in ("B", "C"):
            return tuple(4 * m - 1 for m in range(1, n + 1))
        if self.family == "D":
            return tuple(4 * m - 1 for m in range(1, n)) + (2 * n - 1,)
        return EXCEPTIONAL_DEGREES[self.family]


@dataclass(frozen=True)
class GroupSpec:
    """A semisimple group given either by simple factors or by raw degrees."""

    factors: tuple[SimpleFactor, ...] = ()
    explicit_degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.explicit_degrees is not None:
            degs = tuple(self.explicit_degrees)
            if self.factors:
                raise ValueError("give factors or explicit degrees, not both")
            if not degs:
                raise ValueError("explicit degree list is empty")
            for d in degs:
                if not isinstance(d, int) or d < 3 or d % 2 == 0:
                    raise ValueError(f"degree {d!r} is not an odd integer >= 3")
            object.__setattr__(self, "explicit_degrees", degs)
        elif not self.factors:
            raise ValueError("a group needs at least one simple factor")

    @classmethod
    def from_degrees(cls, degrees: Sequence[int]) -> "GroupSpec":
        return cls(explicit_degrees=tuple(degrees))

    @property
    def rank(self) -> int:
        return len(degrees_of(self))

    def __str__(self):
        if self.explicit_degrees is not None:
            return "deg[" + ",".join(map(str, self.explicit_degrees)) + "]"
        return "x".join(f.name for f in self.factors)


def degrees_of(spec: GroupSpec | SimpleFactor) -> tuple[int, ...]:
    """Concatenate the per-factor degree sequences in catalog order."""
    if isinstance(spec, SimpleFactor):
        return spec.degrees()
    if spec.explicit_degrees is not None:
        return spec.explicit_degrees
    out: tuple[int, ...] = ()
    for f in spec.factors:
        out += f.degrees()
    return out


def dimension_of(factor: SimpleFactor) -> int:
    """Manifold dimension of the simple group, from the classical formulas."""
    n = factor.rank
    if factor.family == "A":
        return n * (n + 2)
    if factor.family in ("B", "C"):
        return n * (2 * n + 1)
    if factor.family == "D":
        return n * (2 * n - 1)
    return EXCEPTIONAL_DIMENSION[factor.family]


def poincare_polynomial(spec: GroupSpec | Sequence[int], r: int = 1) -> list[int]:
    """Coefficients of prod_k (1 + x^{d_k})^r, lowest degree first."""
    if r < 1:
        raise ValueError("r must be >= 1")
    degrees = degrees_of(spec) if isinstance(spec, GroupSpec) else tuple(spec)
    coeffs = [1]
    for d in degrees:
        for _ in range(r):
            nxt = coeffs + [0] * d
            for i, c in enumerate(coeffs):
                nxt[i + d] += c
            coeffs = nxt
    return coeffs


def format_polynomial(coeffs: Sequence[int], var: str = "x") -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            mono = str(abs(c))
        else:
            power = var if i == 1 else f"{var}^{i}"
            mono = power if abs(c) == 1 else f"{abs(c)}{power}"
        if not parts:
            parts.append(mono if c > 0 else "-" + mono)
        else:
            parts.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(parts) if parts else "0"


# -- named constructors -------------------------------------------------------

def SU(m: int) -> GroupSpec:
    return GroupSpec((SimpleFactor("A", m - 1),))


def Sp(n: int) -> GroupSpec:
    return GroupSpec((SimpleFactor("A", 1),) if n == 1 else (SimpleFactor("C", n),))


def SO(m: int) -> GroupSpec:
    """SO(m) for m >= 3, up to isogeny; low ranks resolve to A-type names."""
    if m < 3:
        raise ValueError("SO(m) is semisimple only for m >= 3")
    if m == 3:
        return GroupSpec((SimpleFactor("A", 1),))
    if m == 4:
        return GroupSpec((SimpleFactor("A", 1), SimpleFactor("A", 1)))
    if m % 2:
        return GroupSpec((SimpleFactor("B", (m - 1) // 2),))
    return GroupSpec((SimpleFactor("D", m // 2),))


Spin = SO

_TOKEN = re.compile(r"([ABCD])(\d+)|(G2|F4|E6|E7|E8)")
_DEG = re.compile(r"\s*deg\s*\[(.*)\]\s*$")


def parse_group(text: str) -> GroupSpec:
    """Parse ``A2xA1`` style factor products or ``deg[3,5,7]``."""
    m = _DEG.match(text)
    if m:
        inner = m.group(1)
        try:
            degs = tuple(int(tok) for tok in inner.split(","))
        except ValueError:
            raise ParseError("bad degree list", text, m.start(1)) from None
        try:
            return GroupSpec.from_degrees(degs)
        except ValueError as e:
            raise ParseError(str(e), text, m.start(1)) from None
    factors = []
    pos = 0
    stripped = text.strip()
    offset = text.find(stripped) if stripped else 0
    if not stripped:
        raise ParseError("empty group specification", text, 0)
    while True:
        tm = _TOKEN.match(stripped, pos)
        if not tm:
            raise ParseError("expected a Lie type like A2, D4 or E8", text, offset + pos)
        try:
            if tm.group(3):
                factors.append(SimpleFactor(tm.group(3)))
            else:
                factors.append(SimpleFactor(tm.group(1), int(tm.group(2))))
        except ValueError as e:
            raise ParseError(str(e), text, offset + pos) from None
        pos = tm.end()
        if pos == len(stripped):
            break
        if stripped[pos] != "x":
            raise ParseError("expected 'x' between factors", text, offset + pos)
        pos += 1
    return GroupSpec(tuple(factors))


def catalog_entries(max_rank: int = 25):
    """Every simple factor up to the given classical rank, exceptional types last."""
    for fam in CLASSICAL:
        for n in range(MIN_RANK[fam], max_rank + 1):
            yield SimpleFactor(fam, n)
    for name in EXCEPTIONAL_DEGREES:
        yield SimpleFactor(name)
