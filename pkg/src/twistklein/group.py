"""GL(3,2) = PSL(3,2): enumeration, conjugacy classes, centralizers.

A 3x3 binary matrix is packed into 9 bits read row-major with the first
entry as the most significant bit, so ``'010001100'`` (the cyclic shift)
is the integer 0b010001100.  The whole group fits in a few small tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .algebra.poly import SingularMatrixError


class NotASubgroupError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Mat3F2:
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < 512:
            raise ValueError(f"{self.bits} is not a 9-bit matrix encoding")

    @classmethod
    def from_string(cls, s: str) -> "Mat3F2":
        s = s.strip()
        if len(s) != 9 or set(s) - {"0", "1"}:
            raise ValueError(f"matrix must be 9 characters of 0/1, got {s!r}")
        return cls(int(s, 2))

    @classmethod
    def from_rows(cls, rows) -> "Mat3F2":
        bits = 0
        for r in rows:
            for x in r:
                bits = (bits << 1) | (int(x) & 1)
        return cls(bits)

    @classmethod
    def identity(cls) -> "Mat3F2":
        return IDENTITY

    def row(self, i: int) -> int:
        """Row i as a 3-bit int, column 0 in the high bit."""
        return (self.bits >> (3 * (2 - i))) & 7

    def rows(self) -> tuple:
        return tuple(tuple((self.row(i) >> (2 - j)) & 1 for j in range(3)) for i in range(3))

    def __getitem__(self, ij):
        i, j = ij
        return (self.row(i) >> (2 - j)) & 1

    def __str__(self):
        return format(self.bits, "09b")

    def __repr__(self):
        return f"Mat3F2('{self}')"

    def __matmul__(self, other: "Mat3F2") -> "Mat3F2":
        return Mat3F2(_mul(self.bits, other.bits))

    def __pow__(self, e: int) -> "Mat3F2":
        if e < 0:
            return self.inverse() ** (-e)
        r = IDENTITY
        b = self
        while e:
            if e & 1:
                r = r @ b
            b = b @ b
            e >>= 1
        return r

    def transpose(self) -> "Mat3F2":
        return Mat3F2.from_rows(zip(*self.rows()))

    @property
    def T(self):
        return self.transpose()

    def det(self) -> int:
        m = self.rows()
        return (m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1])
                + m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0])) & 1

    def is_invertible(self) -> bool:
        return self.det() == 1

    def inverse(self) -> "Mat3F2":
        if not self.is_invertible():
            raise SingularMatrixError(f"{self} is singular")
        return Mat3F2(_inverse_table()[self.bits])

    def trace(self) -> int:
        return (self[0, 0] + self[1, 1] + self[2, 2]) & 1

    def order(self) -> int:
        if not self.is_invertible():
            raise SingularMatrixError(f"{self} is singular")
        n, p = 1, self
        while p != IDENTITY:
            p = p @ self
            n += 1
        return n

    def apply(self, v: int) -> int:
        """Matrix times the column vector packed as 3 bits (entry 0 high)."""
        out = 0
        for i in range(3):
            out = (out << 1) | (bin(self.row(i) & v).count("1") & 1)
        return out


@lru_cache(maxsize=None)
def _mul(a: int, b: int) -> int:
    ra = [(a >> (3 * (2 - i))) & 7 for i in range(3)]
    # row i of a*b is XOR of rows j of b selected by bits of row i of a
    rb = [(b >> (3 * (2 - i))) & 7 for i in range(3)]
    out = 0
    for r in ra:
        acc = 0
        for j in range(3):
            if (r >> (2 - j)) & 1:
                acc ^= rb[j]
        out = (out << 3) | acc
    return out


IDENTITY = Mat3F2(0b100010001)
CYCLIC_SHIFT = Mat3F2.from_string("010001100")


@lru_cache(maxsize=None)
def _inverse_table() -> dict:
    elems = [m.bits for m in enumerate_group()]
    table = {}
    for a in elems:
        for b in elems:
            if _mul(a, b) == IDENTITY.bits:
                table[a] = b
                break
    return table


@lru_cache(maxsize=None)
def _group_tuple() -> tuple:
    return tuple(m for m in (Mat3F2(b) for b in range(512)) if m.is_invertible())


def enumerate_group() -> list[Mat3F2]:
    """The 168 invertible binary 3x3 matrices, ascending by encoding."""
    return list(_group_tuple())


@dataclass(frozen=True)
class ConjugacyClass:
    order: int
    trace: int
    size: int
    representative: Mat3F2
    members: tuple = field(default=(), repr=False, compare=False)

    @property
    def id(self) -> str:
        return f"{self.order}{'ab'[self.trace] if self.order == 7 else ''}"

    def __contains__(self, m):
        return m in self.members


@lru_cache(maxsize=None)
def _classes() -> tuple:
    group = _group_tuple()
    seen = set()
    out = []
    for g in group:
        if g in seen:
            continue
        cls = sorted({s @ g @ s.inverse() for s in group})
        seen.update(cls)
        out.append(ConjugacyClass(g.order(), g.trace(), len(cls), cls[0], tuple(cls)))
    # identity first, then order 7 by trace, then 3, 4, 2 -- the usual table order
    rank = {1: 0, 7: 1, 3: 2, 4: 3, 2: 4}
    out.sort(key=lambda c: (rank.get(c.order, 9), c.trace))
    return tuple(out)


def conjugacy_classes() -> list[ConjugacyClass]:
    return list(_classes())


def class_of(m: Mat3F2) -> ConjugacyClass:
    for c in _classes():
        if m in c.members:
            return c
    raise SingularMatrixError(f"{m} is not in GL(3,2)")


def conjugate(m: Mat3F2, s: Mat3F2) -> Mat3F2:
    """s^-1 m s."""
    return s.inverse() @ m @ s


def centralizer(m: Mat3F2) -> list[Mat3F2]:
    return [s for s in _group_tuple() if s @ m == m @ s]


def _closure_check(H):
    hs = set(H)
    if not hs:
        raise NotASubgroupError("empty set")
    for a in hs:
        for b in hs:
            if a @ b not in hs:
                raise NotASubgroupError(f"{a} * {b} leaves the set")


def group_structure_id(H) -> str:
    """Name a subgroup of GL(3,2) by order, exponent and commutativity.

    Recognises the groups that occur as automorphism groups of the
    twisted curves; anything else is reported as ``order n``.
    """
    _closure_check(H)
    n = len(set(H))
    abelian = all(a @ b == b @ a for a in H for b in H)
    exponent = 1
    for h in H:
        o = h.order()
        exponent = exponent * o // gcd(exponent, o)
    if n == 1:
        return "trivial"
    if n == 168:
        return "PSL(3,2)"
    if abelian and exponent == n:
        return f"Z/{n}Z"
    if n == 8 and not abelian and exponent == 4:
        # D4 and Q8 are the non-abelian groups of order 8; Q8 has a single involution
        involutions = sum(1 for h in H if h.order() == 2)
        return "D4" if involutions == 5 else "Q8"
    return f"order {n}"
