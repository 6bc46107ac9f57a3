"""The 168 twists of the invariant quartic and the named models.

``twist_curve(P)`` is the determinant quotient

    det(v | P v^(2) | P^3 v^(8)) / det(v | P v^(2) | P^2 v^(4))

with v = (X, Y, Z) a column and v^(q) its coordinate-wise q-th power.
Brute-force searches over the group run on a 15-bit encoding of binary
quartics, on which each substitution acts as a fixed F_2-linear map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import F2, ZZ, MultiPoly, mp_det3, mp_exact_div, mp_reduce_mod2, mp_subst_linear, parse_poly
from .algebra.poly import to_text
from .group import CYCLIC_SHIFT, IDENTITY, Mat3F2, centralizer, class_of, conjugacy_classes, enumerate_group

X, Y, Z = MultiPoly.gens(F2, 3)


class NotATwistError(ValueError):
    pass


@dataclass(frozen=True)
class Curve:
    equation: MultiPoly
    name: str | None = None
    P: Mat3F2 | None = None

    def __post_init__(self):
        f = self.equation
        if f.ring is not F2 or f.nvars != 3:
            raise ValueError("a curve needs a ternary polynomial over F_2")
        if f.is_zero() or not f.is_homogeneous(4):
            raise ValueError(f"not a nonzero homogeneous quartic: {f}")

    @property
    def mask(self) -> int:
        return quartic_mask(self.equation)

    def __str__(self):
        return to_text(self.equation)

    def counts(self, upto: int = 3) -> tuple:
        from .geometry import count_points
        return tuple(count_points(self, k) for k in range(1, upto + 1))

    def substitute(self, M: Mat3F2) -> "Curve":
        return Curve(mp_subst_linear(self.equation, M))


# ---------------------------------------------------------------------------
# quartics as 15-bit vectors

QUARTIC_MONOMIALS = tuple(sorted(((a, b, 4 - a - b) for a in range(5) for b in range(5 - a)), reverse=True))
_MONO_INDEX = {m: i for i, m in enumerate(QUARTIC_MONOMIALS)}


def quartic_mask(f: MultiPoly) -> int:
    mask = 0
    for m in f.terms:
        mask |= 1 << _MONO_INDEX[m]
    return mask


def mask_to_poly(mask: int) -> MultiPoly:
    return MultiPoly(F2, {m: 1 for i, m in enumerate(QUARTIC_MONOMIALS) if mask >> i & 1}, 3)


@lru_cache(maxsize=None)
def _action(bits: int) -> tuple:
    M = Mat3F2(bits)
    return tuple(quartic_mask(mp_subst_linear(MultiPoly.monomial(F2, m), M)) for m in QUARTIC_MONOMIALS)


def act(mask: int, M: Mat3F2) -> int:
    """Mask of f(M v) given the mask of f."""
    images = _action(M.bits)
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out ^= images[i]
        mask >>= 1
        i += 1
    return out


# ---------------------------------------------------------------------------


def _apply_to_column(M: Mat3F2, col):
    rows = M.rows()
    out = []
    for r in rows:
        e = MultiPoly(F2, {}, 3)
        for c, v in zip(r, col):
            if c:
                e = e + v
        out.append(e)
    return out


def twist_numerator_denominator(P: Mat3F2):
    v = [X, Y, Z]
    v2 = [x ** 2 for x in v]
    v4 = [x ** 4 for x in v]
    v8 = [x ** 8 for x in v]
    c2 = _apply_to_column(P, v2)
    num3 = _apply_to_column(P ** 3, v8)
    den3 = _apply_to_column(P ** 2, v4)
    num = mp_det3([[v[i], c2[i], num3[i]] for i in range(3)])
    den = mp_det3([[v[i], c2[i], den3[i]] for i in range(3)])
    return num, den


def twist_curve(P: Mat3F2) -> Curve:
    if not P.is_invertible():
        from .group import SingularMatrixError
        raise SingularMatrixError(f"{P} is singular")
    return Curve(_twist_equation(P.bits), P=P)


@lru_cache(maxsize=None)
def _twist_equation(bits: int) -> MultiPoly:
    num, den = twist_numerator_denominator(Mat3F2(bits))
    return mp_exact_div(num, den)


@lru_cache(maxsize=None)
def _twist_table() -> dict:
    """mask -> P for all 168 twists."""
    table = {}
    for P in enumerate_group():
        m = quartic_mask(_twist_equation(P.bits))
        if m in table:
            raise AssertionError(f"twists of {table[m]} and {P} coincide")
        table[m] = P
    return table


def all_twists() -> list[Curve]:
    return [twist_curve(P) for P in enumerate_group()]


# ---------------------------------------------------------------------------
# named models

_CATALOG_TEXT = [
    ("K", "X^3*Y + Y^3*Z + Z^3*X"),
    ("alpha", "X^4+Y^4+Z^4+X^2*Y^2+Y^2*Z^2+Z^2*X^2+X^2*Y*Z+X*Y^2*Z+X*Y*Z^2"),
    ("A", "X^3*Y+X^2*Y^2+X*Z^3+X^2*Z^2+Y^3*Z+Y*Z^3"),
    ("gamma10", "X^4+Y^4+Z^4+X^3*Y+X*Z^3+Y^3*Z+X*Y*Z^2"),
    ("X_N7", "X*Y*(X+Y)*(X+Z)+Y*Z*(Z+Y)*Y+Z*X*(X+Z)*Z"),
    ("X_h1", "Y^4+X*Y^3+(X^2+X*Z)*Y^2+(X^3+Z^3)*Y+(X^4+X*Z^3+Z^4)"),
    ("X_N2", "X^4+Y^4+Z^4+X^3*Y+X*Z^3+Y^3*Z+X*Y*Z^2+X^2*Y^2+X^2*Z^2+Y^2*Z^2+Y*Z^3"),
    ("Kprime", None),
    ("X_N4", "X^2*Y*Z+X^2*Y^2+X^2*Z^2+Y^2*Z^2+X*Y^3+X*Z^3+X^3*Y+X^3*Z"),
]

# Klein's second model with the scalar prefactor cleared
KPRIME_INTEGER = "X^4+21*X^2*Y*Z-147*Y^2*Z^2+49*X*Y^3+49*X*Z^3"

ALIASES = {
    "alpha": "alpha", "I4": "alpha", "α": "alpha",
    "K": "K", "A": "A",
    "gamma10": "gamma10", "gamma_1,0": "gamma10", "gamma": "gamma10",
    "X_N7": "X_N7", "X_N=7": "X_N7",
    "X_h1": "X_h1", "X_h=1": "X_h1",
    "X_N2": "X_N2", "X_N=2": "X_N2",
    "Kprime": "Kprime", "K'": "Kprime", "Kprime_mod2": "Kprime",
    "X_N4": "X_N4", "X_N=4": "X_N4",
}


@lru_cache(maxsize=None)
def _catalog() -> tuple:
    out = []
    for name, text in _CATALOG_TEXT:
        if text is None:
            eq = mp_reduce_mod2(parse_poly(KPRIME_INTEGER, ZZ))
        else:
            eq = parse_poly(text)
        out.append(Curve(eq, name=name))
    return tuple(out)


def catalog() -> list[Curve]:
    return list(_catalog())


def named(name: str) -> Curve:
    key = ALIASES.get(name)
    if key is None:
        raise KeyError(f"unknown curve {name!r}; known: {', '.join(c.name for c in _catalog())}")
    return next(c for c in _catalog() if c.name == key)


def name_of(f: Curve | MultiPoly) -> str | None:
    eq = f.equation if isinstance(f, Curve) else f
    for c in _catalog():
        if c.equation == eq:
            return c.name
    return None


# ---------------------------------------------------------------------------
# equivalence, recovery, automorphisms


def _mask(f) -> int:
    return f.mask if isinstance(f, Curve) else quartic_mask(f)


def equivalences(f, g) -> list[Mat3F2]:
    """All M in GL(3,2) with f(M v) = g."""
    fm, gm = _mask(f), _mask(g)
    return [M for M in enumerate_group() if act(fm, M) == gm]


def are_equivalent(f, g) -> Mat3F2 | None:
    """The least M (by encoding) with f(M v) = g, or None."""
    fm, gm = _mask(f), _mask(g)
    for M in enumerate_group():
        if act(fm, M) == gm:
            return M
    return None


def orbit(f) -> frozenset:
    fm = _mask(f)
    return frozenset(act(fm, M) for M in enumerate_group())


def recover_P(f) -> Mat3F2:
    P = _twist_table().get(_mask(f))
    if P is None:
        raise NotATwistError(f"{f} is not one of the 168 twists")
    return P


def is_twist(f) -> bool:
    return _mask(f) in _twist_table()


def rational_automorphisms(f) -> list[Mat3F2]:
    fm = _mask(f)
    return [M for M in enumerate_group() if act(fm, M) == fm]


def sum_identity_check() -> bool:
    """X_N7 = gamma10 + alpha over F_2."""
    return named("X_N7").equation == named("gamma10").equation + named("alpha").equation


def translation_by_alpha() -> dict:
    """Compare f -> f + alpha between the two order-7 classes.

    Returns, for each pair of order-7 classes, how many members of the
    first are carried into the second by adding alpha, and whether the
    map is a bijection between the two classes.
    """
    alpha = named("alpha").mask
    table = _twist_table()
    sevens = [c for c in conjugacy_classes() if c.order == 7]
    report = {}
    for src in sevens:
        images = []
        for P in src.members:
            m = quartic_mask(_twist_equation(P.bits)) ^ alpha
            Q = table.get(m)
            images.append(None if Q is None else class_of(Q))
        for dst in sevens:
            hit = sum(1 for c in images if c is not None and c.trace == dst.trace)
            report[(src.trace, dst.trace)] = hit
        report[(src.trace, "not a twist")] = sum(1 for c in images if c is None)
    bijective = report[(0, 1)] == 24 and report[(1, 0)] == 24
    return {"counts": report, "classes_swapped": bijective}


def catalog_P_table() -> dict:
    """name -> recovered P for every catalog curve."""
    return {c.name: recover_P(c) for c in _catalog()}


# reference matrices listed beside each named model; the Kprime entry repeats X_N4's
PRINTED_P = {
    "alpha": "100010001",
    "A": "011001100",
    "X_N7": "110011100",
    "K": "010001100",
    "gamma10": "010001101",
    "X_h1": "001011110",
    "X_N2": "011001101",
    "Kprime": "100101110",
    "X_N4": "100101110",
}


__all__ = [
    "Curve", "NotATwistError", "twist_curve", "all_twists", "catalog", "named", "name_of",
    "are_equivalent", "equivalences", "orbit", "recover_P", "is_twist", "rational_automorphisms",
    "sum_identity_check", "translation_by_alpha", "quartic_mask", "mask_to_poly", "act",
    "centralizer", "IDENTITY", "CYCLIC_SHIFT",
]
