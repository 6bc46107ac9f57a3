"""Dickson invariants of GL(3,2) and integer identities around the Klein quartic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import F2, ZZ, MultiPoly, NonExactDivisionError, mp_det3, mp_exact_div, mp_reduce_mod2, mp_subst_linear, parse_poly
from .algebra.poly import to_text
from .group import enumerate_group


@dataclass(frozen=True)
class DicksonTriple:
    I4: MultiPoly
    I6: MultiPoly
    I7: MultiPoly


class UnexpectedTermError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def dickson_invariants() -> DicksonTriple:
    """Coefficients of prod_v (T + v) over the span of X, Y, Z."""
    X, Y, Z, T = MultiPoly.gens(F2, 4)
    prod = MultiPoly.constant(F2, 1, 4)
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                v = T
                if a:
                    v = v + X
                if b:
                    v = v + Y
                if c:
                    v = v + Z
                prod = prod * v
    by_t = {}
    for (i, j, k, t), coef in prod.terms.items():
        by_t.setdefault(t, {})[(i, j, k)] = coef
    if set(by_t) != {8, 4, 2, 1}:
        raise UnexpectedTermError(f"T-degrees {sorted(by_t)} in an additive product")
    if by_t[8] != {(0, 0, 0): 1}:
        raise UnexpectedTermError("T^8 coefficient is not 1")
    return DicksonTriple(*(MultiPoly(F2, by_t[d], 3) for d in (4, 2, 1)))


def dickson_by_cramer() -> DicksonTriple:
    """Solve [v | v^2 | v^4] (I7, I6, I4)^t = v^8 by Cramer's rule."""
    X, Y, Z = MultiPoly.gens(F2, 3)
    v = [X, Y, Z]
    cols = {e: [x ** e for x in v] for e in (1, 2, 4, 8)}

    def det(a, b, c):
        return mp_det3([[cols[a][i], cols[b][i], cols[c][i]] for i in range(3)])

    d = det(1, 2, 4)
    return DicksonTriple(
        I4=mp_exact_div(det(1, 2, 8), d),
        I6=mp_exact_div(det(1, 8, 4), d),
        I7=mp_exact_div(det(8, 2, 4), d),
    )


def verify_invariance(f: MultiPoly) -> bool:
    return all(mp_subst_linear(f, M) == f for M in enumerate_group())


# ---------------------------------------------------------------------------
# characteristic-zero models

_S = {
    "s1": "X+Y+Z",
    "s2": "X*Y+Y*Z+Z*X",
    "s3": "X*Y*Z",
}


def _zz(text: str) -> MultiPoly:
    for k, v in _S.items():
        text = text.replace(k, f"({v})")
    return parse_poly(text, ZZ)


# integer forms, rational prefactors cleared
INTEGER_MODELS = {
    "O4": "(X^4+Y^4+Z^4) - 3*(X^2*Y^2+Y^2*Z^2+Z^2*X^2) + 3*(X^2*Y*Z+X*Y^2*Z+X*Y*Z^2)"
          " + 6*(X^3*Z+Y^3*X+Z^3*Y)",
    "A4": "7*s1*(s1^3+s3) - (2*s1^2+s2)^2",
    "Kprime": "X^4+21*X^2*Y*Z-147*Y^2*Z^2+49*X*Y^3+49*X*Z^3",
}

_TARGETS = {"O4": "alpha", "A4": "alpha", "Kprime": "Kprime"}


def integer_model(name: str) -> MultiPoly:
    try:
        return _zz(INTEGER_MODELS[name])
    except KeyError:
        raise KeyError(f"unknown model {name!r}; known: {', '.join(INTEGER_MODELS)}") from None


def reduce_and_compare(name: str) -> bool:
    from .twist import named
    f = integer_model(name)
    return mp_reduce_mod2(f) == named(_TARGETS[name]).equation


# ---------------------------------------------------------------------------
# the elliptic quotient of the Klein quartic by the coordinate 3-cycle

def _elliptic_pieces():
    s1, s2 = _zz("s1"), _zz("s2")
    x = _zz("X^2*Y+Y^2*Z+Z^2*X+X*Y*Z")
    y = s1 * s2
    z = _zz("s3")
    K = _zz("X^3*Y+Y^3*Z+Z^3*X")
    Kbar = _zz("X^3*Z+Y^3*X+Z^3*Y")
    return s1, s2, x, y, z, K, Kbar


def _weierstrass(x, y, z):
    return y * y * z - 5 * x * y * z + x ** 3 + x * x * z + 7 * x * z * z


@dataclass
class IdentityResult:
    name: str
    holds: bool
    lhs: str
    rhs: str
    diff: str = ""

    def __bool__(self):
        return self.holds


def _compare(name, lhs, rhs) -> IdentityResult:
    d = lhs - rhs
    return IdentityResult(name, d.is_zero(), to_text(lhs), to_text(rhs), "" if d.is_zero() else to_text(d))


def elliptic_identity() -> list[IdentityResult]:
    s1, s2, x, y, z, K, _ = _elliptic_pieces()
    main = _compare("weierstrass", _weierstrass(x, y, z), K * _zz("X^3*Y^2+Y^3*Z^2+Z^3*X^2"))
    aux = _compare("x_times_s1", s1 * x, K + s2 * s2)
    return [main, aux]


@dataclass
class ProbeReport:
    """What happens to the Weierstrass relation when x is replaced by s2^2/s1."""

    lhs_degree: int
    rhs_degree: int
    cleared_power: int
    divisible_by_K: bool
    divisible_by_K_Kbar: bool
    cofactor_of_K: str | None
    cofactor_of_K_Kbar: str | None
    cofactor_is_s2_squared: bool
    samples: dict = field(default_factory=dict)

    @property
    def holds_as_printed(self) -> bool:
        return self.lhs_degree == self.rhs_degree and all(
            s["lhs"] == s["rhs"] for s in self.samples.values())


def elliptic_identity_variant_probe() -> ProbeReport:
    s1, s2, _, y, z, K, Kbar = _elliptic_pieces()
    # s1^3 * W(s2^2/s1, y, z) written out term by term
    cleared = (s1 ** 3 * y * y * z - 5 * s1 ** 2 * s2 ** 2 * y * z + s2 ** 6
               + s1 * s2 ** 4 * z + 7 * s1 ** 2 * s2 ** 2 * z * z)
    rhs = K * Kbar
    try:
        cof = mp_exact_div(cleared, K)
    except NonExactDivisionError:
        cof = None
    try:
        cof2 = mp_exact_div(cleared, rhs)
    except NonExactDivisionError:
        cof2 = None

    samples = {}
    for pt in ((1, 2, 3), (1, 1, 1)):
        sv = int(s1.eval(pt))
        xv = Fraction(int(s2.eval(pt)) ** 2, sv)
        yv, zv = int(y.eval(pt)), int(z.eval(pt))
        lhs = yv * yv * zv - 5 * xv * yv * zv + xv ** 3 + xv * xv * zv + 7 * xv * zv * zv
        r = int(rhs.eval(pt))
        samples[pt] = {"lhs": lhs, "rhs": r, "ratio": lhs / r if r else None}
    return ProbeReport(
        lhs_degree=9, rhs_degree=rhs.degree(), cleared_power=3,
        divisible_by_K=cof is not None, divisible_by_K_Kbar=cof2 is not None,
        cofactor_of_K=None if cof is None else to_text(cof),
        cofactor_of_K_Kbar=None if cof2 is None else to_text(cof2),
        cofactor_is_s2_squared=cof2 is not None and cof2 == s2 * s2,
        samples=samples,
    )
