"""L-polynomials of the twists and the cyclotomic products that predict them.

Polynomials are integer coefficient tuples, constant term first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group import ConjugacyClass


class InconsistentCountsError(ValueError):
    pass


@dataclass(frozen=True)
class LPolynomial:
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def of(cls, *coeffs) -> "LPolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return LPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return LPolynomial(tuple(self[i] - other[i] for i in range(n)))

    def __mul__(self, other):
        if isinstance(other, int):
            return LPolynomial(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return LPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = LPolynomial((1,))
        for _ in range(e):
            r = r * self
        return r

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divmod(self, other: "LPolynomial"):
        """Division over the rationals; returns (quotient, remainder) with
        Fraction coefficients."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        q = [Fraction(0)] * max(len(rem) - d, 1)
        lead = Fraction(other.coeffs[-1])
        while len(rem) - 1 >= d and any(rem):
            shift = len(rem) - 1 - d
            c = rem[-1] / lead
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= c * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return q, rem

    def divides(self, other: "LPolynomial") -> bool:
        return not other.divmod(self)[1]

    def exact_div(self, other: "LPolynomial") -> "LPolynomial":
        q, r = self.divmod(other)
        if r or any(x.denominator != 1 for x in q):
            raise ArithmeticError(f"{other} does not divide {self} over the integers")
        return LPolynomial(tuple(int(x) for x in q))

    def to_list(self) -> list:
        return list(self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                s = mono
            elif mono:
                s = f"{abs(c)}{mono}"
            else:
                s = str(abs(c))
            terms.append(("-" if c < 0 else "+", s))
        if not terms:
            return "0"
        first = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return first + "".join(f" {sgn} {s}" for sgn, s in terms[1:])


Z_PLUS = LPolynomial.of(1, -1, 2)
Z_MINUS = LPolynomial.of(1, 1, 2)
Z_2 = LPolynomial.of(1, 0, -3, 0, 4)
# the two degree-six factors of the order-7 product, split by the trace of P
Z7_PLUS = LPolynomial.of(1, 4, 9, 15, 18, 16, 8)
Z7_MINUS = LPolynomial.of(1, -3, 2, 1, 4, -12, 8)


def l_from_counts(n1: int, n2: int, n3: int) -> LPolynomial:
    """Genus-3 L-polynomial over F_2 from point counts over F_2, F_4, F_8."""
    s1 = 2 + 1 - n1
    s2 = 4 + 1 - n2
    s3 = 8 + 1 - n3
    a1 = -s1
    a2, r2 = divmod(s1 * s1 - s2, 2)
    a3, r3 = divmod(-(s1 ** 3 - 3 * s1 * s2 + 2 * s3), 6)
    if r2 or r3:
        raise InconsistentCountsError(f"counts {(n1, n2, n3)} give a non-integral L-polynomial")
    return LPolynomial((1, a1, a2, a3, 2 * a2, 4 * a1, 8))


def counts_from_l(L: LPolynomial, upto: int = 3) -> tuple:
    """Point counts N_k = 2^k + 1 - p_k with p_k the power sums of the
    reciprocal roots, via Newton's identities."""
    a = [L[i] for i in range(L.degree + 1)]
    p = []
    for k in range(1, upto + 1):
        # p_k = -k a_k - sum_{i=1}^{k-1} a_i p_{k-i}
        v = -k * (a[k] if k < len(a) else 0)
        for i in range(1, k):
            v -= (a[i] if i < len(a) else 0) * p[k - i - 1]
        p.append(v)
    return tuple(2 ** k + 1 - p[k - 1] for k in range(1, upto + 1))


def satisfies_functional_equation(L: LPolynomial, q: int = 2, genus: int = 3) -> bool:
    return (L[0] == 1 and L.degree == 2 * genus
            and all(L[genus + i] == q ** i * L[genus - i] for i in range(1, genus + 1)))


# ---------------------------------------------------------------------------


def _bareiss_det(m):
    """Fraction-free determinant of a square matrix of LPolynomials."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = LPolynomial((1,))
    for k in range(n - 1):
        if not a[k][k].coeffs:
            swap = next((i for i in range(k + 1, n) if a[i][k].coeffs), None)
            if swap is None:
                return LPolynomial(())
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def zeta_product(m: int) -> LPolynomial:
    """prod over m-th roots of unity z of (1 - z t + 2 z^2 t^2).

    This is the norm of g(z) = 1 - t z + 2 t^2 z^2 from Z[t][z]/(z^m - 1),
    i.e. the determinant of multiplication by g on the basis 1, z, ...,
    z^(m-1), which equals the resultant Res_z(z^m - 1, g).
    """
    if m < 1:
        raise ValueError("m must be positive")
    g = {0: LPolynomial.of(1), 1: LPolynomial.of(0, -1), 2: LPolynomial.of(0, 0, 2)}
    zero = LPolynomial(())
    # column j: g * z^j reduced mod z^m - 1
    mat = [[zero] * m for _ in range(m)]
    for j in range(m):
        for e, c in g.items():
            i = (j + e) % m
            mat[i][j] = mat[i][j] + c
    det = _bareiss_det(mat)
    if det[0] < 0:
        det = det * -1
    return det


def z3() -> LPolynomial:
    return zeta_product(3).exact_div(Z_PLUS)


FACTORS = {
    "z+": Z_PLUS,
    "z-": Z_MINUS,
    "z2": Z_2,
    "z3": None,  # filled lazily
    "z7+": Z7_PLUS,
    "z7-": Z7_MINUS,
}


def factor_list() -> dict:
    out = dict(FACTORS)
    out["z3"] = z3()
    return out


def expected_l_for(order: int, trace: int) -> LPolynomial:
    if order == 1:
        return Z_PLUS ** 3
    if order == 2:
        return Z_PLUS * Z_MINUS ** 2
    if order == 4:
        # counts (2, 2, 14) on every order-4 twist force z+ z2
        return Z_PLUS * Z_2
    if order == 3:
        return Z_PLUS * z3()
    if order == 7:
        return Z7_PLUS if trace == 0 else Z7_MINUS
    raise ValueError(f"no element of order {order} in PSL(3,2)")


def expected_l(cls: ConjugacyClass) -> LPolynomial:
    return expected_l_for(cls.order, cls.trace)


def printed_l_for(order: int, trace: int) -> LPolynomial:
    """The classification as usually tabulated; differs from
    expected_l_for only for order 4, where (z+)^2 z- is listed."""
    if order == 4:
        return Z_PLUS ** 2 * Z_MINUS
    return expected_l_for(order, trace)


def class_number(L: LPolynomial) -> int:
    h = L(1)
    if h <= 0:
        raise ValueError("class number must be positive")
    return h


def factorize(L: LPolynomial) -> dict | None:
    """Exponents of the known irreducible factors, or None if L is not a
    product of them."""
    rest = L
    out = {}
    for name, fac in factor_list().items():
        while rest.degree > 0 and fac.divides(rest):
            rest = rest.exact_div(fac)
            out[name] = out.get(name, 0) + 1
    if rest.coeffs != (1,):
        return None
    return out


def factored_string(L: LPolynomial) -> str | None:
    fac = factorize(L)
    if fac is None:
        return None
    return " * ".join(name if e == 1 else f"({name})^{e}" for name, e in fac.items())


def eigenvalue_containment(L: LPolynomial, m: int) -> bool:
    """Every irreducible factor of L divides the order-m cyclotomic product."""
    fac = factorize(L)
    if fac is None:
        return False
    prod = zeta_product(m)
    known = factor_list()
    return all(known[name].divides(prod) for name in fac)
