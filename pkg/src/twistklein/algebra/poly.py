"""Sparse multivariate polynomials over a binary field or over the integers.

A polynomial is a mapping from exponent tuples to nonzero coefficients.
Coefficients are plain ints interpreted by the polynomial's ring: bit
vectors for a :class:`FieldContext`, arbitrary-precision integers for
:data:`ZZ`.  Monomials are ordered lexicographically on the exponent
tuple, largest first; this order drives division and printing.
"""

from __future__ import annotations

import re
from .field import F2, FieldContext


class RingMismatchError(TypeError):
    pass


class NonExactDivisionError(ArithmeticError):
    pass


class SingularMatrixError(ValueError):
    pass


class IntegerRing:
    """The integers, with the same small interface as FieldContext."""

    char = 0
    zero = 0
    one = 1
    name = "ZZ"

    def is_zero(self, a):
        return a == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise NonExactDivisionError(f"{a} is not divisible by {b}")
        return q

    def __repr__(self):
        return "ZZ"

    def __reduce__(self):
        return "ZZ"


ZZ = IntegerRing()

DEFAULT_NAMES = ("X", "Y", "Z", "T")


class MultiPoly:
    """Immutable sparse polynomial in ``nvars`` variables."""

    __slots__ = ("ring", "nvars", "terms", "_hash")

    def __init__(self, ring, terms: dict | None = None, nvars: int = 3, *, _trusted=False):
        self.ring = ring
        self.nvars = nvars
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            for mono, c in (terms or {}).items():
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} does not have {nvars} exponents")
                if not ring.is_zero(c):
                    clean[tuple(mono)] = c
            self.terms = clean
        self._hash = None

    # -- construction ---------------------------------------------------
    @classmethod
    def constant(cls, ring, c, nvars=3):
        return cls(ring, {(0,) * nvars: c}, nvars)

    @classmethod
    def gens(cls, ring=F2, nvars=3):
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls(ring, {tuple(e): ring.one}, nvars))
        return tuple(out)

    @classmethod
    def monomial(cls, ring, exps, coeff=None):
        return cls(ring, {tuple(exps): ring.one if coeff is None else coeff}, len(exps))

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, int):
            return MultiPoly(self.ring, {(0,) * self.nvars: self.ring.from_int(other)}, self.nvars)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = R.add(t.get(m, R.zero), c)
            if R.is_zero(v):
                t.pop(m, None)
            else:
                t[m] = v
        return MultiPoly(R, t, self.nvars, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return MultiPoly(R, {m: R.neg(c) for m, c in self.terms.items()}, self.nvars, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        t: dict = {}
        n = self.nvars
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(m1[i] + m2[i] for i in range(n))
                v = R.add(t.get(m, R.zero), R.mul(c1, c2))
                if R.is_zero(v):
                    del t[m]
                else:
                    t[m] = v
        return MultiPoly(R, t, n, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = MultiPoly(self.ring, {(0,) * self.nvars: self.ring.one}, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring is other.ring and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.name, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[tuple]:
        return sorted(self.terms, reverse=True)

    def leading(self):
        m = max(self.terms)
        return m, self.terms[m]

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def coeff(self, mono) -> int:
        return self.terms.get(tuple(mono), self.ring.zero)

    def __repr__(self):
        return f"MultiPoly({self.ring!r}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # -- calculus and evaluation ----------------------------------------
    def partial(self, var: int) -> "MultiPoly":
        R = self.ring
        t = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            v = R.mul(R.from_int(e), c) if isinstance(R, IntegerRing) else (c if e & 1 else 0)
            if R.is_zero(v):
                continue
            nm = list(m)
            nm[var] -= 1
            t[tuple(nm)] = v
        return MultiPoly(R, t, self.nvars, _trusted=True)

    def eval(self, point, ctx=None):
        """Evaluate at ``point``.

        Over a field ring, ``point`` holds ints or FieldElements of ``ctx``
        (default: the polynomial's own field, or the elements' field).  F_2
        coefficients are embedded trivially, so an F_2 polynomial may be
        evaluated over any GF(2^k).  Over ZZ, any ring supporting + and *
        (ints, Fractions) works.
        """
        if isinstance(self.ring, IntegerRing):
            total = 0
            for m, c in self.terms.items():
                term = c
                for x, e in zip(point, m):
                    if e:
                        term = term * x ** e
                total = total + term
            return total
        from .field import FieldElement
        wrap = False
        vals = []
        for x in point:
            if isinstance(x, FieldElement):
                ctx = ctx or x.ctx
                wrap = True
                vals.append(x.value)
            else:
                vals.append(x)
        ctx = ctx or self.ring
        if self.ring.degree != 1 and ctx is not self.ring:
            raise RingMismatchError("coefficients live in a different field")
        total = 0
        for m, c in self.terms.items():
            term = c
            for x, e in zip(vals, m):
                if e:
                    term = ctx.mul(term, ctx.pow(x, e))
                    if not term:
                        break
            total ^= term
        return ctx(total) if wrap else total

    def eval_many(self, ctx: FieldContext, coords):
        """Vectorised evaluation over numpy arrays of field values (k <= 16)."""
        import numpy as np
        if self.ring.degree != 1 and ctx is not self.ring:
            raise RingMismatchError("coefficients live in a different field")
        coords = [np.asarray(c, dtype=np.int64) for c in coords]
        shape = np.broadcast(*coords).shape
        total = np.zeros(shape, dtype=np.int64)
        cache = {}

        def pw(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = ctx.vpow(coords[i], e)
            return cache[key]

        for m, c in self.terms.items():
            term = np.full(shape, c, dtype=np.int64)
            for i, e in enumerate(m):
                if e:
                    term = ctx.vmul(term, pw(i, e))
            total ^= term
        return total

    def change_ring(self, ring) -> "MultiPoly":
        """Re-interpret coefficients in another ring (F_2 -> GF(2^k), ZZ -> F_2)."""
        if isinstance(self.ring, IntegerRing) and isinstance(ring, FieldContext):
            return MultiPoly(ring, {m: c & 1 for m, c in self.terms.items()}, self.nvars)
        if isinstance(self.ring, FieldContext) and self.ring.degree == 1:
            return MultiPoly(ring, dict(self.terms), self.nvars)
        raise RingMismatchError(f"cannot move {self.ring!r} coefficients to {ring!r}")

    def subst(self, images) -> "MultiPoly":
        """Substitute polynomial ``images[i]`` for variable i."""
        images = list(images)
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        ring = images[0].ring
        nv = images[0].nvars
        one = MultiPoly(ring, {(0,) * nv: ring.one}, nv)
        powers = [{0: one} for _ in images]

        def pw(i, e):
            d = powers[i]
            if e not in d:
                d[e] = pw(i, e - 1) * images[i]
            return d[e]

        total = MultiPoly(ring, {}, nv)
        for m, c in self.terms.items():
            term = MultiPoly(ring, {(0,) * nv: c}, nv)
            for i, e in enumerate(m):
                if e:
                    term = term * pw(i, e)
            total = total + term
        return total


# ---------------------------------------------------------------------------
# module-level operations


def mp_add(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f + g


def mp_mul(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return f * g


def mp_eval(f: MultiPoly, point, ctx=None):
    return f.eval(point, ctx)


def mp_partial(f: MultiPoly, var: int) -> MultiPoly:
    return f.partial(var)


def _matrix_rows(M):
    rows = M.rows() if hasattr(M, "rows") else M
    return [[int(x) for x in r] for r in rows]


def _int_det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def mp_subst_linear(f: MultiPoly, M) -> MultiPoly:
    """Return f(M v) for the column vector v = (X, Y, Z).

    So variable i is replaced by sum_j M[i][j] * v_j.  With this
    convention subst(subst(f, M), N) == subst(f, M @ N).
    """
    if f.nvars != 3:
        raise ValueError("linear substitution needs a trivariate polynomial")
    rows = _matrix_rows(M)
    det = _int_det3(rows)
    singular = det % 2 == 0 if f.ring.char == 2 else det == 0
    if singular:
        raise SingularMatrixError("singular substitution matrix")
    gens = MultiPoly.gens(f.ring, 3)
    images = []
    for r in rows:
        img = MultiPoly(f.ring, {}, 3)
        for c, g in zip(r, gens):
            if c:
                img = img + g * c
        images.append(img)
    return f.subst(images)


def mp_exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Quotient q with f == g * q, by division with the lex order.

    If g divides f then the leading monomial of g divides the leading
    monomial of every intermediate remainder, so the first failure proves
    non-exactness.
    """
    if g.ring is not f.ring:
        raise RingMismatchError(f"{f.ring!r} vs {g.ring!r}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    R = f.ring
    n = f.nvars
    lm_g, lc_g = g.leading()
    rem = dict(f.terms)
    q = {}
    g_items = list(g.terms.items())
    while rem:
        lm = max(rem)
        lc = rem[lm]
        shift = tuple(a - b for a, b in zip(lm, lm_g))
        if min(shift) < 0:
            raise NonExactDivisionError("nonzero remainder")
        c = R.div(lc, lc_g)
        q[shift] = c
        for m, cg in g_items:
            mm = tuple(m[i] + shift[i] for i in range(n))
            v = R.sub(rem.get(mm, R.zero), R.mul(c, cg))
            if R.is_zero(v):
                rem.pop(mm, None)
            else:
                rem[mm] = v
    return MultiPoly(R, q, n, _trusted=True)


def mp_det3(m) -> MultiPoly:
    """Cofactor expansion of a 3x3 matrix of polynomials."""
    rings = {id(e.ring) for row in m for e in row}
    if len(rings) != 1:
        raise RingMismatchError("entries do not share a coefficient ring")
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def mp_reduce_mod2(f: MultiPoly) -> MultiPoly:
    if not isinstance(f.ring, IntegerRing):
        raise RingMismatchError("reduction mod 2 needs integer coefficients")
    return f.change_ring(F2)


# ---------------------------------------------------------------------------
# text form


def _coeff_text(ring, c) -> str:
    if isinstance(ring, IntegerRing):
        return str(c)
    return f"{c:#x}@{ring.name}"


def monomial_text(m, names=DEFAULT_NAMES) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def to_text(f: MultiPoly, names=DEFAULT_NAMES) -> str:
    """``X^a*Y^b*Z^c`` monomials joined by `` + `` in descending lex order."""
    if f.is_zero():
        return "0"
    out = []
    for m in f.monomials():
        c = f.terms[m]
        mono = monomial_text(m, names)
        if c == 1:
            out.append(mono or "1")
        elif not mono:
            out.append(_coeff_text(f.ring, c))
        else:
            out.append(f"{_coeff_text(f.ring, c)}*{mono}")
    return " + ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\^|\*|\+|-|\(|\)))")


def parse_poly(text: str, ring=F2, names=DEFAULT_NAMES[:3]) -> MultiPoly:
    """Parse a polynomial written with + - * ^ and parentheses.

    Accepts the output of :func:`to_text` for integer and F_2
    coefficients, and hand-written forms such as ``XY(X+Y)`` written as
    ``X*Y*(X+Y)``.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        num, ident, op = mt.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif ident is not None:
            if ident not in names:
                raise ValueError(f"unknown variable {ident!r}")
            tokens.append(("var", names.index(ident)))
        else:
            tokens.append(("op", op))
        pos = mt.end()
    gens = MultiPoly.gens(ring, len(names))
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        if i >= len(tokens):
            raise ValueError(f"unexpected end of input in {text!r}")
        i += 1
        return tokens[i - 1]

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        acc = term() * sign if sign == -1 else term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while True:
            if peek() == ("op", "*"):
                take()
                acc = acc * power()
            elif peek()[0] in ("var", "num") or peek() == ("op", "("):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            return base ** e
        return base

    def atom():
        kind, v = take()
        if kind == "num":
            return MultiPoly(ring, {(0,) * len(names): ring.from_int(v)}, len(names))
        if kind == "var":
            return gens[v]
        if v == "(":
            e = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return e
        if v == "-":
            return -atom()
        raise ValueError(f"unexpected token {v!r}")

    result = expr()
    if i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


def variables(ring=F2, nvars=3):
    return MultiPoly.gens(ring, nvars)
