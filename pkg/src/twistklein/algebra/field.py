"""Binary fields GF(2^k), 1 <= k <= 64.

Elements are integers whose bits are the coefficients of a polynomial
over F_2, reduced modulo the least irreducible binary polynomial of
degree k.  Small fields (k <= 16) additionally carry log/exp tables, both
as python lists for scalar work and as numpy arrays for vectorised
evaluation over whole point sets.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import gcd

import numpy as np

MAX_DEGREE = 64
TABLE_DEGREE = 16


class FieldMismatchError(TypeError):
    pass


class EmbeddingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# binary polynomial helpers (polynomials over F_2 packed into ints)


def clmul(a: int, b: int) -> int:
    """Carry-less product of two binary polynomials."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def bpoly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    da = a.bit_length() - 1
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length() - 1
    return a


def bpoly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, bpoly_mod(a, b)
    return a


def bpoly_mulmod(a: int, b: int, m: int) -> int:
    return bpoly_mod(clmul(a, b), m)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(m: int) -> bool:
    """Rabin's test: x^(2^k) = x mod m and gcd(x^(2^(k/q)) - x, m) = 1
    for every prime q dividing k."""
    k = m.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True

    def x_pow_2j(j):
        r = 2  # x
        for _ in range(j):
            r = bpoly_mulmod(r, r, m)
        return r

    if x_pow_2j(k) != 2:
        return False
    for q in _prime_factors(k):
        if bpoly_gcd(x_pow_2j(k // q) ^ 2, m) != 1:
            return False
    return True


def least_irreducible(k: int) -> int:
    for m in range((1 << k) | 1, 1 << (k + 1), 2 if k > 1 else 1):
        if is_irreducible(m):
            return m
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class FieldContext:
    """The field GF(2^k) with a fixed modulus.

    Use :func:`get_field` instead of instantiating directly so that each
    degree maps to one shared context.
    """

    char = 2

    def __init__(self, degree: int):
        if not 1 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {degree}")
        self.degree = degree
        self.modulus = least_irreducible(degree)
        self.order = 1 << degree
        self.mask = self.order - 1
        self._exp = self._log = None
        self._np_exp = self._np_log = None
        if degree <= TABLE_DEGREE:
            self._build_tables()

    def _build_tables(self):
        q1 = self.order - 1
        gen = self._find_generator()
        exp = [0] * (2 * q1 + 1)
        log = [0] * self.order
        x = 1
        for i in range(q1):
            exp[i] = x
            log[x] = i
            x = self._clmul_reduce(x, gen)
        for i in range(q1, 2 * q1 + 1):
            exp[i] = exp[i - q1]
        self._exp, self._log = exp, log
        self._np_exp = np.array(exp, dtype=np.int64)
        self._np_log = np.array(log, dtype=np.int64)
        self.generator = gen

    def _find_generator(self) -> int:
        q1 = self.order - 1
        if q1 == 1:
            return 1
        cofactors = [q1 // p for p in _prime_factors(q1)]
        for g in range(2, self.order):
            if all(self._pow_slow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("multiplicative group not cyclic?")

    def _pow_slow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._clmul_reduce(r, a)
            a = self._clmul_reduce(a, a)
            e >>= 1
        return r

    def _clmul_reduce(self, a, b):
        return bpoly_mod(clmul(a, b), self.modulus)

    # -- ring interface used by MultiPoly -------------------------------
    zero = 0
    one = 1

    @property
    def name(self) -> str:
        return f"F{self.order}"

    def __repr__(self):
        return f"FieldContext(degree={self.degree}, modulus={bin(self.modulus)})"

    def __reduce__(self):
        return (get_field, (self.degree,))

    def is_zero(self, a: int) -> bool:
        return a == 0

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        return a

    def from_int(self, n: int) -> int:
        return n & 1

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._clmul_reduce(a, b)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 0 if e else 1
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + self.name)
        if self._log is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        # extended Euclid on binary polynomials
        u, v = a, self.modulus
        g1, g2 = 1, 0
        while u != 1:
            j = u.bit_length() - v.bit_length()
            if j < 0:
                u, v, g1, g2 = v, u, g2, g1
                j = -j
            u ^= v << j
            g1 ^= g2 << j
        return bpoly_mod(g1, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, times: int = 1) -> int:
        for _ in range(times % self.degree if self.degree else 0):
            a = self.mul(a, a)
        return a

    def sqrt(self, a: int) -> int:
        return self.frobenius(a, self.degree - 1)

    def trace(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.degree):
            t ^= x
            x = self.mul(x, x)
        return t

    def orbit_length(self, a: int) -> int:
        """Size of the Frobenius orbit of ``a`` (degree of its field of definition)."""
        x = self.mul(a, a)
        n = 1
        while x != a:
            x = self.mul(x, x)
            n += 1
        return n

    def elements(self):
        return range(self.order)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    # -- vectorised arithmetic (k <= 16 only) ---------------------------
    def _need_tables(self):
        if self._np_log is None:
            raise ValueError(f"vectorised arithmetic needs degree <= {TABLE_DEGREE}")

    def vmul(self, a, b):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self._np_exp[self._np_log[a] + self._np_log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vpow(self, a, e: int):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        r = self._np_exp[(self._np_log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, r)


_cache_lock = threading.Lock()


@lru_cache(maxsize=None)
def _make_field(degree: int) -> FieldContext:
    return FieldContext(degree)


def get_field(degree: int) -> FieldContext:
    """Shared context for GF(2^degree)."""
    with _cache_lock:
        return _make_field(degree)


F2 = get_field(1)


class FieldElement:
    """Immutable element of a binary field."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        if value < 0 or value >> ctx.degree:
            raise ValueError(f"{value:#x} is not an element of {ctx.name}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other) -> int:
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if other.ctx is not self.ctx:
            raise FieldMismatchError(f"{self.ctx.name} vs {other.ctx.name}")
        return other.value

    def __add__(self, other):
        return FieldElement(self.ctx, self.value ^ self._check(other))

    __radd__ = __sub__ = __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.value, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div(self.value, self._check(other)))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def frobenius(self):
        return FieldElement(self.ctx, self.ctx.mul(self.value, self.value))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other and other in (0, 1)
        return isinstance(other, FieldElement) and self.ctx is other.ctx and self.value == other.value

    def __hash__(self):
        return hash((self.ctx.degree, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value:#x}@{self.ctx.name}"

    __str__ = __repr__


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def frobenius(a: FieldElement) -> FieldElement:
    return a.frobenius()


def parse_element(text: str) -> FieldElement:
    """Inverse of ``repr``: ``'0x3@F16'`` -> element 3 of GF(16)."""
    value, _, field = text.partition("@")
    order = int(field.lstrip("F"))
    k = order.bit_length() - 1
    if 1 << k != order:
        raise ValueError(f"bad field name {field!r}")
    return FieldElement(get_field(k), int(value, 16))


# ---------------------------------------------------------------------------
# univariate polynomials over GF(2^k) as coefficient lists (low to high);
# only what root finding needs.


def _upoly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _upoly_mod(ctx, f, g):
    f = list(f)
    dg = len(g) - 1
    inv_lead = ctx.inv(g[-1])
    while len(f) - 1 >= dg and f:
        c = ctx.mul(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] ^= ctx.mul(c, gi)
        _upoly_trim(f)
    return f


def _upoly_mul(ctx, f, g):
    if not f or not g:
        return []
    r = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                r[i + j] ^= ctx.mul(a, b)
    return _upoly_trim(r)


def _upoly_gcd(ctx, f, g):
    f, g = _upoly_trim(list(f)), _upoly_trim(list(g))
    while g:
        f, g = g, _upoly_mod(ctx, f, g)
    if f:
        inv = ctx.inv(f[-1])
        f = [ctx.mul(c, inv) for c in f]
    return f


def _upoly_div(ctx, f, g):
    f = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    inv_lead = ctx.inv(g[-1])
    dg = len(g) - 1
    while f and len(f) - 1 >= dg:
        c = ctx.mul(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] ^= ctx.mul(c, gi)
        _upoly_trim(f)
    return _upoly_trim(q)


def split_roots(ctx: FieldContext, f: list[int]) -> list[int]:
    """Roots of a squarefree polynomial that splits completely over ``ctx``.

    Equal-degree splitting with the trace map Tr(b*x) for b running over
    the polynomial basis 1, t, t^2, ... -- deterministic, and some basis
    element separates any two distinct roots.
    """
    f = _upoly_trim(list(f))
    if len(f) <= 1:
        return []
    if len(f) == 2:
        return [ctx.div(f[0], f[1])]
    for i in range(ctx.degree):
        beta = 1 << i
        # Tr(beta x) mod f
        t = _upoly_mod(ctx, [0, beta], f)
        acc = list(t)
        for _ in range(ctx.degree - 1):
            t = _upoly_mod(ctx, _upoly_mul(ctx, t, t), f)
            acc = _upoly_trim([a ^ b for a, b in zip(acc + [0] * len(t), t + [0] * len(acc))])
        g = _upoly_gcd(ctx, f, acc)
        if 1 < len(g) < len(f):
            h = _upoly_div(ctx, f, g)
            return split_roots(ctx, g) + split_roots(ctx, h)
    raise ValueError("polynomial does not split into distinct linear factors")


def _minpoly(ctx: FieldContext, a: int) -> list[int]:
    """Minimal polynomial of ``a`` over F_2, coefficients low to high."""
    conj = [a]
    x = ctx.mul(a, a)
    while x != a:
        conj.append(x)
        x = ctx.mul(x, x)
    poly = [1]
    for r in conj:
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] ^= c
            nxt[i] ^= ctx.mul(c, r)
        poly = nxt
    return poly


@lru_cache(maxsize=None)
def distinguished_primitive(k: int) -> int:
    """Least primitive element of GF(2^k) whose norm to each maximal
    subfield GF(2^d) is a root of the minimal polynomial of the
    distinguished element there (a Conway-style condition).

    Sending gamma_d to gamma_k^((2^k - 1)/(2^d - 1)) then gives embeddings
    that commute along every tower.  Needs log tables, so k <= 16.
    """
    ctx = get_field(k)
    if k == 1:
        return 1
    ctx._need_tables()
    q1 = ctx.order - 1
    constraints = []
    for p in _prime_factors(k):
        d = k // p
        if d == 1:
            continue
        sub = get_field(d)
        e = q1 // (sub.order - 1)
        roots = split_roots(ctx, _minpoly(sub, distinguished_primitive(d)))
        constraints.append((sub.order - 1, {ctx._log[r] // e for r in roots}))
    for v in range(2, ctx.order):
        a = ctx._log[v]
        if gcd(a, q1) == 1 and all(a % m in res for m, res in constraints):
            return v
    raise AssertionError(f"no compatible primitive element in {ctx.name}")


@lru_cache(maxsize=None)
def _embedding_image(small: int, big: int) -> int:
    """Image of the generator t of GF(2^small) inside GF(2^big)."""
    if small == 1:
        return 1
    sub = get_field(small)
    sup = get_field(big)
    if big <= TABLE_DEGREE:
        gs, gb = distinguished_primitive(small), distinguished_primitive(big)
        qs = sub.order - 1
        b = sub._log[2] * pow(sub._log[gs], -1, qs) % qs  # t = gs^b
        return sup.pow(gb, (sup.order - 1) // qs * b)
    # beyond the tables: least root of the subfield modulus
    m = [(sub.modulus >> i) & 1 for i in range(small + 1)]
    return min(split_roots(sup, m))


def embed(a: FieldElement, sup: FieldContext) -> FieldElement:
    """Map ``a`` into the larger field ``sup``.

    Up to degree 16 the embeddings come from :func:`distinguished_primitive`
    and compose along towers; above that the generator of the small field
    goes to the least root of its modulus in ``sup``.
    """
    j, k = a.ctx.degree, sup.degree
    if k % j:
        raise EmbeddingError(f"{a.ctx.name} does not embed in {sup.name}")
    if j == k:
        return FieldElement(sup, a.value)
    return FieldElement(sup, embed_value(a.ctx, a.value, sup))


def embed_value(sub: FieldContext, value: int, sup: FieldContext) -> int:
    if sup.degree % sub.degree:
        raise EmbeddingError(f"{sub.name} does not embed in {sup.name}")
    if sub.degree == sup.degree:
        return value
    g = _embedding_image(sub.degree, sup.degree)
    r, p = 0, 1
    while value:
        if value & 1:
            r ^= p
        p = sup.mul(p, g)
        value >>= 1
    return r


def subfield_degree(ctx: FieldContext, values) -> int:
    """Smallest d | k such that all ``values`` lie in GF(2^d)."""
    k = ctx.degree
    for d in range(1, k + 1):
        if k % d == 0 and all(ctx.frobenius(v, d) == v for v in values):
            return d
    return k


def restrict_value(sup: FieldContext, value: int, sub: FieldContext) -> int:
    """Preimage of ``value`` under :func:`embed_value` (must lie in the image)."""
    # basis images of 1, t, t^2, ... of the subfield; solve over F_2
    g = _embedding_image(sub.degree, sup.degree) if sub.degree > 1 else 1
    images = []
    p = 1
    for _ in range(sub.degree):
        images.append(p)
        p = sup.mul(p, g)
    sol = solve_f2(images, value)
    if sol is None:
        raise EmbeddingError(f"{value:#x} is not in the image of {sub.name}")
    return sol


# ---------------------------------------------------------------------------
# F_2-linear algebra on bit vectors


def solve_f2(columns: list[int], target: int) -> int | None:
    """Find bits c with XOR of columns[i] for set bits i equal to target."""
    basis = []  # (pivot vector, combination)
    for i, col in enumerate(columns):
        v, c = col, 1 << i
        for bv, bc in basis:
            if v ^ bv < v:
                v, c = v ^ bv, c ^ bc
        if v:
            basis.append((v, c))
            basis.sort(reverse=True)
    v, c = target, 0
    for bv, bc in basis:
        if v ^ bv < v:
            v, c = v ^ bv, c ^ bc
    return c if v == 0 else None


def f2_kernel(columns: list[int]) -> list[int]:
    """Basis of the kernel of the F_2-linear map e -> XOR of columns[i] for bits i of e."""
    reduced = []
    kernel = []
    for i, col in enumerate(columns):
        v, c = col, 1 << i
        for bv, bc in reduced:
            if v ^ bv < v:
                v, c = v ^ bv, c ^ bc
        if v:
            reduced.append((v, c))
            reduced.sort(reverse=True)
        else:
            kernel.append(c)
    return kernel


def f2_span(basis: list[int]) -> list[int]:
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return sorted(out)


def additive_kernel(c4: int, c2: int, c1: int, ctx: FieldContext) -> list[FieldElement]:
    """Roots in ``ctx`` of x^8 + c4 x^4 + c2 x^2 + c1 x.

    The polynomial is F_2-linear in x, so the root set is the kernel of a
    k x k binary matrix.  Returned sorted by integer value.
    """
    cols = []
    for i in range(ctx.degree):
        x = 1 << i
        x2 = ctx.mul(x, x)
        x4 = ctx.mul(x2, x2)
        x8 = ctx.mul(x4, x4)
        v = x8
        if c4 & 1:
            v ^= x4
        if c2 & 1:
            v ^= x2
        if c1 & 1:
            v ^= x
        cols.append(v)
    kernel_bits = f2_span(f2_kernel(cols))
    # kernel vectors are combinations of basis elements 1<<i, i.e. field values themselves
    return [FieldElement(ctx, v) for v in sorted(kernel_bits)]


# ---------------------------------------------------------------------------
# small dense linear algebra over GF(2^k)


def mat_inv(ctx: FieldContext, m: list[list[int]]) -> list[list[int]]:
    n = len(m)
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = ctx.inv(a[col][col])
        a[col] = [ctx.mul(inv, x) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x ^ ctx.mul(f, y) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_mul(ctx: FieldContext, a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = 0
            for t in range(m):
                s ^= ctx.mul(a[i][t], b[t][j])
            row.append(s)
        out.append(row)
    return out


def rank(ctx: FieldContext, rows: list[list[int]]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    r = 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ctx.inv(rows[r][col])
        rows[r] = [ctx.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x ^ ctx.mul(f, y) for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
