"""Points, tangents and bitangents of plane quartics over GF(2^k).

Projective points and lines are stored in canonical form: the first
nonzero coordinate is scaled to 1.  A line (a, b, c) means aX + bY + cZ = 0.

In characteristic 2 a binary quartic form is a square exactly when its
two odd-position coefficients vanish, so bitangent detection reduces to
two polynomial equations in the line coefficients, evaluated over the
whole line space of each GF(2^k) at once with numpy.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

from .algebra import F2, MultiPoly, get_field
from .algebra.field import (
    FieldContext, additive_kernel, embed_value, f2_kernel, f2_span, mat_inv, mat_mul, rank, solve_f2,
)
from .group import Mat3F2
from .twist import Curve


class SingularPointError(ValueError):
    pass


class BitangentError(ValueError):
    pass


class NotAFanoPlaneError(ValueError):
    pass


def _eq(f) -> MultiPoly:
    return f.equation if isinstance(f, Curve) else f


def _lcm(a, b):
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------


def canonical(ctx: FieldContext, v) -> tuple:
    v = tuple(v)
    for x in v:
        if x:
            inv = ctx.inv(x)
            return tuple(ctx.mul(inv, y) for y in v)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True, order=True)
class ProjPoint:
    degree: int
    coords: tuple

    @classmethod
    def make(cls, ctx: FieldContext, v) -> "ProjPoint":
        return cls(ctx.degree, canonical(ctx, v))

    @property
    def ctx(self):
        return get_field(self.degree)

    def frobenius(self, times=1) -> "ProjPoint":
        ctx = self.ctx
        return ProjPoint(self.degree, tuple(ctx.frobenius(x, times) for x in self.coords))

    def embed(self, ctx: FieldContext) -> "ProjPoint":
        return ProjPoint(ctx.degree, tuple(embed_value(self.ctx, x, ctx) for x in self.coords))

    def __str__(self):
        return "(" + ":".join(f"{x:#x}" for x in self.coords) + f")@F{1 << self.degree}"


@dataclass(frozen=True, order=True)
class Line:
    degree: int
    coeffs: tuple

    @classmethod
    def make(cls, ctx: FieldContext, v) -> "Line":
        return cls(ctx.degree, canonical(ctx, v))

    @property
    def ctx(self):
        return get_field(self.degree)

    def contains(self, p: ProjPoint) -> bool:
        ctx = self.ctx
        if p.degree != self.degree:
            p = p.embed(ctx)
        s = 0
        for a, x in zip(self.coeffs, p.coords):
            s ^= ctx.mul(a, x)
        return s == 0

    def frobenius(self) -> "Line":
        ctx = self.ctx
        return Line(self.degree, tuple(ctx.mul(x, x) for x in self.coeffs))

    def embed(self, ctx: FieldContext) -> "Line":
        return Line(ctx.degree, tuple(embed_value(self.ctx, x, ctx) for x in self.coeffs))

    def field_degree(self) -> int:
        ctx = self.ctx
        d = 1
        for x in self.coeffs:
            d = _lcm(d, ctx.orbit_length(x))
        return d

    def hex(self) -> list:
        return [f"{x:#x}@F{1 << self.degree}" for x in self.coeffs]

    def __str__(self):
        return "[" + ", ".join(self.hex()) + "]"


# ---------------------------------------------------------------------------
# point enumeration and counting


def projective_points(ctx: FieldContext):
    """Arrays (x, y, z) of all canonical points of P^2 over ctx."""
    q = ctx.order
    ys, zs = np.meshgrid(np.arange(q, dtype=np.int64), np.arange(q, dtype=np.int64), indexing="ij")
    x = np.concatenate([np.ones(q * q, dtype=np.int64), np.zeros(q + 1, dtype=np.int64)])
    y = np.concatenate([ys.ravel(), np.ones(q, dtype=np.int64), [0]])
    z = np.concatenate([zs.ravel(), np.arange(q, dtype=np.int64), [1]])
    return x, y, z


def _point_chunks(ctx: FieldContext, chunk=1 << 20):
    q = ctx.order
    if q * q <= chunk:
        yield projective_points(ctx)
        return
    zs = np.arange(q, dtype=np.int64)
    rows = max(1, chunk // q)
    for y0 in range(0, q, rows):
        ys = np.arange(y0, min(q, y0 + rows), dtype=np.int64)
        yy, zz = np.meshgrid(ys, zs, indexing="ij")
        yield np.ones(yy.size, dtype=np.int64), yy.ravel(), zz.ravel()
    yield (np.zeros(q + 1, dtype=np.int64),
           np.concatenate([np.ones(q, dtype=np.int64), [0]]),
           np.concatenate([zs, [1]]))


def count_points(f, k: int) -> int:
    """Number of points of f on P^2(GF(2^k)), by full enumeration."""
    if not 1 <= k <= 16:
        raise ValueError("point counting supports 1 <= k <= 16")
    return _count_points(_eq(f), k)


@lru_cache(maxsize=4096)
def _count_points(f: MultiPoly, k: int) -> int:
    ctx = get_field(k)
    total = 0
    for x, y, z in _point_chunks(ctx):
        total += int(np.count_nonzero(f.eval_many(ctx, (x, y, z)) == 0))
    return total


def rational_points(f, k: int = 1) -> list[ProjPoint]:
    ctx = get_field(k)
    x, y, z = projective_points(ctx)
    vals = _eq(f).eval_many(ctx, (x, y, z))
    idx = np.nonzero(vals == 0)[0]
    return [ProjPoint(k, (int(x[i]), int(y[i]), int(z[i]))) for i in idx]


def singular_points(f, k: int) -> list[ProjPoint]:
    f = _eq(f)
    ctx = get_field(k)
    x, y, z = projective_points(ctx)
    bad = f.eval_many(ctx, (x, y, z)) == 0
    for i in range(3):
        bad &= f.partial(i).eval_many(ctx, (x, y, z)) == 0
    idx = np.nonzero(bad)[0]
    return [ProjPoint(k, (int(x[i]), int(y[i]), int(z[i]))) for i in idx]


def is_smooth(f, max_degree: int = 6) -> bool:
    """No singular point over GF(2^k) for k <= max_degree."""
    return all(not singular_points(f, k) for k in range(1, max_degree + 1))


# ---------------------------------------------------------------------------
# tangents


def _coords(p: ProjPoint | tuple, ctx: FieldContext | None = None):
    if isinstance(p, ProjPoint):
        return p.coords, (ctx or p.ctx)
    return tuple(p), ctx


def tangent_line(f, p: ProjPoint) -> Line:
    f = _eq(f)
    ctx = p.ctx
    if f.eval(p.coords, ctx) != 0:
        raise ValueError(f"{p} is not on the curve")
    grad = [f.partial(i).eval(p.coords, ctx) for i in range(3)]
    if not any(grad):
        raise SingularPointError(f"{p} is a singular point")
    return Line.make(ctx, grad)


def _second_point(ctx, line: Line, p: ProjPoint) -> tuple:
    a, b, c = line.coeffs
    cands = []
    if a:
        cands = [(b, a, 0), (c, 0, a)]
    elif b:
        cands = [(1, 0, 0), (0, c, b)]
    else:
        cands = [(1, 0, 0), (0, 1, 0)]
    for u in cands:
        if canonical(ctx, u) != p.coords:
            return u
    raise AssertionError("line kernel is two-dimensional")


def restrict_to_line(f: MultiPoly, ctx: FieldContext, p, u) -> list[int]:
    """Coefficients [g0..g4] of g(s,t) = f(s p + t u) = sum g_i s^(4-i) t^i."""
    images = []
    for pi, ui in zip(p, u):
        e = MultiPoly(ctx, {}, 2)
        if pi:
            e = e + MultiPoly(ctx, {(1, 0): pi}, 2)
        if ui:
            e = e + MultiPoly(ctx, {(0, 1): ui}, 2)
        images.append(e)
    g = f.change_ring(ctx).subst(images)
    return [g.coeff((4 - i, i)) for i in range(5)]


def _solve_artin_schreier(ctx: FieldContext, c: int):
    """A root y of y^2 + y = c in ctx, or None."""
    cols = []
    for i in range(ctx.degree):
        x = 1 << i
        cols.append(ctx.mul(x, x) ^ x)
    return solve_f2(cols, c)


def _quadratic_roots(ctx: FieldContext, a, b, c):
    """Roots (s:t) of a s^2 + b s t + c t^2 with multiplicity, or None if
    they do not lie in ctx."""
    if a == 0:
        if b == 0:
            return [(1, 0), (1, 0)]
        return [(1, 0), (c, b)]
    if b == 0:
        return [(ctx.sqrt(ctx.div(c, a)), 1)] * 2
    w = ctx.div(ctx.mul(a, c), ctx.mul(b, b))
    y = _solve_artin_schreier(ctx, w)
    if y is None:
        return None
    scale = ctx.div(b, a)
    return [(ctx.mul(scale, y), 1), (ctx.mul(scale, y ^ 1), 1)]


def tangent_intersection_divisor(f, p: ProjPoint) -> Counter:
    """Intersection of f with its tangent at p as a Counter of points.

    The restriction to the tangent factors as t^2 h(s, t) with h a binary
    quadratic; its roots lie in GF(2^k) or GF(2^(2k)).  Points found in
    the quadratic extension are reported over that field.
    """
    f = _eq(f)
    line = tangent_line(f, p)
    ctx = p.ctx
    u = _second_point(ctx, line, p)
    g = restrict_to_line(f, ctx, p.coords, u)
    if not any(g):
        raise SingularPointError("the curve contains its tangent line")
    if g[0] or g[1]:
        raise AssertionError("tangent restriction lacks the double root at p")
    roots = _quadratic_roots(ctx, g[2], g[3], g[4])
    pts = p.coords
    if roots is None:
        ctx = get_field(2 * p.degree)
        g = [embed_value(p.ctx, x, ctx) for x in g]
        pts = tuple(embed_value(p.ctx, x, ctx) for x in p.coords)
        u = tuple(embed_value(p.ctx, x, ctx) for x in u)
        roots = _quadratic_roots(ctx, g[2], g[3], g[4])
    div = Counter({ProjPoint(ctx.degree, pts): 2})
    for s, t in roots:
        v = [ctx.mul(s, a) ^ ctx.mul(t, b) for a, b in zip(pts, u)]
        div[ProjPoint.make(ctx, v)] += 1
    return div


def expected_tangent_divisor(P: Mat3F2, p: ProjPoint) -> Counter:
    """2 p + F(p) P^t + F^3(p) (P^t)^3 as a merged multiset.

    A row vector times P^t is P times the column, so the two extra points
    are P p^(2) and P^3 p^(8).
    """
    ctx = p.ctx
    q = apply_matrix(ctx, P, p.frobenius(1).coords)
    r = apply_matrix(ctx, P ** 3, p.frobenius(3).coords)
    return Counter({p: 2}) + Counter([ProjPoint.make(ctx, q), ProjPoint.make(ctx, r)])


def apply_matrix(ctx: FieldContext, M: Mat3F2, v) -> tuple:
    out = []
    for row in M.rows():
        s = 0
        for c, x in zip(row, v):
            if c:
                s ^= x
        out.append(s)
    return tuple(out)


def divisor_form_check(f, P: Mat3F2, p: ProjPoint) -> bool:
    """Second route: compare the tangent restriction with c * l_p^2 l_q l_r.

    No root finding; q and r must lie on the tangent and the two binary
    quartic forms must agree up to a nonzero scalar.
    """
    f = _eq(f)
    ctx = p.ctx
    line = tangent_line(f, p)
    u = _second_point(ctx, line, p)
    g = restrict_to_line(f, ctx, p.coords, u)
    q = apply_matrix(ctx, P, p.frobenius(1).coords)
    r = apply_matrix(ctx, P ** 3, p.frobenius(3).coords)
    forms = [(0, 1), (0, 1)]  # l_p = t, twice
    for w in (q, r):
        st = _line_coordinates(ctx, p.coords, u, w)
        if st is None:
            return False
        s0, t0 = st
        forms.append((t0, s0))  # t0 s + s0 t vanishes at (s0 : t0)
    expected = [1]
    for a, b in forms:
        nxt = [0] * (len(expected) + 1)
        for i, c in enumerate(expected):
            nxt[i] ^= ctx.mul(c, a)
            nxt[i + 1] ^= ctx.mul(c, b)
        expected = nxt
    return _proportional(ctx, g, expected)


def _line_coordinates(ctx, p, u, w):
    """(s, t) with w = s p + t u, or None if w is off the line."""
    for i in range(3):
        for j in range(i + 1, 3):
            det = ctx.mul(p[i], u[j]) ^ ctx.mul(p[j], u[i])
            if det:
                s = ctx.div(ctx.mul(w[i], u[j]) ^ ctx.mul(w[j], u[i]), det)
                t = ctx.div(ctx.mul(p[i], w[j]) ^ ctx.mul(p[j], w[i]), det)
                if all((ctx.mul(s, a) ^ ctx.mul(t, b)) == c for a, b, c in zip(p, u, w)):
                    return s, t
                return None
    return None


def _proportional(ctx, v, w) -> bool:
    i = next((i for i, x in enumerate(w) if x), None)
    if i is None or not v[i]:
        return False
    lam = ctx.div(v[i], w[i])
    return all(ctx.mul(lam, b) == a for a, b in zip(v, w))


def is_square_form(g) -> bool:
    """Binary quartic over a perfect field of characteristic 2: square iff
    the s^3 t and s t^3 coefficients vanish."""
    return g[1] == 0 and g[3] == 0


# ---------------------------------------------------------------------------
# bitangents


@lru_cache(maxsize=None)
def _odd_coefficient_polys(f: MultiPoly):
    """For each chart of the dual plane, the restricted-form coefficients
    as polynomials in the free line coefficients.

    chart 0: lines X + bY + cZ (substitute X = bY + cZ, parameters Y, Z)
    chart 1: lines Y + cZ      (substitute Y = cZ, parameters X, Z)
    chart 2: the line Z
    """
    out = []
    # vars (s, t, b, c)
    s, t, b, c = MultiPoly.gens(F2, 4)
    g = f.subst([b * s + c * t, s, t])
    out.append(_split_by_st(g, 2))
    s, t, c = MultiPoly.gens(F2, 3)
    g = f.subst([s, c * t, t])
    out.append(_split_by_st(g, 1))
    s, t = MultiPoly.gens(F2, 2)
    g = f.subst([s, t, MultiPoly(F2, {}, 2)])
    out.append(_split_by_st(g, 0))
    return out


def _split_by_st(g: MultiPoly, nparams: int):
    coeffs = [dict() for _ in range(5)]
    for m, c in g.terms.items():
        i = m[1]
        coeffs[i][m[2:]] = c
    return [MultiPoly(F2, d, nparams) if nparams else MultiPoly(F2, {(): 1} if d else {}, 0) for d in coeffs]


def _eval_param_poly(poly, ctx, arrays, shape):
    if poly.nvars == 0:
        return np.full(shape, 1 if poly.terms else 0, dtype=np.int64)
    return np.broadcast_to(poly.eval_many(ctx, arrays), shape)


def bitangent_lines(f, k: int) -> list[Line]:
    """Bitangents whose field of definition is exactly GF(2^k)."""
    f = _eq(f)
    ctx = get_field(k)
    q = ctx.order
    charts = _odd_coefficient_polys(f)
    found = []
    bb, cc = np.meshgrid(np.arange(q, dtype=np.int64), np.arange(q, dtype=np.int64), indexing="ij")
    bb, cc = bb.ravel(), cc.ravel()
    grids = [((bb, cc), bb.shape, lambda i: (1, int(bb[i]), int(cc[i]))),
             ((np.arange(q, dtype=np.int64),), (q,), lambda i: (0, 1, i)),
             ((), (1,), lambda i: (0, 0, 1))]
    for polys, (arrays, shape, make) in zip(charts, grids):
        odd1 = _eval_param_poly(polys[1], ctx, arrays, shape)
        odd3 = _eval_param_poly(polys[3], ctx, arrays, shape)
        nonzero = np.zeros(shape, dtype=bool)
        for j in (0, 2, 4):
            nonzero |= _eval_param_poly(polys[j], ctx, arrays, shape) != 0
        hits = np.nonzero((odd1 == 0) & (odd3 == 0) & nonzero)[0]
        for i in hits:
            line = Line(k, make(int(i)))
            if line.field_degree() == k:
                found.append(line)
    return sorted(found)


@dataclass(frozen=True)
class BitangentSet:
    """Seven bitangents embedded in a common field GF(2^degree)."""

    degree: int
    lines: tuple
    field_degrees: tuple
    orbits: tuple
    frobenius_perm: tuple
    reps: tuple | None = field(default=None)

    @property
    def ctx(self):
        return get_field(self.degree)

    def matrix(self) -> list:
        """3 x 7 coefficient matrix, one column per bitangent (normalised if available)."""
        cols = self.reps if self.reps is not None else tuple(l.coeffs for l in self.lines)
        return [[col[i] for col in cols] for i in range(3)]


def bitangents(f, max_degree: int = 7) -> BitangentSet:
    f = _eq(f)
    per_field = []
    for k in range(1, max_degree + 1):
        for line in bitangent_lines(f, k):
            per_field.append((k, line))
    if len(per_field) != 7:
        raise BitangentError(f"found {len(per_field)} bitangents, expected 7")
    L = 1
    for k, _ in per_field:
        L = _lcm(L, k)
    ctx = get_field(L)
    lines = tuple(line.embed(ctx) for _, line in per_field)
    degrees = tuple(k for k, _ in per_field)
    index = {l: i for i, l in enumerate(lines)}
    perm = tuple(index[l.frobenius()] for l in lines)
    orbits = [None] * 7
    n = 0
    for i in range(7):
        if orbits[i] is None:
            j = i
            while orbits[j] is None:
                orbits[j] = n
                j = perm[j]
            n += 1
    return BitangentSet(L, lines, degrees, tuple(orbits), perm)


def _scale(ctx, lam, v):
    return tuple(ctx.mul(lam, x) for x in v)


def _add(v, w):
    return tuple(a ^ b for a, b in zip(v, w))


def _ratio(ctx, v, w):
    """lambda with v = lambda * w, or None."""
    i = next((i for i, x in enumerate(w) if x), None)
    if i is None:
        return None
    lam = ctx.div(v[i], w[i])
    if all(ctx.mul(lam, b) == a for a, b in zip(v, w)):
        return lam
    return None


def is_additively_closed(reps) -> bool:
    s = set(map(tuple, reps)) | {(0, 0, 0)}
    return len(s) == len(reps) + 1 and all(_add(v, w) in s for v in s for w in s)


def normalize_additive(bs: BitangentSet) -> BitangentSet:
    """Rescale the bitangent coefficient vectors so that together with 0
    they form an F_2-vector space, then fix the remaining common scalar so
    that Frobenius acts on them through a binary matrix."""
    ctx = bs.ctx
    lines = [l.coeffs for l in bs.lines]
    reps: list = [None] * 7
    reps[0] = lines[0]

    def pencil_through_first(j):
        # the line k with lines[0] = a lines[j] + b lines[k]
        for k in range(7):
            if k != j and reps[k] is None:
                ab = _line_coordinates(ctx, lines[j], lines[k], lines[0])
                if ab is not None and ab[0] and ab[1]:
                    reps[j] = _scale(ctx, ab[0], lines[j])
                    reps[k] = _scale(ctx, ab[1], lines[k])
                    return
        raise NotAFanoPlaneError("no third bitangent in the pencil")

    pencil_through_first(1)
    pencil_through_first(next(j for j in range(7) if reps[j] is None))
    known = [v for v in reps if v is not None]
    for j in range(7):
        if reps[j] is None:
            sums = (_add(v, w) for v in known for w in known if v != w)
            reps[j] = next((v for v in sums if _ratio(ctx, v, lines[j]) is not None), None)
            if reps[j] is None:
                raise NotAFanoPlaneError("sum of representatives is not a bitangent")
    basis = next([reps[0], reps[1], reps[j]] for j in range(2, 7)
                 if rank(ctx, [reps[0], reps[1], reps[j]]) == 3)
    if not is_additively_closed(reps):
        raise NotAFanoPlaneError("representatives are not closed under addition")
    B = [[basis[j][i] for j in range(3)] for i in range(3)]
    B2 = [[ctx.mul(x, x) for x in row] for row in B]
    M = mat_mul(ctx, B2, mat_inv(ctx, B))
    mu = next(x for row in M for x in row if x)
    if any(x not in (0, mu) for row in M for x in row):
        raise NotAFanoPlaneError("Frobenius does not act through a scaled binary matrix")
    lam = ctx.inv(mu)
    reps = [_scale(ctx, lam, v) for v in reps]
    return BitangentSet(bs.degree, bs.lines, bs.field_degrees, bs.orbits, bs.frobenius_perm, tuple(reps))


def frobenius_matrix_R(f) -> Mat3F2:
    """The binary matrix R with (a^2, b^2, c^2)^T = R (a, b, c)^T on the
    normalised bitangent vectors."""
    bs = f if isinstance(f, BitangentSet) else bitangents(f)
    if bs.reps is None:
        bs = normalize_additive(bs)
    return _R_from_reps(bs.ctx, bs.reps)


def _R_from_reps(ctx, reps) -> Mat3F2:
    # pick three independent vectors
    basis = None
    for i in range(7):
        for j in range(i + 1, 7):
            for k in range(j + 1, 7):
                cand = [reps[i], reps[j], reps[k]]
                if rank(ctx, cand) == 3:
                    basis = cand
                    break
            if basis:
                break
        if basis:
            break
    B = [[basis[j][i] for j in range(3)] for i in range(3)]
    B2 = [[ctx.mul(x, x) for x in row] for row in B]
    M = mat_mul(ctx, B2, mat_inv(ctx, B))
    if any(x not in (0, 1) for row in M for x in row):
        raise NotAFanoPlaneError("no binary Frobenius matrix for these representatives")
    R = Mat3F2.from_rows(M)
    for v in reps:
        if apply_matrix(ctx, R, v) != tuple(ctx.mul(x, x) for x in v):
            raise NotAFanoPlaneError("R does not square every representative")
    return R


def fano_lines(reps) -> list[frozenset]:
    """Triples of indices whose vectors sum to zero: the lines of the Fano plane."""
    out = set()
    for i in range(7):
        for j in range(i + 1, 7):
            s = _add(reps[i], reps[j])
            k = [t for t in range(7) if tuple(reps[t]) == s]
            if k:
                out.add(frozenset((i, j, k[0])))
    return sorted(out, key=sorted)


def is_fano_configuration(ctx, vectors) -> bool:
    """Seven points of P^2 whose collinear triples form a Fano plane."""
    vecs = [tuple(v) for v in vectors]
    if len(vecs) != 7:
        return False
    triples = []
    for i in range(7):
        for j in range(i + 1, 7):
            if rank(ctx, [vecs[i], vecs[j]]) < 2:
                return False
            for k in range(j + 1, 7):
                if rank(ctx, [vecs[i], vecs[j], vecs[k]]) < 3:
                    triples.append((i, j, k))
    if len(triples) != 7:
        return False
    # every pair lies on exactly one of the triples
    pairs = Counter()
    for t in triples:
        for a in t:
            for b in t:
                if a < b:
                    pairs[a, b] += 1
    return len(pairs) == 21 and set(pairs.values()) == {1}


# ---------------------------------------------------------------------------
# parametrisations by additive polynomials


def _splitting_degree(c4, c2, c1, limit=12) -> int:
    size = 8 if c1 else (4 if c2 else 2)
    for k in range(1, limit + 1):
        if len(_separable_roots(c4, c2, c1, get_field(k))) == size:
            return k
    raise ValueError("no splitting field found")


def _separable_roots(c4, c2, c1, ctx) -> list[int]:
    """Roots of the separable additive polynomial under x^8 + c4 x^4 + c2 x^2 + c1 x."""
    if c1:
        return [e.value for e in additive_kernel(c4, c2, c1, ctx)]
    if c2:  # (x^4 + c4 x^2 + x)^2
        cols = []
        for i in range(ctx.degree):
            x = 1 << i
            x2 = ctx.mul(x, x)
            v = ctx.mul(x2, x2) ^ x
            if c4:
                v ^= x2
            cols.append(v)
    else:  # (x^2 + x)^4
        cols = []
        for i in range(ctx.degree):
            x = 1 << i
            cols.append(ctx.mul(x, x) ^ x)
    return f2_span(f2_kernel(cols))


def additive_zero_multiset(c4: int, c2: int, c1: int):
    """Zeros with multiplicity of (x^8 + c4 x^4 + c2 x^2 + c1 x) / x.

    Returns (ctx, Counter) over the splitting field.
    """
    if not (c4 or c2 or c1):
        raise ValueError("x^8 is not a nontrivial additive polynomial")
    k = _splitting_degree(c4, c2, c1)
    ctx = get_field(k)
    mult = 1 if c1 else (2 if c2 else 4)
    zeros = Counter()
    for r in _separable_roots(c4, c2, c1, ctx):
        zeros[r] += mult
    zeros[0] -= 1
    return ctx, zeros


def _valid_rows(c4, c2, c1):
    ctx, target = additive_zero_multiset(c4, c2, c1)
    roots = sorted(target)
    rows = []
    for x1 in roots:
        for x2 in roots:
            for x3 in roots:
                vals = Counter()
                for e in range(1, 8):
                    v = (x1 if e & 1 else 0) ^ (x2 if e & 2 else 0) ^ (x3 if e & 4 else 0)
                    vals[v] += 1
                if vals == target:
                    rows.append((x1, x2, x3))
    return ctx, rows


def _row_columns(rows):
    return [tuple((r[0] if e & 1 else 0) ^ (r[1] if e & 2 else 0) ^ (r[2] if e & 4 else 0) for r in rows)
            for e in range(1, 8)]


def _row_orbit_reps(rows):
    """One admissible row per orbit under re-choosing the F_2 basis of the
    column space (GL(3,2) acting by precomposition)."""
    from .group import enumerate_group
    seen = set()
    reps = []
    for r in rows:
        if r in seen:
            continue
        reps.append(r)
        for g in enumerate_group():
            cols = g.rows()
            img = tuple((r[0] if cols[0][j] else 0) ^ (r[1] if cols[1][j] else 0) ^ (r[2] if cols[2][j] else 0)
                        for j in range(3))
            seen.add(img)
    return reps


def fano_matrix_from_additive(c4: int, c2: int, c1: int):
    """Search for a 3 x 7 bitangent-style matrix built from the zeros of
    (x^8 + c4 x^4 + c2 x^2 + c1 x) / x.

    Requirements: every row is, as a multiset, the zero multiset; the
    columns together with 0 are closed under addition; the seven column
    lines form a Fano configuration (three F_2-independent columns are
    independent over the field); and the set of lines is mapped to itself
    by Frobenius, i.e. it is defined over F_2.  Each row is an F_2-linear
    functional fixed by its values on a basis, so candidates are triples
    of admissible value vectors.  Returns (ctx, rows) or None.
    """
    ctx, rows = _valid_rows(c4, c2, c1)
    for r1 in _row_orbit_reps(rows):
        for r2 in rows:
            if rank(ctx, [r1, r2]) < 2:
                continue
            for r3 in rows:
                tri = [r1, r2, r3]
                if rank(ctx, tri) < 3:
                    continue
                lines = {canonical(ctx, c) for c in _row_columns(tri)}
                if {tuple(ctx.mul(x, x) for x in l) for l in lines} == lines:
                    return ctx, [list(r) for r in zip(*_row_columns(tri))]
    return None


def additive_defines_fano(c4: int, c2: int, c1: int) -> bool:
    return fano_matrix_from_additive(c4, c2, c1) is not None


# named parametrisations: additive polynomial (c4, c2, c1) and exponents
# (e1, e2, e3) giving the line p^e1 X + p^e2 Y + p^e3 Z
PARAMETRIZATIONS = {
    "K": ((0, 0, 1), (2, 1, 4)),
    "A": ((0, 1, 1), (2, 1, 4)),
    "gamma10": ((1, 0, 1), (2, 1, 4)),
    "X_N2": ((1, 1, 1), (2, 1, 4)),
    "X_N7": ((0, 1, 1), (1, 16, 8)),
    "X_h1": ((1, 0, 1), (1, 8, 2)),
}


def parametrized_lines(c4, c2, c1, exponents):
    """The seven lines p^e1 X + p^e2 Y + p^e3 Z over the nonzero roots p."""
    k = _splitting_degree(c4, c2, c1)
    ctx = get_field(k)
    out = []
    for p in _separable_roots(c4, c2, c1, ctx):
        if p:
            out.append(tuple(ctx.pow(p, e) for e in exponents))
    return ctx, out


def matches_parametrization(f, c4, c2, c1, exponents) -> bool:
    bs = bitangents(f)
    pctx, vecs = parametrized_lines(c4, c2, c1, exponents)
    L = _lcm(pctx.degree, bs.degree)
    big = get_field(L)
    have = {l.embed(big) for l in bs.lines}
    want = {Line.make(big, [embed_value(pctx, x, big) for x in v]) for v in vecs}
    return len(want) == 7 and have == want


def lines_from_matrix(ctx, rows) -> set:
    """Set of lines whose coefficient vectors are the columns of ``rows``."""
    return {Line.make(ctx, col) for col in zip(*rows)}
