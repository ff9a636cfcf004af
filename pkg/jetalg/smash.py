"""
The slice A (x) g + A of the smash product A#U(g).

A term f.X keeps f in A and X in g apart: t1 . t1*d1 and 1 . t1^2*d1 are
different elements, which is what lets the sums defining X_k(m) cancel.
Only brackets are computed here; they never leave the slice.
"""
from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

from .polynomials import AMono, APoly, SparseElement, a_mul, join_signed, monomial_text
from .vector_fields import VField, g_apply, g_bracket


class CoverKey(NamedTuple):
    """t^u . t^alpha d_k"""
    u: AMono
    alpha: AMono
    k: int


class Cover(SparseElement):
    """Map CoverKey -> coefficient"""
    __slots__ = ()
    _key_type = CoverKey

    def _coerce_key(self, key):
        u, alpha, k = key
        return CoverKey(AMono(*u), AMono(*alpha), k)

    def _check_key(self, key):
        if key.k not in (1, 2):
            raise ValueError(f"axis must be 1 or 2, got {key.k}")
        if key.u.m2 < 0 or key.alpha.m2 < 0:
            raise ValueError(f"t2 exponents must be nonnegative, got {tuple(key)}")


@dataclass(frozen=True)
class SmashElem:
    cover: Cover = field(default_factory=Cover)
    apart: APoly = field(default_factory=APoly)

    def __bool__(self):
        return bool(self.cover) or bool(self.apart)

    def __add__(self, other):
        return SmashElem(self.cover + other.cover, self.apart + other.apart)

    def __sub__(self, other):
        return SmashElem(self.cover - other.cover, self.apart - other.apart)

    def __neg__(self):
        return SmashElem(-self.cover, -self.apart)

    def scale(self, factor):
        return SmashElem(self.cover.scale(factor), self.apart.scale(factor))

    def lmul(self, p):
        """Left multiplication by p in A"""
        cover = Cover(
            (CoverKey(key.u.shift(mono), key.alpha, key.k), coeff * value)
            for key, coeff in self.cover.items()
            for mono, value in p.items()
        )
        return SmashElem(cover, a_mul(p, self.apart))

    def terms(self):
        """Cover terms as (f, X) pairs, f in A and X a basis vector field"""
        for key, coeff in self.cover.sorted_items():
            yield APoly.monomial(key.u.m1, key.u.m2, coeff), VField.basis(key.alpha, key.k)

    def __str__(self):
        chunks = []
        for key, coeff in self.cover.sorted_items():
            left = APoly.monomial(key.u.m1, key.u.m2, abs(coeff))
            right = monomial_text((key.alpha.m1, key.alpha.m2, int(key.k == 1), int(key.k == 2)))
            chunks.append((coeff < 0, f"{left} . {right}"))
        if self.apart:
            chunks.append((False, f"({self.apart}) . 1"))
        return join_signed(chunks)

    def __repr__(self):
        return f"SmashElem({self})"


def _cover_pairs(f, X, sign=1):
    """f . X for f in A and X in g, split over the basis of g"""
    return [
        (CoverKey(u, alpha, k), sign * c * d)
        for u, c in f.items()
        for (alpha, k), d in X.terms()
    ]


def smash_bracket(x, y):
    """
    [f.X, g.Y] = f X(g) . Y - g Y(f) . X + fg . [X, Y]
    [f.X, h.1] = f X(h) . 1
    [h.1, h'.1] = 0
    """
    cover = []
    apart = []
    for f, X in x.terms():
        for g, Y in y.terms():
            cover += _cover_pairs(a_mul(f, g_apply(X, g)), Y)
            cover += _cover_pairs(a_mul(g, g_apply(Y, f)), X, -1)
            cover += _cover_pairs(a_mul(f, g), g_bracket(X, Y))
        if y.apart:
            apart += a_mul(f, g_apply(X, y.apart)).items()
    if x.apart:
        for g, Y in y.terms():
            apart += (-a_mul(g, g_apply(Y, x.apart))).items()
    return SmashElem(Cover(cover), APoly(apart))


def xk(k, m):
    """
    X_k(m) = sum_i (-1)^i C(m2, i) t1^{-m1} t2^i . t1^{m1 + d} t2^{m2 - i} d_k
             - delta_{m2,0} 1 . t1^d d_k,   with d = delta_{k1}
    """
    m1, m2 = m
    if m2 < 0:
        raise ValueError(f"m2 must be nonnegative, got {m}")
    shift = int(k == 1)
    pairs = [
        (CoverKey(AMono(-m1, i), AMono(m1 + shift, m2 - i), k), (-1) ** i * comb(m2, i))
        for i in range(m2 + 1)
    ]
    if m2 == 0:
        pairs.append((CoverKey(AMono(0, 0), AMono(shift, 0), k), -1))
    return SmashElem(Cover(pairs))


def dot(f, X):
    """f . X for f in A and X in g"""
    return SmashElem(Cover(_cover_pairs(f, X)))


def embed_g(X):
    """1 . X"""
    return dot(APoly.constant(1), X)


def embed_a(p):
    """p . 1"""
    return SmashElem(apart=p)
