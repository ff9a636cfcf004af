"""
The Weyl algebra D = C[t1^{±1}, t2, d1, d2].

Operators are stored normal-ordered as t1^a t2^b d1^c d2^d. The product uses
the closed reordering formula

    d1^c t1^a = sum_j C(c, j) a(a-1)...(a-j+1) t1^(a-j) d1^(c-j)

(and the same for d2 against t2), so no word is ever rewritten swap by swap.
"""
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .polynomials import AMono, APoly, SparseElement, monomial_text, to_rat


class DMono(NamedTuple):
    """Normal-ordered word t1^a t2^b d1^c d2^d"""
    a: int
    b: int = 0
    c: int = 0
    d: int = 0


def falling_factorial(x, j):
    """x(x-1)...(x-j+1); works for negative and rational x"""
    result = 1
    for i in range(j):
        result *= x - i
    return result


class DOp(SparseElement):
    __slots__ = ()
    _key_type = DMono

    def _check_key(self, key):
        if key.b < 0 or key.c < 0 or key.d < 0:
            raise ValueError(f"t2 and derivative powers must be nonnegative, got {tuple(key)}")

    def _render_key(self, key):
        return monomial_text(key)

    @classmethod
    def monomial(cls, a=0, b=0, c=0, d=0, coeff=1):
        return cls({DMono(a, b, c, d): to_rat(coeff)})

    @classmethod
    def constant(cls, value):
        return cls.monomial(coeff=value)

    @classmethod
    def from_apoly(cls, p):
        """Multiplication operator by p"""
        return cls((DMono(key.m1, key.m2), coeff) for key, coeff in p.items())

    def is_multiplication(self):
        return all(key.c == 0 and key.d == 0 for key in self.keys())

    def to_apoly(self):
        if not self.is_multiplication():
            raise ValueError(f"{self} is not a multiplication operator")
        return APoly((AMono(key.a, key.b), coeff) for key, coeff in self.items())

    def order(self):
        """Highest total derivative order among the terms; -1 for zero"""
        return max((key.c + key.d for key in self.keys()), default=-1)

    def __mul__(self, other):
        if isinstance(other, DOp):
            return d_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


def _mono_mul(x, y):
    """Normal-ordered expansion of the product of two words, as (DMono, factor) pairs"""
    for j in range(x.c + 1):
        factor1 = comb(x.c, j) * falling_factorial(y.a, j)
        if not factor1:
            continue
        for l in range(min(x.d, y.b) + 1):
            factor2 = comb(x.d, l) * falling_factorial(y.b, l)
            if not factor2:
                continue
            yield DMono(x.a + y.a - j, x.b + y.b - l, x.c - j + y.c, x.d - l + y.d), factor1 * factor2


def d_mul(x, y):
    """Product in D, normal ordered"""
    return DOp(
        (key, cx * cy * factor)
        for kx, cx in x.items()
        for ky, cy in y.items()
        for key, factor in _mono_mul(kx, ky)
    )


def d_commutator(x, y):
    return d_mul(x, y) - d_mul(y, x)


def d_apply(x, p):
    """Action of D on A: derivatives first, then multiplication"""
    terms = []
    for key, coeff in x.items():
        for mono, value in p.items():
            factor = falling_factorial(mono.m1, key.c) * falling_factorial(mono.m2, key.d)
            if factor:
                terms.append((AMono(mono.m1 - key.c + key.a, mono.m2 - key.d + key.b), coeff * value * factor))
    return APoly(terms)
