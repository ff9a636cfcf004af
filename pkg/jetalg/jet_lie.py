"""
The jet Lie algebra L spanned by X_k(m), m in Z x Z+, with X_k(0,0) = 0.

L is kept abstract (structure constants) and realized twice: inside the smash
slice through xk and inside m_{1,0}Delta through theta. GL2Module carries the
gl2-representations that lift to L-modules.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from sympy import ImmutableMatrix, Rational, zeros

from .exceptions import NotInJetAlgebra, NotInSubalgebra
from .polynomials import AMono, APoly, SparseElement, a_mul, join_signed, to_rat
from .smash import SmashElem, xk
from .vector_fields import VField, in_m10_delta

logger = logging.getLogger(__name__)


class LKey(NamedTuple):
    k: int
    m1: int
    m2: int = 0

    @property
    def m(self):
        return AMono(self.m1, self.m2)

    def __str__(self):
        return f"X{self.k}({self.m1},{self.m2})"


class LElem(SparseElement):
    """Element of L as a map LKey -> coefficient"""
    __slots__ = ()
    _key_type = LKey

    def _keep_key(self, key):
        # X_k(0,0) = 0
        return (key.m1, key.m2) != (0, 0)

    def _check_key(self, key):
        if key.k not in (1, 2):
            raise ValueError(f"axis must be 1 or 2, got {key.k}")
        if key.m2 < 0:
            raise ValueError(f"m2 must be nonnegative, got {tuple(key)}")

    @classmethod
    def basis(cls, k, m1, m2=0, coeff=1):
        return cls({LKey(k, m1, m2): to_rat(coeff)})

    def __str__(self):
        chunks = []
        for key, coeff in self.sorted_items():
            magnitude = abs(coeff)
            text = str(key) if magnitude == 1 else f"{magnitude}*{key}"
            chunks.append((coeff < 0, text))
        return join_signed(chunks)


def _delta(x):
    return 1 if x == 0 else 0


def _structure_constants(k, m, l, s):
    """[X_k(m), X_l(s)] as (LKey, coefficient) pairs"""
    m1, m2 = m
    s1, s2 = s
    if (k, l) == (1, 1):
        return [
            (LKey(1, m1, m2), m1 * _delta(s2)),
            (LKey(1, s1, s2), -s1 * _delta(m2)),
            (LKey(1, m1 + s1, m2 + s2), s1 - m1),
        ]
    if (k, l) == (2, 2):
        return [
            (LKey(2, s1, s2 - 1), -s2 * _delta(m2)),
            (LKey(2, m1, m2 - 1), m2 * _delta(s2)),
            (LKey(2, m1 + s1, m2 + s2 - 1), s2 - m2),
        ]
    if (k, l) == (1, 2):
        return [
            (LKey(2, s1, s2), -s1 * _delta(m2)),
            (LKey(1, m1, m2 - 1), m2 * _delta(s2)),
            (LKey(2, m1 + s1, m2 + s2), s1),
            (LKey(1, m1 + s1, m2 + s2 - 1), -m2),
        ]
    return [(key, -coeff) for key, coeff in _structure_constants(l, s, k, m)]


def l_bracket(x, y):
    return LElem(
        (key, cx * cy * coeff)
        for kx, cx in x.items()
        for ky, cy in y.items()
        for key, coeff in _structure_constants(kx.k, kx.m, ky.k, ky.m)
    )


def theta(x):
    """X1(m) -> (t^m - delta_{m2,0}) t1 d1,  X2(m) -> (t^m - delta_{m2,0}) d2"""
    f1, f2 = [], []
    for key, coeff in x.items():
        shift = int(key.k == 1)
        target = f1 if key.k == 1 else f2
        target.append((AMono(key.m1 + shift, key.m2), coeff))
        if key.m2 == 0:
            target.append((AMono(shift, 0), -coeff))
    return VField(APoly(f1), APoly(f2))


def theta_inv(X):
    """
    Inverse of theta on m_{1,0}Delta.

    Writes f1 = t1*g1 and f2 = g2 and sends each t^m in g_k to X_k(m). The
    constant terms are dropped: they cancel against the delta corrections
    because g_k vanishes at (1, 0).
    """
    if not in_m10_delta(X):
        raise NotInSubalgebra(f"{X} is not in m_(1,0)Delta")
    g1 = a_mul(APoly.monomial(-1), X.f1)
    return LElem(
        [(LKey(1, mono.m1, mono.m2), coeff) for mono, coeff in g1.items()]
        + [(LKey(2, mono.m1, mono.m2), coeff) for mono, coeff in X.f2.items()]
    )


def l_to_smash(x):
    """Linear extension of X_k(m) -> xk(k, m)"""
    result = SmashElem()
    for key, coeff in x.sorted_items():
        result = result + xk(key.k, key.m).scale(coeff)
    return result


def smash_to_l(x):
    """
    Read an element of L back out of the smash slice.

    Every X_k(m) with m != (0,0) has exactly one cover term with u2 = 0 and
    u1 + alpha1 = delta_{k1} outside the shared key 1 . t1^{delta_{k1}} d_k;
    its coefficient is 1 and it names m = (-u1, alpha2). Whatever is left after
    subtracting those must be zero.
    """
    terms = []
    for key, coeff in x.cover.items():
        shift = int(key.k == 1)
        if key.u.m2 != 0 or key.u.m1 + key.alpha.m1 != shift:
            continue
        if key.u == (0, 0) and key.alpha.m2 == 0:
            continue
        terms.append((LKey(key.k, -key.u.m1, key.alpha.m2), coeff))
    candidate = LElem(terms)
    if x - l_to_smash(candidate):
        raise NotInJetAlgebra(f"{x} is not in the span of the X_k(m)")
    return candidate


def _to_matrix(rows):
    return ImmutableMatrix([[Rational(str(to_rat(entry))) for entry in row] for row in rows])


@dataclass(frozen=True)
class GL2Module:
    """
    Finite-dimensional gl2-module given by the images of E11, E12, E21, E22.

    Nothing stops a caller from passing matrices that break the gl2 relations;
    relation_failures() reports them, and corrupted() builds one on purpose.
    """
    name: str
    e11: ImmutableMatrix
    e12: ImmutableMatrix
    e21: ImmutableMatrix
    e22: ImmutableMatrix

    @property
    def dim(self):
        return self.e11.rows

    def rep(self, i, j):
        return {(1, 1): self.e11, (1, 2): self.e12, (2, 1): self.e21, (2, 2): self.e22}[(i, j)]

    @cached_property
    def _columns(self):
        columns = {}
        for i in (1, 2):
            for j in (1, 2):
                matrix = self.rep(i, j)
                columns[(i, j)] = [
                    [(row, to_rat(matrix[row, col])) for row in range(self.dim) if matrix[row, col] != 0]
                    for col in range(self.dim)
                ]
        return columns

    def column(self, i, j, col):
        """Nonzero entries of rho(E_ij) v_col as (row, Fraction) pairs"""
        return self._columns[(i, j)][col]

    def is_diagonal(self, i, j):
        return self.rep(i, j).is_diagonal()

    def relation_failures(self):
        """Pairs (E_ij, E_kl) with [rho(E_ij), rho(E_kl)] != delta_jk rho(E_il) - delta_li rho(E_kj)"""
        failures = []
        units = [(i, j) for i in (1, 2) for j in (1, 2)]
        for i, j in units:
            for k, l in units:
                left = self.rep(i, j) * self.rep(k, l) - self.rep(k, l) * self.rep(i, j)
                right = zeros(self.dim, self.dim)
                if j == k:
                    right += self.rep(i, l)
                if l == i:
                    right -= self.rep(k, j)
                if ImmutableMatrix(left) != ImmutableMatrix(right):
                    failures.append(((i, j), (k, l)))
        return failures

    @classmethod
    def natural(cls):
        units = {}
        for i in (1, 2):
            for j in (1, 2):
                rows = [[0, 0], [0, 0]]
                rows[i - 1][j - 1] = 1
                units[(i, j)] = _to_matrix(rows)
        return cls('natural', units[(1, 1)], units[(1, 2)], units[(2, 1)], units[(2, 2)])

    @classmethod
    def adjoint(cls):
        """ad on gl2 in the basis E11, E12, E21, E22"""
        natural = cls.natural()
        basis = [natural.rep(i, j) for i in (1, 2) for j in (1, 2)]

        def coordinates(matrix):
            return [matrix[0, 0], matrix[0, 1], matrix[1, 0], matrix[1, 1]]

        images = []
        for x in basis:
            columns = [coordinates(x * b - b * x) for b in basis]
            images.append(ImmutableMatrix(columns).T)
        return cls('adjoint', *images)

    @classmethod
    def symmetric_power(cls, n):
        """
        Sym^n of the natural module on x1^p x2^(n-p), p = n..0.

        E_ij acts as x_i d/dx_j.
        """
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        monomials = [(p, n - p) for p in range(n, -1, -1)]
        index = {mono: position for position, mono in enumerate(monomials)}
        images = []
        for i in (1, 2):
            for j in (1, 2):
                matrix = zeros(n + 1, n + 1)
                for col, mono in enumerate(monomials):
                    power = mono[j - 1]
                    if not power:
                        continue
                    image = list(mono)
                    image[j - 1] -= 1
                    image[i - 1] += 1
                    matrix[index[tuple(image)], col] += power
                images.append(ImmutableMatrix(matrix))
        return cls(f'sym{n}', *images)

    def corrupted(self):
        """Same module with rho(E12) doubled, which breaks [E12, E21] = E11 - E22"""
        return GL2Module(f'{self.name}-corrupted', self.e11, 2 * self.e12, self.e21, self.e22)

    @classmethod
    def named(cls, name):
        if name == 'natural':
            return cls.natural()
        if name == 'adjoint':
            return cls.adjoint()
        if name.startswith('sym') and name[3:].isdigit():
            return cls.symmetric_power(int(name[3:]))
        raise ValueError(f"unknown gl2-module '{name}'")


def lift_gl2(x, V):
    """
    Action of x on the lifted L-module V^L:
    X_k(i,0) -> i rho(E_1k), X_k(i,1) -> rho(E_2k), X_k(m) -> 0 for m2 >= 2.
    """
    result = zeros(V.dim, V.dim)
    for key, coeff in x.items():
        scalar = Rational(str(coeff))
        if key.m2 == 0:
            result += scalar * key.m1 * V.rep(1, key.k)
        elif key.m2 == 1:
            result += scalar * V.rep(2, key.k)
    return ImmutableMatrix(result)
