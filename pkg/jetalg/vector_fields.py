"""
Vector fields on A: the Lie algebra g = Der(A), its subalgebra m_{1,0}Delta,
gl2 and the projection pi: m_{1,0}Delta -> gl2.
"""
import logging
from dataclasses import dataclass, field

from sympy import ImmutableMatrix, Rational, zeros

from .exceptions import NotInSubalgebra
from .polynomials import AMono, APoly, a_derive, a_eval_1_0, a_mul, to_rat
from .weyl import DMono, DOp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VField:
    """Derivation f1*d1 + f2*d2 of A"""
    f1: APoly = field(default_factory=APoly)
    f2: APoly = field(default_factory=APoly)

    @classmethod
    def basis(cls, alpha, k, coeff=1):
        """t^alpha * d_k"""
        mono = APoly.monomial(alpha[0], alpha[1], coeff)
        return cls(f1=mono) if k == 1 else cls(f2=mono)

    @classmethod
    def generator(cls, k, m):
        """t^{m + delta_{k1} e1} * d_k, the generator indexed by m in Z x Z+"""
        return cls.basis((m[0] + (k == 1), m[1]), k)

    @classmethod
    def from_weyl(cls, op):
        """Read back a first-order operator with no order-zero part"""
        f1, f2 = [], []
        for key, coeff in op.items():
            if (key.c, key.d) == (1, 0):
                f1.append((AMono(key.a, key.b), coeff))
            elif (key.c, key.d) == (0, 1):
                f2.append((AMono(key.a, key.b), coeff))
            else:
                raise ValueError(f"{op} is not a vector field")
        return cls(APoly(f1), APoly(f2))

    def component(self, k):
        if k == 1:
            return self.f1
        if k == 2:
            return self.f2
        raise ValueError(f"axis must be 1 or 2, got {k}")

    def terms(self):
        """Basis decomposition as ((alpha, k), coefficient) pairs"""
        for k in (1, 2):
            for alpha, coeff in self.component(k).sorted_items():
                yield (alpha, k), coeff

    def __bool__(self):
        return bool(self.f1) or bool(self.f2)

    def __add__(self, other):
        return VField(self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other):
        return VField(self.f1 - other.f1, self.f2 - other.f2)

    def __neg__(self):
        return VField(-self.f1, -self.f2)

    def scale(self, factor):
        return VField(self.f1.scale(factor), self.f2.scale(factor))

    def lmul(self, p):
        """p * X"""
        return VField(a_mul(p, self.f1), a_mul(p, self.f2))

    def __str__(self):
        parts = [f"({f})*d{k}" for k, f in ((1, self.f1), (2, self.f2)) if f]
        return " + ".join(parts) if parts else "0"


def g_apply(X, p):
    """X(p) = f1*d1(p) + f2*d2(p)"""
    return a_mul(X.f1, a_derive(p, 1)) + a_mul(X.f2, a_derive(p, 2))


def g_bracket(X, Y):
    # [X, Y]_i = X(Y_i) - Y(X_i)
    return VField(
        g_apply(X, Y.f1) - g_apply(Y, X.f1),
        g_apply(X, Y.f2) - g_apply(Y, X.f2),
    )


def g_to_weyl(X):
    return DOp(
        [(DMono(key.m1, key.m2, 1, 0), coeff) for key, coeff in X.f1.items()]
        + [(DMono(key.m1, key.m2, 0, 1), coeff) for key, coeff in X.f2.items()]
    )


def in_m10_delta(X):
    """Both coefficients vanish at the point (1, 0)"""
    return a_eval_1_0(X.f1) == 0 and a_eval_1_0(X.f2) == 0


@dataclass(frozen=True)
class GL2Elem:
    """2x2 rational matrix in the basis E11, E12, E21, E22"""
    matrix: ImmutableMatrix = field(default_factory=lambda: ImmutableMatrix(zeros(2, 2)))

    @classmethod
    def from_entries(cls, e11=0, e12=0, e21=0, e22=0):
        entries = [Rational(to_rat(e).numerator, to_rat(e).denominator) for e in (e11, e12, e21, e22)]
        return cls(ImmutableMatrix(2, 2, entries))

    @classmethod
    def unit(cls, i, j):
        """Matrix unit E_ij"""
        entries = [0, 0, 0, 0]
        entries[2 * (i - 1) + (j - 1)] = 1
        return cls.from_entries(*entries)

    def entry(self, i, j):
        return to_rat(self.matrix[i - 1, j - 1])

    def __add__(self, other):
        return GL2Elem(self.matrix + other.matrix)

    def __sub__(self, other):
        return GL2Elem(self.matrix - other.matrix)

    def __neg__(self):
        return GL2Elem(-self.matrix)

    def __bool__(self):
        return not self.matrix.is_zero_matrix

    def __str__(self):
        rows = [", ".join(str(self.matrix[i, j]) for j in range(2)) for i in range(2)]
        return "[" + ", ".join(f"[{row}]" for row in rows) + "]"


def gl2_bracket(x, y):
    return GL2Elem(x.matrix * y.matrix - y.matrix * x.matrix)


def pi_project(X):
    """
    Linear part of X at (1, 0).

    f_k = alpha_k (t1 - 1) + beta_k t2 + (terms in m_{1,0}^2), with alpha_k and
    beta_k read off as the partial derivatives at (1, 0); the image is
    alpha1 E11 + alpha2 E12 + beta1 E21 + beta2 E22.
    """
    if not in_m10_delta(X):
        logger.debug(f"pi_project rejected {X}")
        raise NotInSubalgebra(f"{X} does not vanish at (1, 0)")
    alpha1, alpha2 = (a_eval_1_0(a_derive(X.component(k), 1)) for k in (1, 2))
    beta1, beta2 = (a_eval_1_0(a_derive(X.component(k), 2)) for k in (1, 2))
    return GL2Elem.from_entries(alpha1, alpha2, beta1, beta2)
