"""
Exact arithmetic in A = C[t1^{±1}, t2], with coefficients restricted to Q.

Every element here is a sparse map from monomial keys to Fractions. Values are
immutable once built, zero coefficients are pruned on construction and
equality is structural, so two elements compare equal exactly when they are
the same element of A.
"""
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, NamedTuple

Rat = Fraction


def to_rat(value):
    """Convert an int, a 'p/q' string, a Fraction or a sympy Rational to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def collect_terms(pairs):
    """Sum (key, coefficient) pairs, dropping every zero coefficient"""
    acc = {}
    for key, coeff in pairs:
        if coeff:
            acc[key] = acc.get(key, 0) + coeff
    return {key: Fraction(coeff) for key, coeff in acc.items() if coeff}


def monomial_text(powers, names=('t1', 't2', 'd1', 'd2')):
    """Render t1^a*t2^b*d1^c*d2^d, leaving out zero powers"""
    factors = []
    for name, power in zip(names, powers):
        if power == 0:
            continue
        factors.append(name if power == 1 else f"{name}^{power}")
    return "*".join(factors)


def join_signed(chunks):
    """Join (is_negative, text) chunks into 'a + b - c'"""
    if not chunks:
        return "0"
    negative, text = chunks[0]
    rendered = [f"-{text}" if negative else text]
    for negative, text in chunks[1:]:
        rendered.append(f" - {text}" if negative else f" + {text}")
    return "".join(rendered)


def render_sum(terms):
    """
    Render (coefficient, body) pairs in the given order.

    An empty body stands for the unit, so the coefficient is printed alone.
    """
    chunks = []
    for coeff, body in terms:
        magnitude = abs(coeff)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        chunks.append((coeff < 0, text))
    return join_signed(chunks)


class SparseElement:
    """Immutable sparse linear combination of hashable keys with Fraction coefficients"""
    __slots__ = ('_terms',)
    _key_type = tuple

    def __init__(self, terms=None):
        if isinstance(terms, Mapping):
            terms = terms.items()
        collected = collect_terms(terms or ())
        clean = {}
        for key, coeff in collected.items():
            key = self._coerce_key(key)
            if not self._keep_key(key):
                continue
            self._check_key(key)
            clean[key] = clean.get(key, 0) + coeff
        self._terms = {key: coeff for key, coeff in clean.items() if coeff}

    def _coerce_key(self, key):
        return key if type(key) is self._key_type else self._key_type(*key)

    def _keep_key(self, key):
        return True

    def _check_key(self, key):
        pass

    def _render_key(self, key):
        return str(key)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        return self._terms.get(self._coerce_key(key), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self.items()) + [(key, -coeff) for key, coeff in other.items()])

    def __neg__(self):
        return type(self)({key: -coeff for key, coeff in self.items()})

    def scale(self, factor):
        factor = to_rat(factor)
        return type(self)({key: factor * coeff for key, coeff in self.items()})

    def sorted_items(self):
        """Terms in display order: descending keys"""
        return sorted(self._terms.items(), reverse=True)

    def __str__(self):
        return render_sum((coeff, self._render_key(key)) for key, coeff in self.sorted_items())

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class AMono(NamedTuple):
    """Exponent pair of t^m = t1^m1 * t2^m2"""
    m1: int
    m2: int = 0

    def shift(self, other):
        return AMono(self.m1 + other[0], self.m2 + other[1])


class APoly(SparseElement):
    """Element of A as a map AMono -> Fraction"""
    __slots__ = ()
    _key_type = AMono

    def _check_key(self, key):
        if key.m2 < 0:
            raise ValueError(f"t2 exponent must be nonnegative in A, got {tuple(key)}")

    def _render_key(self, key):
        return monomial_text(key)

    @classmethod
    def monomial(cls, m1=0, m2=0, coeff=1):
        return cls({AMono(m1, m2): to_rat(coeff)})

    @classmethod
    def constant(cls, value):
        return cls.monomial(0, 0, value)

    def __mul__(self, other):
        if isinstance(other, APoly):
            return a_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


def a_mul(p, q):
    """Product in A"""
    return APoly(
        (AMono(a.m1 + b.m1, a.m2 + b.m2), c * d)
        for a, c in p.items()
        for b, d in q.items()
    )


def a_derive(p, i):
    """Partial derivative d/dt_i of p"""
    if i == 1:
        return APoly((AMono(key.m1 - 1, key.m2), key.m1 * coeff) for key, coeff in p.items() if key.m1)
    if i == 2:
        return APoly((AMono(key.m1, key.m2 - 1), key.m2 * coeff) for key, coeff in p.items() if key.m2)
    raise ValueError(f"axis must be 1 or 2, got {i}")


def a_eval_1_0(p):
    """Value p(1, 0); p lies in the maximal ideal of (1, 0) iff this is zero"""
    return sum((coeff for key, coeff in p.items() if key.m2 == 0), Fraction(0))
