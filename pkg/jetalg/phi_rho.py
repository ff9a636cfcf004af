"""
D (x) U(L) cut at PBW degree one in L, and the maps phi and rho between it
and the smash slice.
"""
import logging
from math import comb
from types import MappingProxyType

from .exceptions import DegreeTooHigh, TruncationEscape
from .jet_lie import LElem, LKey, l_bracket
from .polynomials import AMono, APoly
from .smash import Cover, CoverKey, SmashElem, embed_g, xk
from .vector_fields import VField
from .weyl import DMono, DOp, d_commutator, d_mul

logger = logging.getLogger(__name__)


class DLElem:
    """part0 (x) 1 + sum over LKeys of part1[key] (x) X_k(m)"""
    __slots__ = ('part0', '_part1')

    def __init__(self, part0=None, part1=None):
        self.part0 = part0 if part0 is not None else DOp()
        clean = {}
        for key, op in (part1 or {}).items():
            key = key if isinstance(key, LKey) else LKey(*key)
            if (key.m1, key.m2) == (0, 0):
                continue
            clean[key] = clean[key] + op if key in clean else op
        self._part1 = {key: op for key, op in clean.items() if op}

    @property
    def part1(self):
        return MappingProxyType(self._part1)

    @classmethod
    def from_pairs(cls, part0, pairs):
        """Build from (LKey, DOp) pairs that may repeat keys"""
        part1 = {}
        for key, op in pairs:
            part1[key] = part1[key] + op if key in part1 else op
        return cls(part0, part1)

    def __eq__(self, other):
        if not isinstance(other, DLElem):
            return NotImplemented
        return self.part0 == other.part0 and self._part1 == other._part1

    def __hash__(self):
        return hash((self.part0, frozenset(self._part1.items())))

    def __bool__(self):
        return bool(self.part0) or bool(self._part1)

    def __add__(self, other):
        return DLElem.from_pairs(self.part0 + other.part0, list(self._part1.items()) + list(other._part1.items()))

    def __neg__(self):
        return DLElem(-self.part0, {key: -op for key, op in self._part1.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return DLElem(self.part0.scale(factor), {key: op.scale(factor) for key, op in self._part1.items()})

    def __str__(self):
        parts = []
        if self.part0:
            parts.append(f"({self.part0}) (x) 1")
        for key in sorted(self._part1, reverse=True):
            parts.append(f"({self._part1[key]}) (x) {key}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"DLElem({self})"


def dl_bracket(x, y):
    """
    [p (x) 1, q (x) 1] = [p, q] (x) 1
    [p (x) 1, q (x) Y] = [p, q] (x) Y
    [p (x) X, q (x) Y] = pq (x) [X, Y]   when pq = qp
    """
    part0 = d_commutator(x.part0, y.part0)
    pairs = []
    for key, q in y.part1.items():
        pairs.append((key, d_commutator(x.part0, q)))
    for key, p in x.part1.items():
        pairs.append((key, d_commutator(p, y.part0)))
    for kx, p in x.part1.items():
        for ky, q in y.part1.items():
            pq = d_mul(p, q)
            if pq != d_mul(q, p):
                logger.debug(f"truncation escape on ({p}) (x) {kx} against ({q}) (x) {ky}")
                raise TruncationEscape(f"({p}) and ({q}) do not commute; [{p} (x) {kx}, {q} (x) {ky}] leaves PBW degree one")
            for key, coeff in l_bracket(LElem({kx: 1}), LElem({ky: 1})).items():
                pairs.append((key, pq.scale(coeff)))
    return DLElem.from_pairs(part0, pairs)


def phi(x):
    """
    phi(1 . t^{m + d e1} d_k) = t1^{m1 + d} t2^{m2} d_k (x) 1
                                 + sum_i C(m2, i) t1^{m1} t2^i (x) X_k(m - i e2)
    phi(t^m . 1) = t^m (x) 1, extended A-linearly on the left.
    """
    part0 = [(DMono(mono.m1, mono.m2), coeff) for mono, coeff in x.apart.items()]
    pairs = []
    for key, coeff in x.cover.items():
        u, alpha, k = key
        shift = int(k == 1)
        m1, m2 = alpha.m1 - shift, alpha.m2
        part0.append((DMono(alpha.m1 + u.m1, alpha.m2 + u.m2, shift, 1 - shift), coeff))
        for i in range(m2 + 1):
            pairs.append((
                LKey(k, m1, m2 - i),
                DOp.monomial(m1 + u.m1, i + u.m2, coeff=coeff * comb(m2, i)),
            ))
    return DLElem.from_pairs(DOp(part0), pairs)


def rho(x):
    """
    Inverse of phi on its image:
    t^n (x) 1 -> t^n . 1,  t^n d1 (x) 1 -> t^{n - e1} . t1*d1,
    t^n d2 (x) 1 -> t^n . d2,  q (x) X_k(m) -> q xk(k, m).
    """
    cover = []
    apart = []
    for key, coeff in x.part0.items():
        n = AMono(key.a, key.b)
        if (key.c, key.d) == (0, 0):
            apart.append((n, coeff))
        elif (key.c, key.d) == (1, 0):
            cover.append((CoverKey(AMono(key.a - 1, key.b), AMono(1, 0), 1), coeff))
        elif (key.c, key.d) == (0, 1):
            cover.append((CoverKey(n, AMono(0, 0), 2), coeff))
        else:
            raise DegreeTooHigh(f"{x.part0} has a term of derivative order {key.c + key.d}")
    result = SmashElem(Cover(cover), APoly(apart))
    for key, q in sorted(x.part1.items()):
        if not q.is_multiplication():
            raise DegreeTooHigh(f"coefficient {q} of {key} is not a multiplication operator")
        result = result + xk(key.k, key.m).lmul(q.to_apoly())
    return result


def cartan_images():
    """h1 = phi(1 . t1*d1) and h2 = phi(1 . t2*d2)"""
    h1 = phi(embed_g(VField.basis((1, 0), 1)))
    h2 = phi(embed_g(VField.basis((0, 1), 2)))
    return h1, h2
