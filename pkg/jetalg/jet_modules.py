"""
Weight D-modules P = t^a C[t1^{±1}, t2^{±1}] and their t2-polynomial
submodule and quotient, and the jet modules M(P, V) = P (x) V built from
them and a gl2-module V.

Basis vectors are t^{a+n} (x) v_j, keyed by (n1, n2, j). Every action maps a
basis vector to finitely many basis vectors, so all checks below are exact.
"""
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from django.db import models

from .exceptions import JetAlgError
from .polynomials import APoly, SparseElement, to_rat
from .reports import Failure, Report
from .vector_fields import VField, g_apply, g_bracket
from .weyl import DMono, DOp, d_mul, falling_factorial

logger = logging.getLogger(__name__)


class Variant(models.TextChoices):
    POLY = 'poly', 't^a C[t1^±1, t2]'
    LAURENT = 'laurent', 't^a C[t1^±1, t2^±1]'
    QUOTIENT = 'quotient', 't^a C[t1^±1, t2^±1] / t^a C[t1^±1, t2]'


class PKey(NamedTuple):
    n1: int
    n2: int


class PElem(SparseElement):
    """sum c_n t^{a+n}"""
    __slots__ = ()
    _key_type = PKey

    def _render_key(self, key):
        return f"t^(a+({key.n1},{key.n2}))"


class JetKey(NamedTuple):
    n1: int
    n2: int
    j: int

    @property
    def n(self):
        return PKey(self.n1, self.n2)


class JetElem(SparseElement):
    """sum c t^{a+n} (x) v_j"""
    __slots__ = ()
    _key_type = JetKey

    def _render_key(self, key):
        return f"t^(a+({key.n1},{key.n2}))(x)v{key.j}"


@dataclass(frozen=True)
class WeightDMod:
    a1: Fraction
    a2: Fraction
    variant: str = Variant.LAURENT

    def __post_init__(self):
        variant = Variant(self.variant)
        a1, a2 = to_rat(self.a1), to_rat(self.a2)
        if variant != Variant.LAURENT:
            if a2.denominator != 1:
                raise ValueError(f"the {variant.value} module needs an integral a2, got {a2}")
            # t^a C[...] only depends on a2 mod Z
            a2 = Fraction(0)
        object.__setattr__(self, 'a1', a1)
        object.__setattr__(self, 'a2', a2)
        object.__setattr__(self, 'variant', variant)

    def admits(self, n2):
        if self.variant == Variant.POLY:
            return n2 >= 0
        if self.variant == Variant.QUOTIENT:
            return n2 < 0
        return True

    def basis(self, n1, n2, coeff=1):
        if not self.admits(n2):
            raise ValueError(f"t^(a+({n1},{n2})) is not a basis vector of the {self.variant.value} module")
        return PElem({PKey(n1, n2): to_rat(coeff)})

    def window(self):
        """
        Two basis exponents n used to probe the module in the axiom sweep.
        When a1 is an integer the second one sits at n1 = -a1, where d1 acts as zero.
        """
        if self.variant == Variant.POLY:
            base, n2 = [PKey(0, 0)], 1
        elif self.variant == Variant.QUOTIENT:
            base, n2 = [PKey(0, -1)], -2
        else:
            base, n2 = [PKey(0, 0)], -1
        if self.a1.denominator == 1 and self.a1:
            n1 = -int(self.a1)
        else:
            n1 = -1 if self.variant == Variant.LAURENT else 1
        return base + [PKey(n1, n2)]

    def __str__(self):
        return f"{self.variant.value}(a1={self.a1}, a2={self.a2})"


def _p_pairs(x, n, coeff, mod):
    for key, value in x.items():
        factor = falling_factorial(mod.a1 + n.n1, key.c) * falling_factorial(mod.a2 + n.n2, key.d)
        if not factor:
            continue
        target = PKey(n.n1 + key.a - key.c, n.n2 + key.b - key.d)
        if mod.admits(target.n2):
            yield target, coeff * value * factor


def p_act(x, v, mod):
    """
    t1^p t2^q d1^c d2^d . t^{a+n}
        = (a1+n1)_c (a2+n2)_d t^{a+n+(p-c, q-d)}
    with falling factorials, then projected onto the variant.
    """
    return PElem(pair for n, coeff in v.items() for pair in _p_pairs(x, n, coeff, mod))


def _vf_pairs(k, m, w, P, V, scale=1):
    m1, m2 = m
    shift = int(k == 1)
    op = DOp.monomial(m1 + shift, m2, shift, 1 - shift)
    for key, coeff in w.items():
        coeff = coeff * scale
        for n, value in _p_pairs(op, key.n, coeff, P):
            yield JetKey(n.n1, n.n2, key.j), value
        if m1 and P.admits(key.n2 + m2):
            for row, entry in V.column(1, k, key.j):
                yield JetKey(key.n1 + m1, key.n2 + m2, row), m1 * coeff * entry
        if m2 and P.admits(key.n2 + m2 - 1):
            for row, entry in V.column(2, k, key.j):
                yield JetKey(key.n1 + m1, key.n2 + m2 - 1, row), m2 * coeff * entry


def _a_pairs(m, w, P, scale=1):
    for key, coeff in w.items():
        if P.admits(key.n2 + m[1]):
            yield JetKey(key.n1 + m[0], key.n2 + m[1], key.j), coeff * scale


def m_act_vf(k, m, w, P, V):
    """
    t^{m + d e1} d_k . (g (x) v) = (t^{m + d e1} d_k g) (x) v
                                  + m1 t^m g (x) E_1k v
                                  + m2 t^{m - e2} g (x) E_2k v
    """
    if m[1] < 0:
        raise ValueError(f"m2 must be nonnegative, got {tuple(m)}")
    return JetElem(_vf_pairs(k, m, w, P, V))


def m_act_a(m, w, P):
    """t^m . (g (x) v) = (t^m g) (x) v"""
    if m[1] < 0:
        raise ValueError(f"m2 must be nonnegative, got {tuple(m)}")
    return JetElem(_a_pairs(m, w, P))


def m_act_field(X, w, P, V):
    """Action of an arbitrary vector field, through its generator decomposition"""
    pairs = []
    for (alpha, k), coeff in X.terms():
        m = (alpha.m1 - int(k == 1), alpha.m2)
        pairs.extend(_vf_pairs(k, m, w, P, V, coeff))
    return JetElem(pairs)


def m_act_poly(p, w, P):
    pairs = []
    for mono, coeff in p.items():
        pairs.extend(_a_pairs(mono, w, P, coeff))
    return JetElem(pairs)


def jet_weight(key, P, V):
    """
    Eigenvalues of t1*d1 and t2*d2 on t^{a+n} (x) v_j, or None when rho(E22)
    is not diagonal and v_j is no weight vector.
    """
    if not V.is_diagonal(2, 2):
        return None
    return P.a1 + key.n1, P.a2 + key.n2 + to_rat(V.rep(2, 2)[key.j, key.j])


# Weyl words used to probe the D-module structure of P
WEYL_PROBES = {
    't1': DMono(1),
    't1^-1': DMono(-1),
    't2': DMono(0, 1),
    'd1': DMono(0, 0, 1),
    'd2': DMono(0, 0, 0, 1),
    't1*d1': DMono(1, 0, 1),
    't2*d2': DMono(0, 1, 0, 1),
}


class JetCase(NamedTuple):
    axiom: str
    params: tuple
    w: JetKey

    def key(self):
        n1, n2, j = self.w
        return f"{self.axiom} {' '.join(str(p) for p in self.params)} w=t^(a+({n1},{n2}))(x)v{j}"


def jet_axiom_cases(P, V, m_points, s_points):
    """
    Sweep cases for M(P, V): each axiom paired with a probe vector
    t^{a+n} (x) v_j, n in P.window().
    """
    m_points = [tuple(m) for m in m_points]
    s_points = [tuple(s) for s in s_points]
    probes = [JetKey(n.n1, n.n2, j) for n in P.window() for j in range(V.dim)]
    generators = [(k, m) for k in (1, 2) for m in m_points]
    others = [(l, s) for l in (1, 2) for s in s_points]
    cases = []
    for w in probes:
        cases.extend(JetCase('assoc', (s, r), w) for s in s_points for r in m_points)
        cases.extend(JetCase('compat', (k, m, s), w) for k, m in generators for s in s_points)
        cases.extend(JetCase('bracket', (k, m, l, s), w) for k, m in generators for l, s in others)
        cases.append(JetCase('weight', (1,), w))
        if V.is_diagonal(2, 2):
            cases.append(JetCase('weight', (2,), w))
        cases.extend(JetCase('dmod', (x, y), w) for x in WEYL_PROBES for y in WEYL_PROBES)
        if P.variant == Variant.QUOTIENT:
            cases.extend(JetCase('projection', (k, m), w) for k, m in generators)
    return cases


def evaluate_jet_axiom_case(case, P, V):
    """(expected, actual) as elements of M(P, V), equal when the axiom holds"""
    w = JetElem({case.w: 1})
    if case.axiom == 'assoc':
        s, r = case.params
        return m_act_a((s[0] + r[0], s[1] + r[1]), w, P), m_act_a(s, m_act_a(r, w, P), P)
    if case.axiom == 'compat':
        # X(f w) = f (X w) + X(f) w
        k, m, s = case.params
        X = VField.generator(k, m)
        expected = m_act_a(s, m_act_vf(k, m, w, P, V), P) + m_act_poly(g_apply(X, APoly.monomial(*s)), w, P)
        return expected, m_act_vf(k, m, m_act_a(s, w, P), P, V)
    if case.axiom == 'bracket':
        k, m, l, s = case.params
        expected = m_act_field(g_bracket(VField.generator(k, m), VField.generator(l, s)), w, P, V)
        actual = m_act_vf(k, m, m_act_vf(l, s, w, P, V), P, V) - m_act_vf(l, s, m_act_vf(k, m, w, P, V), P, V)
        return expected, actual
    if case.axiom == 'weight':
        (k,) = case.params
        weights = jet_weight(case.w, P, V)
        eigenvalue = weights[k - 1] if weights else P.a1 + case.w.n1
        return w.scale(eigenvalue), m_act_vf(k, (0, k - 1), w, P, V)
    if case.axiom == 'dmod':
        x, y = (DOp({WEYL_PROBES[name]: 1}) for name in case.params)
        v = PElem({case.w.n: 1})
        return _as_jet(p_act(d_mul(x, y), v, P), case.w.j), _as_jet(p_act(x, p_act(y, v, P), P), case.w.j)
    if case.axiom == 'projection':
        k, m = case.params
        lifted = m_act_vf(k, m, w, WeightDMod(P.a1, P.a2, Variant.LAURENT), V)
        projected = JetElem((key, coeff) for key, coeff in lifted.items() if P.admits(key.n2))
        return projected, m_act_vf(k, m, w, P, V)
    raise ValueError(f"unknown axiom '{case.axiom}'")


def _as_jet(v, j):
    return JetElem((JetKey(n.n1, n.n2, j), coeff) for n, coeff in v.items())


def jet_axiom_failures(case, P, V, key=None):
    """Failures of one axiom case, recorded under key (case.key() by default)"""
    key = key or case.key()
    try:
        expected, actual = evaluate_jet_axiom_case(case, P, V)
    except JetAlgError as e:
        return [Failure(key, 'no error', f"{type(e).__name__}: {e}")]
    if expected == actual:
        return []
    return [Failure(key, str(expected), str(actual))]


def check_jet_axioms(P, V, m_points, s_points):
    """Run every axiom case for M(P, V) and collect the ones that fail"""
    started = time.monotonic()
    cases = jet_axiom_cases(P, V, m_points, s_points)
    failures = [failure for case in cases for failure in jet_axiom_failures(case, P, V)]
    if failures:
        logger.warning(f"M({P}, {V.name}): {len(failures)} of {len(cases)} cases failed")
    config = {'check': 'jet-axioms', 'modules': [f"{P} {V.name}"]}
    return Report('jet-axioms', config, len(cases), failures, int((time.monotonic() - started) * 1000))
