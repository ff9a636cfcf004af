"""
The check catalog.

Each check turns a CheckConfig into a list of cases and evaluates one case at
a time into a (usually empty) list of failures. run_check drives the sweep,
optionally over a process pool, and always merges results in case order, so a
report does not depend on the number of jobs.
"""
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from fractions import Fraction
from math import ceil

from sympy import ImmutableMatrix, zeros

from .config import CheckConfig
from .exceptions import InvalidConfig, JetAlgError, UnknownCheck
from .jet_lie import GL2Module, LElem, LKey, l_bracket, l_to_smash, lift_gl2, smash_to_l, theta, theta_inv
from .jet_modules import Variant, WeightDMod, jet_axiom_cases, jet_axiom_failures
from .phi_rho import DLElem, cartan_images, dl_bracket, phi, rho
from .polynomials import AMono, APoly
from .reports import Failure, Report
from .smash import Cover, CoverKey, SmashElem, embed_a, embed_g, smash_bracket, xk
from .vector_fields import (
    GL2Elem, VField, g_apply, g_bracket, g_to_weyl, gl2_bracket, in_m10_delta, pi_project,
)
from .weyl import DMono, DOp, d_apply, d_commutator, d_mul

logger = logging.getLogger(__name__)

# Acceptance matrix swept by jet-axioms when no module option is given
JET_MODULE_WEIGHTS = [(Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1, 3)), (Fraction(2), Fraction(0))]
JET_MODULE_REPS = ['natural', 'adjoint']


def compare(key, expected, actual):
    if expected == actual:
        return []
    return [Failure(key, str(expected), str(actual))]


def _random_coeff(rng):
    value = 0
    while not value:
        value = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2, 3]))
    return value


def random_dop(rng, terms=3):
    """Operator with |a| <= 3 and b, c, d <= 3"""
    return DOp(
        (DMono(rng.randint(-3, 3), rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)), _random_coeff(rng))
        for _ in range(rng.randint(1, terms))
    )


def random_apoly(rng, terms=3):
    return APoly(
        (AMono(rng.randint(-3, 3), rng.randint(0, 3)), _random_coeff(rng))
        for _ in range(rng.randint(1, terms))
    )


def random_vfield(rng, terms=2):
    return VField(random_apoly(rng, terms), random_apoly(rng, terms))


def random_m10(rng, terms=2):
    """Element of the maximal ideal m_{1,0}: a combination of t^m - delta_{m2,0}"""
    pairs = []
    for _ in range(rng.randint(1, terms)):
        m, coeff = AMono(rng.randint(-3, 3), rng.randint(0, 2)), _random_coeff(rng)
        pairs.append((m, coeff))
        if m.m2 == 0:
            pairs.append((AMono(0, 0), -coeff))
    return APoly(pairs)


def random_lelem(rng, terms=3):
    return LElem(
        (LKey(rng.randint(1, 2), rng.randint(-3, 3), rng.randint(0, 3)), _random_coeff(rng))
        for _ in range(rng.randint(1, terms))
    )


def random_smash(rng, terms=3):
    cover = Cover(
        (CoverKey(AMono(rng.randint(-3, 3), rng.randint(0, 2)), AMono(rng.randint(-3, 3), rng.randint(0, 3)), rng.randint(1, 2)),
         _random_coeff(rng))
        for _ in range(rng.randint(1, terms))
    )
    return SmashElem(cover, random_apoly(rng, 2) if rng.random() < 0.5 else APoly())


def basis_element(k, m):
    return LElem.basis(k, m[0], m[1])


class Check:
    """Base class: a named invariant sweep"""
    check_id = None
    title = ''
    expect_pass = True

    def cases(self, cfg):
        raise NotImplementedError

    def case_key(self, case):
        return ' '.join(str(part) for part in case)

    def evaluate(self, case, cfg):
        raise NotImplementedError

    def config_echo(self, cfg):
        return cfg.to_dict()


class WeylAssociativity(Check):
    check_id = 'weyl-assoc'
    title = 'D is associative and acts faithfully on A'

    def cases(self, cfg):
        rng = random.Random(cfg.seed)
        return [
            (index, random_dop(rng), random_dop(rng), random_dop(rng), random_apoly(rng))
            for index in range(cfg.samples)
        ]

    def case_key(self, case):
        return f"sample {case[0]}"

    def evaluate(self, case, cfg):
        index, x, y, z, p = case
        key = self.case_key(case)
        failures = compare(f"{key} associativity", d_mul(d_mul(x, y), z), d_mul(x, d_mul(y, z)))
        failures += compare(f"{key} action", d_apply(d_mul(x, y), p), d_apply(x, d_apply(y, p)))
        jacobi = (
            d_commutator(x, d_commutator(y, z))
            + d_commutator(y, d_commutator(z, x))
            + d_commutator(z, d_commutator(x, y))
        )
        failures += compare(f"{key} jacobi", DOp(), jacobi)
        return failures


class VectorFieldJacobi(Check):
    check_id = 'g-jacobi'
    title = 'g is a Lie algebra of derivations and m_(1,0)Delta is closed'

    def cases(self, cfg):
        rng = random.Random(cfg.seed)
        cases = []
        for index in range(cfg.samples):
            cases.append((
                index, random_vfield(rng), random_vfield(rng), random_vfield(rng),
                random_apoly(rng), random_apoly(rng), theta(random_lelem(rng)), theta(random_lelem(rng)),
            ))
        return cases

    def case_key(self, case):
        return f"sample {case[0]}"

    def evaluate(self, case, cfg):
        index, X, Y, Z, p, q, U, W = case
        key = self.case_key(case)
        jacobi = g_bracket(X, g_bracket(Y, Z)) + g_bracket(Y, g_bracket(Z, X)) + g_bracket(Z, g_bracket(X, Y))
        failures = compare(f"{key} jacobi", VField(), jacobi)
        failures += compare(
            f"{key} operator",
            g_apply(X, g_apply(Y, p)) - g_apply(Y, g_apply(X, p)),
            g_apply(g_bracket(X, Y), p),
        )
        failures += compare(f"{key} leibniz", g_apply(X, p) * q + p * g_apply(X, q), g_apply(X, p * q))
        failures += compare(f"{key} weyl", d_commutator(g_to_weyl(X), g_to_weyl(Y)), g_to_weyl(g_bracket(X, Y)))
        failures += compare(f"{key} m10-closure", True, in_m10_delta(g_bracket(U, W)))
        return failures


def _lemma_31_probes():
    return {
        't1': embed_a(APoly.monomial(1, 0)),
        't2': embed_a(APoly.monomial(0, 1)),
        't1*d1': embed_g(VField.basis((1, 0), 1)),
        'd2': embed_g(VField.basis((0, 0), 2)),
    }


class Lemma31(Check):
    check_id = 'lemma-3.1'
    title = 'X_k(m) commutes with t1, t2, t1*d1 and d2'

    def cases(self, cfg):
        return [(k, m, probe) for k in (1, 2) for m in cfg.m_points() for probe in _lemma_31_probes()]

    def case_key(self, case):
        k, m, probe = case
        return f"[X{k}{m}, {probe}]"

    def evaluate(self, case, cfg):
        k, m, probe = case
        probe_elem = _lemma_31_probes()[probe]
        key = self.case_key(case)
        failures = compare(f"{key} smash", SmashElem(), smash_bracket(xk(k, m), probe_elem))
        failures += compare(f"{key} image", DLElem(), dl_bracket(phi(xk(k, m)), phi(probe_elem)))
        return failures


class Lemma32(Check):
    check_id = 'lemma-3.2'
    title = 'structure constants of L agree with both realizations'
    families = [(1, 1), (2, 2), (1, 2)]

    def cases(self, cfg):
        return [(k, l, m, s) for k, l in self.families for m in cfg.m_points() for s in cfg.s_points()]

    def case_key(self, case):
        k, l, m, s = case
        return f"[X{k}{m}, X{l}{s}]"

    def evaluate(self, case, cfg):
        k, l, m, s = case
        key = self.case_key(case)
        x, y = basis_element(k, m), basis_element(l, s)
        abstract = l_bracket(x, y)
        realized = smash_bracket(xk(k, m), xk(l, s))
        failures = compare(f"{key} smash", l_to_smash(abstract), realized)
        failures += compare(f"{key} read-back", abstract, smash_to_l(realized))
        failures += compare(f"{key} theta", abstract, theta_inv(g_bracket(theta(x), theta(y))))
        return failures


class Lemma33(Check):
    check_id = 'lemma-3.3'
    title = 'theta: L -> m_(1,0)Delta is a Lie isomorphism'

    def cases(self, cfg):
        cases = [('bracket', k, m, l, s) for k in (1, 2) for m in cfg.m_points() for l in (1, 2) for s in cfg.s_points()]
        cases += [('inverse', k, m) for k in (1, 2) for m in cfg.m_points()]
        cases += [('section', k, m, r) for k in (1, 2) for m in cfg.m_points() for r in cfg.s_points()]
        return cases

    def case_key(self, case):
        if case[0] == 'bracket':
            _, k, m, l, s = case
            return f"theta[X{k}{m}, X{l}{s}]"
        if case[0] == 'inverse':
            _, k, m = case
            return f"theta_inv theta X{k}{m}"
        _, k, m, r = case
        return f"theta theta_inv (t^{m} - delta) t^{r} d{k}"

    def evaluate(self, case, cfg):
        key = self.case_key(case)
        if case[0] == 'bracket':
            _, k, m, l, s = case
            x, y = basis_element(k, m), basis_element(l, s)
            return compare(key, g_bracket(theta(x), theta(y)), theta(l_bracket(x, y)))
        if case[0] == 'inverse':
            _, k, m = case
            x = basis_element(k, m)
            return compare(f"{key} in m10", True, in_m10_delta(theta(x))) + compare(key, x, theta_inv(theta(x)))
        # (t^m - delta_{m2,0}) lies in m_{1,0}, so any multiple of it by t^r d_k lies in m_{1,0}Delta
        _, k, m, r = case
        u = APoly.monomial(*m) - (APoly.constant(1) if m[1] == 0 else APoly())
        X = VField.basis(r, k).lmul(u)
        return compare(key, X, theta(theta_inv(X)))


class Lemma34(Check):
    check_id = 'lemma-3.4'
    title = 'pi is a Lie homomorphism onto gl2 with kernel m_(1,0)^2 Delta'

    def cases(self, cfg):
        rng = random.Random(cfg.seed)
        cases = [('generator', 1, 1), ('generator', 1, 2), ('generator', 2, 1), ('generator', 2, 2)]
        cases += [('bracket', index, theta(random_lelem(rng)), theta(random_lelem(rng))) for index in range(cfg.samples)]
        for index in range(cfg.samples):
            u, v = random_m10(rng), random_m10(rng)
            r = (rng.randint(-3, 3), rng.randint(0, 3))
            cases.append(('kernel', index, VField.basis(r, rng.randint(1, 2)).lmul(u * v)))
        return cases

    def case_key(self, case):
        if case[0] == 'generator':
            return f"pi generator E{case[1]}{case[2]}"
        return f"{case[0]} sample {case[1]}"

    def evaluate(self, case, cfg):
        key = self.case_key(case)
        if case[0] == 'generator':
            # (t1 - 1) for the first row index, t2 for the second
            _, i, j = case
            coefficient = APoly.monomial(1) - APoly.constant(1) if i == 1 else APoly.monomial(0, 1)
            X = VField(f1=coefficient) if j == 1 else VField(f2=coefficient)
            return compare(key, GL2Elem.unit(i, j), pi_project(X))
        if case[0] == 'bracket':
            _, index, X, Y = case
            return compare(key, gl2_bracket(pi_project(X), pi_project(Y)), pi_project(g_bracket(X, Y)))
        _, index, K = case
        return compare(key, GL2Elem(), pi_project(K))


class GL2Lift(Check):
    check_id = 'gl2-lift'
    title = 'every gl2-module lifts to an L-module'

    def modules(self, cfg):
        names = [cfg.rep] if cfg.rep else ['natural', 'adjoint', 'sym2']
        return [GL2Module.named(name) for name in names]

    def cases(self, cfg):
        cases = []
        for V in self.modules(cfg):
            cases.append(('relations', V))
            cases += [('factor', V, k, m) for k in (1, 2) for m in cfg.m_points()]
            cases += [
                ('bracket', V, k, m, l, s)
                for k in (1, 2) for m in cfg.m_points() for l in (1, 2) for s in cfg.s_points()
            ]
        return cases

    def case_key(self, case):
        kind, V = case[0], case[1]
        if kind == 'relations':
            return f"{V.name} gl2 relations"
        if kind == 'factor':
            _, _, k, m = case
            return f"{V.name} X{k}{m} through pi theta"
        _, _, k, m, l, s = case
        return f"{V.name} [X{k}{m}, X{l}{s}]"

    def evaluate(self, case, cfg):
        key = self.case_key(case)
        V = case[1]
        if case[0] == 'relations':
            return [Failure(f"{key} [E{a[0]}{a[1]}, E{b[0]}{b[1]}]", 'gl2 relation', 'violated') for a, b in V.relation_failures()]
        if case[0] == 'factor':
            _, _, k, m = case
            x = basis_element(k, m)
            image = pi_project(theta(x))
            expected = zeros(V.dim, V.dim)
            for i in (1, 2):
                for j in (1, 2):
                    expected += image.matrix[i - 1, j - 1] * V.rep(i, j)
            return compare(key, ImmutableMatrix(expected), lift_gl2(x, V))
        _, _, k, m, l, s = case
        x, y = basis_element(k, m), basis_element(l, s)
        lx, ly = lift_gl2(x, V), lift_gl2(y, V)
        return compare(key, lx * ly - ly * lx, lift_gl2(l_bracket(x, y), V))


class PhiHomomorphism(Check):
    check_id = 'thm-2.3-hom'
    title = 'phi carries smash brackets to brackets in D (x) U(L)'

    def cases(self, cfg):
        generators = [(k, m) for k in (1, 2) for m in cfg.m_points()]
        others = [(l, s) for l in (1, 2) for s in cfg.s_points()]
        cases = [('pair', k, m, l, s) for k, m in generators for l, s in others]
        cases += [('mixed', k, m, s) for k, m in generators for s in cfg.s_points()]
        cases += [('multiplication', k, m) for k, m in generators]
        cases += [('weight', h, k, m) for h in (1, 2) for k, m in generators]
        return cases

    def case_key(self, case):
        if case[0] == 'pair':
            _, k, m, l, s = case
            return f"phi[1.t^({m}+d{k}1 e1)d{k}, 1.t^({s}+d{l}1 e1)d{l}]"
        if case[0] == 'mixed':
            _, k, m, s = case
            return f"phi[1.t^({m}+d{k}1 e1)d{k}, t^{s}.1]"
        if case[0] == 'multiplication':
            _, k, m = case
            return f"phi(1.t^({m}+d{k}1 e1)d{k}) coefficients"
        _, h, k, m = case
        return f"[h{h}, phi(1.t^({m}+d{k}1 e1)d{k})]"

    def evaluate(self, case, cfg):
        key = self.case_key(case)
        if case[0] == 'pair':
            _, k, m, l, s = case
            x, y = embed_g(VField.generator(k, m)), embed_g(VField.generator(l, s))
            return compare(key, dl_bracket(phi(x), phi(y)), phi(smash_bracket(x, y)))
        if case[0] == 'mixed':
            _, k, m, s = case
            x, y = embed_g(VField.generator(k, m)), embed_a(APoly.monomial(*s))
            return compare(key, dl_bracket(phi(x), phi(y)), phi(smash_bracket(x, y)))
        if case[0] == 'multiplication':
            _, k, m = case
            image = phi(embed_g(VField.generator(k, m)))
            bad = [f"({op}) (x) {lkey}" for lkey, op in sorted(image.part1.items()) if not op.is_multiplication()]
            return compare(key, '', ', '.join(bad))
        # h1 and h2 act on phi(1.t^alpha d_k) by alpha1 - delta_{k1} and alpha2 - delta_{k2}
        _, h, k, m = case
        image = phi(embed_g(VField.generator(k, m)))
        alpha = (m[0] + (k == 1), m[1])
        weight = alpha[h - 1] - (k == h)
        return compare(key, image.scale(weight), dl_bracket(cartan_images()[h - 1], image))


def _dl_generators(cfg):
    """(label, DLElem) pairs: t_k (x) 1, d_k (x) 1, t^m (x) 1 and 1 (x) X_k(m)"""
    generators = [
        ('t1 (x) 1', DLElem(DOp.monomial(1))),
        ('t2 (x) 1', DLElem(DOp.monomial(0, 1))),
        ('d1 (x) 1', DLElem(DOp.monomial(0, 0, 1))),
        ('d2 (x) 1', DLElem(DOp.monomial(0, 0, 0, 1))),
    ]
    generators += [(f"t^{m} (x) 1", DLElem(DOp.monomial(*m))) for m in cfg.m_points()]
    generators += [
        (f"1 (x) X{k}{m}", DLElem(part1={LKey(k, *m): DOp.constant(1)}))
        for k in (1, 2) for m in cfg.m_points() if m != (0, 0)
    ]
    return generators


class PhiRhoRoundTrip(Check):
    check_id = 'lemma-4.2-roundtrip'
    title = 'rho is the inverse of phi'

    def cases(self, cfg):
        rng = random.Random(cfg.seed)
        generators = [(k, m) for k in (1, 2) for m in cfg.m_points()]
        cases = [('rho-phi', k, m) for k, m in generators]
        cases += [('rho-phi-a', m) for m in cfg.m_points()]
        cases += [('rho-phi-x', k, m) for k, m in generators]
        cases += [('random', index, random_smash(rng)) for index in range(cfg.samples)]
        cases += [('phi-rho', label) for label, _ in _dl_generators(cfg)]
        cases += [('relation', k, l) for k in (1, 2) for l in (1, 2)]
        cases += [('relation-x', k, m, l) for k, m in generators if m != (0, 0) for l in (1, 2)]
        return cases

    def case_key(self, case):
        kind = case[0]
        if kind == 'rho-phi':
            return f"rho phi 1.t^({case[2]}+d{case[1]}1 e1)d{case[1]}"
        if kind == 'rho-phi-a':
            return f"rho phi t^{case[1]}.1"
        if kind == 'rho-phi-x':
            return f"rho phi X{case[1]}{case[2]}"
        if kind == 'random':
            return f"rho phi sample {case[1]}"
        if kind == 'phi-rho':
            return f"phi rho {case[1]}"
        if kind == 'relation':
            return f"[rho(d{case[1]} (x) 1), rho(t{case[2]} (x) 1)]"
        return f"[rho(1 (x) X{case[1]}{case[2]}), rho(t{case[3]} (x) 1)]"

    def evaluate(self, case, cfg):
        key = self.case_key(case)
        kind = case[0]
        if kind == 'rho-phi':
            x = embed_g(VField.generator(case[1], case[2]))
            return compare(key, x, rho(phi(x)))
        if kind == 'rho-phi-a':
            x = embed_a(APoly.monomial(*case[1]))
            return compare(key, x, rho(phi(x)))
        if kind == 'rho-phi-x':
            x = xk(case[1], case[2])
            return compare(key, x, rho(phi(x)))
        if kind == 'random':
            x = case[2]
            return compare(key, x, rho(phi(x)))
        if kind == 'phi-rho':
            y = dict(_dl_generators(cfg))[case[1]]
            return compare(key, y, phi(rho(y)))
        t = {1: DLElem(DOp.monomial(1)), 2: DLElem(DOp.monomial(0, 1))}
        if kind == 'relation':
            _, k, l = case
            d = DLElem(DOp.monomial(0, 0, int(k == 1), int(k == 2)))
            expected = embed_a(APoly.constant(1)) if k == l else SmashElem()
            return compare(key, expected, smash_bracket(rho(d), rho(t[l])))
        _, k, m, l = case
        x = DLElem(part1={LKey(k, *m): DOp.constant(1)})
        return compare(key, SmashElem(), smash_bracket(rho(x), rho(t[l])))


class JetAxioms(Check):
    check_id = 'jet-axioms'
    title = 'M(P, V) satisfies the jet-module axioms'

    def modules(self, cfg):
        """(P, V) pairs: the configured one, or the acceptance matrix when nothing is configured"""
        if any(value is not None for value in (cfg.a1, cfg.a2, cfg.variant, cfg.rep)):
            P = WeightDMod(
                cfg.a1 if cfg.a1 is not None else Fraction(1, 2),
                cfg.a2 if cfg.a2 is not None else Fraction(0),
                cfg.variant or Variant.POLY,
            )
            return [(P, GL2Module.named(cfg.rep or 'natural'))]
        pairs = []
        for a1, a2 in JET_MODULE_WEIGHTS:
            for variant in Variant:
                if variant != Variant.LAURENT and a2.denominator != 1:
                    continue
                for rep in JET_MODULE_REPS:
                    pairs.append((WeightDMod(a1, a2, variant), GL2Module.named(rep)))
        return pairs

    def cases(self, cfg):
        return [
            (P, V, case)
            for P, V in self.modules(cfg)
            for case in jet_axiom_cases(P, V, cfg.m_points(), cfg.s_points())
        ]

    def case_key(self, case):
        P, V, jet_case = case
        return f"{P} {V.name} {jet_case.key()}"

    def evaluate(self, case, cfg):
        P, V, jet_case = case
        return jet_axiom_failures(jet_case, P, V, self.case_key(case))

    def config_echo(self, cfg):
        echo = cfg.to_dict()
        echo['modules'] = [f"{P} {V.name}" for P, V in self.modules(cfg)]
        return echo


class NegativeControl(JetAxioms):
    """Jet axioms against a gl2-module whose E12 is doubled; a sound checker reports failures"""
    check_id = 'negative-control'
    title = 'a corrupted gl2-module must break the jet-module axioms'
    expect_pass = False

    def modules(self, cfg):
        P = WeightDMod(
            cfg.a1 if cfg.a1 is not None else Fraction(1, 2),
            cfg.a2 if cfg.a2 is not None else Fraction(0),
            cfg.variant or Variant.POLY,
        )
        return [(P, GL2Module.named(cfg.rep or 'natural').corrupted())]


CATALOG = {
    check.check_id: check
    for check in (
        WeylAssociativity(),
        VectorFieldJacobi(),
        Lemma31(),
        Lemma32(),
        Lemma33(),
        Lemma34(),
        GL2Lift(),
        PhiHomomorphism(),
        PhiRhoRoundTrip(),
        JetAxioms(),
        NegativeControl(),
    )
}


def get_check(check_id):
    try:
        return CATALOG[check_id]
    except KeyError:
        raise UnknownCheck(f"unknown check '{check_id}'; available: {', '.join(CATALOG)}")


def _evaluate_chunk(check, cfg, chunk):
    failures = []
    for case in chunk:
        try:
            failures.extend(check.evaluate(case, cfg))
        except JetAlgError as e:
            failures.append(Failure(check.case_key(case), 'no error', f"{type(e).__name__}: {e}"))
    return failures


def _evaluate_slice(check_id, cfg, start, stop):
    """Worker side: cases are rebuilt from cfg, so only the config crosses the process boundary"""
    check = get_check(check_id)
    return _evaluate_chunk(check, cfg, check.cases(cfg)[start:stop])


def sweep(check, cases, cfg):
    """Evaluate every case; failures come back in case order whatever cfg.jobs is"""
    if cfg.jobs == 1 or len(cases) < 2:
        return _evaluate_chunk(check, cfg, cases)
    size = ceil(len(cases) / (cfg.jobs * 2))
    bounds = [(start, min(start + size, len(cases))) for start in range(0, len(cases), size)]
    with ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
        fut_to_idx = {
            executor.submit(_evaluate_slice, check.check_id, cfg, start, stop): idx
            for idx, (start, stop) in enumerate(bounds)
        }
        results = {}
        for fut in as_completed(fut_to_idx):
            results[fut_to_idx[fut]] = fut.result()
    return [failure for idx in range(len(bounds)) for failure in results[idx]]


def run_check(cfg):
    check = get_check(cfg.check_id)
    cfg.validate()
    started = time.monotonic()
    try:
        cases = check.cases(cfg)
    except ValueError as e:
        raise InvalidConfig(str(e))
    logger.info(f"{check.check_id}: sweeping {len(cases)} cases with {cfg.jobs} job(s)")
    failures = sweep(check, cases, cfg)
    elapsed_ms = int((time.monotonic() - started) * 1000)
    if failures:
        logger.warning(f"{check.check_id}: {len(failures)} failure(s) in {len(cases)} cases")
    logger.info(f"{check.check_id}: done in {elapsed_ms} ms")
    return Report(check.check_id, check.config_echo(cfg), len(cases), failures, elapsed_ms)


def run_catalog(check_ids=None, **overrides):
    """Run the given checks, or the whole catalog, each with settings defaults plus overrides"""
    reports = []
    for check_id in check_ids or CATALOG:
        get_check(check_id)
        reports.append(run_check(CheckConfig.from_settings(check_id, **overrides)))
    return reports
