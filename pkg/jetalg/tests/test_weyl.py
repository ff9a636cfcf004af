from fractions import Fraction

from django.test import SimpleTestCase

from jetalg.polynomials import APoly
from jetalg.weyl import DOp, d_apply, d_commutator, d_mul, falling_factorial


def op(a=0, b=0, c=0, d=0, coeff=1):
    return DOp.monomial(a, b, c, d, coeff)


class NormalOrderingTests(SimpleTestCase):
    def test_canonical_relation(self):
        self.assertEqual(d_mul(op(c=1), op(1)), op(1, c=1) + DOp.constant(1))
        self.assertEqual(str(d_mul(op(c=1), op(1))), "t1*d1 + 1")

    def test_inverse_of_t1(self):
        self.assertEqual(d_mul(op(c=1), op(-1)), op(-1, c=1) - op(-2))
        self.assertEqual(str(d_mul(op(c=1), op(-1))), "t1^-1*d1 - t1^-2")

    def test_second_derivative(self):
        self.assertEqual(str(d_mul(op(d=2), op(b=1))), "t2*d2^2 + 2*d2")

    def test_product_agrees_with_composition(self):
        pairs = [
            (op(c=1), op(-1)),
            (op(-2, 1, 2), op(3, 0, 1, 1, Fraction(1, 2))),
            (op(d=2) + op(1, c=1), op(b=1) - op(-1, 2)),
        ]
        for x, y in pairs:
            for n in range(-3, 4):
                for n2 in range(0, 5):
                    p = APoly.monomial(n, n2)
                    with self.subTest(x=str(x), y=str(y), n=(n, n2)):
                        self.assertEqual(d_apply(d_mul(x, y), p), d_apply(x, d_apply(y, p)))

    def test_negative_powers_only_on_t1(self):
        with self.assertRaises(ValueError):
            op(0, -1)
        with self.assertRaises(ValueError):
            op(0, 0, -1)


class CommutatorTests(SimpleTestCase):
    def test_disjoint_indices(self):
        self.assertEqual(d_commutator(op(1, c=1), op(b=1, d=1)), 0)

    def test_d2_t2(self):
        self.assertEqual(d_commutator(op(d=1), op(b=1)), DOp.constant(1))

    def test_euler_operator(self):
        for m1 in range(-3, 4):
            for m2 in range(0, 3):
                with self.subTest(m=(m1, m2)):
                    X = op(m1, m2, 0, 1)
                    self.assertEqual(d_commutator(op(1, c=1), X), X.scale(m1))


class ApplyTests(SimpleTestCase):
    def test_euler(self):
        self.assertEqual(d_apply(op(1, c=1), APoly.monomial(-2, 3)), APoly.monomial(-2, 3, -2))

    def test_derivative(self):
        self.assertEqual(d_apply(op(d=1), APoly.monomial(0, 3)), APoly.monomial(0, 2, 3))

    def test_power_rule(self):
        self.assertEqual(d_apply(op(b=1, c=1), APoly.monomial(-1)), APoly.monomial(-2, 1, -1))


class ConversionTests(SimpleTestCase):
    def test_multiplication_operator(self):
        p = APoly.monomial(2, 1) - APoly.constant(3)
        self.assertEqual(DOp.from_apoly(p).to_apoly(), p)
        self.assertTrue(DOp.from_apoly(p).is_multiplication())

    def test_derivative_is_no_polynomial(self):
        with self.assertRaises(ValueError):
            op(c=1).to_apoly()

    def test_order(self):
        self.assertEqual(op(1, 1, 2, 1).order(), 3)
        self.assertEqual(DOp().order(), -1)

    def test_falling_factorial(self):
        self.assertEqual(falling_factorial(5, 2), 20)
        self.assertEqual(falling_factorial(Fraction(1, 2), 2), Fraction(-1, 4))
        self.assertEqual(falling_factorial(3, 0), 1)
