import random

from django.test import SimpleTestCase

from jetalg.checks import random_smash
from jetalg.exceptions import DegreeTooHigh, TruncationEscape
from jetalg.jet_lie import LKey
from jetalg.phi_rho import DLElem, cartan_images, dl_bracket, phi, rho
from jetalg.polynomials import APoly
from jetalg.smash import dot, embed_a, embed_g, xk
from jetalg.vector_fields import VField
from jetalg.weyl import DOp


def one_x(k, m1, m2, op=None):
    return DLElem(part1={LKey(k, m1, m2): op if op is not None else DOp.constant(1)})


class DLElemTests(SimpleTestCase):
    def test_rendering(self):
        x = DLElem(DOp.monomial(0, 1, 0, 1)) + one_x(2, 0, 1)
        self.assertEqual(str(x), "(t2*d2) (x) 1 + (1) (x) X2(0,1)")
        self.assertEqual(str(DLElem()), "0")

    def test_origin_key_is_dropped(self):
        self.assertFalse(one_x(1, 0, 0))

    def test_cancellation(self):
        self.assertFalse(one_x(1, 2, 1) - one_x(1, 2, 1))


class BracketTests(SimpleTestCase):
    def test_euler_and_generator_commute(self):
        self.assertEqual(dl_bracket(DLElem(DOp.monomial(1, 0, 1)), one_x(2, 0, 1)), DLElem())

    def test_degree_one_pair(self):
        self.assertEqual(dl_bracket(one_x(2, 0, 1), one_x(2, 0, 2)), one_x(2, 0, 2))

    def test_noncommuting_coefficients(self):
        with self.assertRaises(TruncationEscape):
            dl_bracket(one_x(1, 1, 0, DOp.monomial(0, 1)), one_x(2, 1, 0, DOp.monomial(0, 0, 0, 1)))


class PhiTests(SimpleTestCase):
    def test_euler_field(self):
        self.assertEqual(phi(embed_g(VField.basis((1, 0), 1))), DLElem(DOp.monomial(1, 0, 1)))

    def test_t2_d2(self):
        expected = DLElem(DOp.monomial(0, 1, 0, 1)) + one_x(2, 0, 1)
        self.assertEqual(phi(embed_g(VField.basis((0, 1), 2))), expected)

    def test_scalar(self):
        self.assertEqual(phi(embed_a(APoly.monomial(1, 1))), DLElem(DOp.monomial(1, 1)))

    def test_generator_maps_to_one_tensor_x(self):
        for k, m in [(1, (1, 0)), (2, (0, 1)), (1, (2, 1)), (2, (-1, 3))]:
            with self.subTest(k=k, m=m):
                self.assertEqual(phi(xk(k, m)), one_x(k, *m))

    def test_cartan_images(self):
        h1, h2 = cartan_images()
        self.assertEqual(h1, DLElem(DOp.monomial(1, 0, 1)))
        self.assertEqual(h2, DLElem(DOp.monomial(0, 1, 0, 1)) + one_x(2, 0, 1))

    def test_cartan_weights(self):
        h1, h2 = cartan_images()
        x = phi(embed_g(VField.generator(1, (0, 2))))
        # t1 t2^2 d1 has weight (1 - 1, 2)
        self.assertFalse(dl_bracket(h1, x))
        self.assertEqual(dl_bracket(h2, x), x.scale(2))


class RhoTests(SimpleTestCase):
    def test_d1(self):
        expected = dot(APoly.monomial(-1), VField.basis((1, 0), 1))
        self.assertEqual(rho(DLElem(DOp.monomial(0, 0, 1))), expected)

    def test_generator(self):
        self.assertEqual(rho(one_x(2, 0, 1)), xk(2, (0, 1)))

    def test_inverse_of_phi(self):
        self.assertEqual(rho(phi(xk(1, (2, 1)))), xk(1, (2, 1)))
        rng = random.Random(3)
        for _ in range(25):
            x = random_smash(rng)
            self.assertEqual(rho(phi(x)), x)

    def test_second_order_part(self):
        with self.assertRaises(DegreeTooHigh):
            rho(DLElem(DOp.monomial(0, 0, 2)))

    def test_differential_coefficient(self):
        with self.assertRaises(DegreeTooHigh):
            rho(one_x(1, 1, 0, DOp.monomial(0, 0, 1)))
