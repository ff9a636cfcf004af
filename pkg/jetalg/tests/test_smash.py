from django.test import SimpleTestCase

from jetalg.polynomials import APoly
from jetalg.smash import Cover, SmashElem, dot, embed_a, embed_g, smash_bracket, xk
from jetalg.vector_fields import VField

T1 = APoly.monomial(1)
T2 = APoly.monomial(0, 1)


class GeneratorTests(SimpleTestCase):
    def test_x2_0_1(self):
        expected = embed_g(VField.basis((0, 1), 2)) - dot(T2, VField.basis((0, 0), 2))
        self.assertEqual(xk(2, (0, 1)), expected)
        self.assertEqual(str(xk(2, (0, 1))), "-t2 . d2 + 1 . t2*d2")

    def test_origin_vanishes(self):
        for k in (1, 2):
            self.assertEqual(xk(k, (0, 0)), SmashElem())
        self.assertEqual(str(xk(1, (0, 0))), "0")

    def test_x1_1_0(self):
        expected = dot(APoly.monomial(-1), VField.basis((2, 0), 1)) - embed_g(VField.basis((1, 0), 1))
        self.assertEqual(xk(1, (1, 0)), expected)
        self.assertEqual(str(xk(1, (1, 0))), "-1 . t1*d1 + t1^-1 . t1^2*d1")

    def test_negative_m2(self):
        with self.assertRaises(ValueError):
            xk(1, (0, -1))


class EmbeddingTests(SimpleTestCase):
    def test_embed_g(self):
        self.assertEqual(str(embed_g(VField.basis((1, 0), 1))), "1 . t1*d1")

    def test_embed_a(self):
        self.assertEqual(str(embed_a(APoly.constant(1))), "(1) . 1")
        self.assertEqual(str(embed_a(T1 - APoly.constant(1))), "(t1 - 1) . 1")

    def test_terms_stay_apart(self):
        # t1 . d1 and 1 . t1*d1 are different elements
        self.assertNotEqual(dot(T1, VField.basis((0, 0), 1)), embed_g(VField.basis((1, 0), 1)))

    def test_left_multiplication(self):
        X = VField.basis((0, 0), 1)
        self.assertEqual(embed_g(X).lmul(T1), dot(T1, X))
        self.assertEqual(embed_a(T2).lmul(T1), embed_a(T1 * T2))

    def test_bad_cover_key(self):
        with self.assertRaises(ValueError):
            Cover({((0, 0), (0, -1), 1): 1})
        with self.assertRaises(ValueError):
            Cover({((0, 0), (0, 0), 3): 1})


class BracketTests(SimpleTestCase):
    def test_generator_commutes_with_t2(self):
        self.assertEqual(smash_bracket(xk(2, (0, 1)), embed_a(T2)), SmashElem())

    def test_derivation_action(self):
        self.assertEqual(smash_bracket(embed_g(VField.basis((1, 0), 1)), embed_a(T1)), embed_a(T1))

    def test_structure_constant_instance(self):
        self.assertEqual(smash_bracket(xk(1, (1, 0)), xk(1, (-1, 0))), xk(1, (1, 0)) + xk(1, (-1, 0)))

    def test_scalars_commute(self):
        self.assertEqual(smash_bracket(embed_a(T1), embed_a(T2)), SmashElem())

    def test_antisymmetry(self):
        x = xk(1, (2, 1)) + embed_a(T1)
        y = xk(2, (-1, 2)) + embed_g(VField.basis((0, 0), 2))
        self.assertEqual(smash_bracket(x, y), -smash_bracket(y, x))
