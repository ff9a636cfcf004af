import random
from fractions import Fraction

from django.test import SimpleTestCase

from jetalg.checks import random_apoly, random_dop, random_lelem, random_smash, random_vfield
from jetalg.exceptions import ElaborationError, ExprSyntaxError, TruncationEscape
from jetalg.expressions import (
    Add, Algebra, Bracket, Dot, Mul, Neg, Num, Pow, Sub, Sym, Tensor, XGen, eval_expr, evaluate, parse_expr,
)
from jetalg.phi_rho import phi


class ParserTests(SimpleTestCase):
    def test_generator_atom(self):
        self.assertEqual(parse_expr("X2(0,1)"), XGen(2, (0, 1)))
        self.assertEqual(parse_expr("X2((0,1))"), XGen(2, (0, 1)))
        self.assertEqual(parse_expr("X1( -2 , 3 )"), XGen(1, (-2, 3)))

    def test_bracket_over_dot(self):
        expected = Bracket(Dot(Pow(Sym('t1'), -1), Mul(Sym('t1'), Sym('d1'))), Sym('t1'))
        self.assertEqual(parse_expr("[t1^-1 . t1*d1, t1]"), expected)

    def test_precedence(self):
        self.assertEqual(parse_expr("-t1^2"), Neg(Pow(Sym('t1'), 2)))
        self.assertEqual(parse_expr("t1 + t2*d2"), Add(Sym('t1'), Mul(Sym('t2'), Sym('d2'))))
        self.assertEqual(parse_expr("t1 - t2 - 1"), Sub(Sub(Sym('t1'), Sym('t2')), Num(Fraction(1))))
        self.assertEqual(parse_expr("2*-t1"), Mul(Num(Fraction(2)), Neg(Sym('t1'))))

    def test_rational_literal(self):
        self.assertEqual(parse_expr("3/4*t2"), Mul(Num(Fraction(3, 4)), Sym('t2')))

    def test_tensor(self):
        self.assertEqual(parse_expr("(t2) (x) X2(0,1)"), Tensor(Sym('t2'), XGen(2, (0, 1))))
        self.assertEqual(parse_expr("d1 ⊗ 1"), Tensor(Sym('d1'), Num(Fraction(1))))

    def test_whitespace_insensitive(self):
        self.assertEqual(parse_expr("t1*d1+1"), parse_expr("  t1 * d1\n + 1 "))

    def test_rational_exponent(self):
        with self.assertRaises(ExprSyntaxError) as cm:
            parse_expr("t1^(1/2)")
        self.assertEqual(cm.exception.line, 1)
        self.assertIsNotNone(cm.exception.column)

    def test_unknown_atom(self):
        with self.assertRaises(ExprSyntaxError):
            parse_expr("t3 + 1")

    def test_truncated_input(self):
        with self.assertRaises(ExprSyntaxError) as cm:
            parse_expr("[t1, ")
        self.assertIn('(', cm.exception.expected)
        self.assertIn('[', cm.exception.expected)
        self.assertIn('-', cm.exception.expected)
        self.assertNotIn('LPAR', cm.exception.expected)

    def test_zero_denominator(self):
        with self.assertRaises(ExprSyntaxError):
            parse_expr("1/0")


class EvaluationTests(SimpleTestCase):
    def test_lie_bracket(self):
        self.assertEqual(eval_expr("[X2((0,1)), X2((0,2))]", Algebra.L), "X2(0,2)")

    def test_normal_ordering(self):
        self.assertEqual(eval_expr("d1 * t1", Algebra.D), "t1*d1 + 1")

    def test_origin_generator(self):
        self.assertEqual(eval_expr("X1(0,0)", Algebra.L), "0")

    def test_polynomials(self):
        self.assertEqual(eval_expr("(t1 - 1)^2", 'A'), "t1^2 - 2*t1 + 1")
        self.assertEqual(eval_expr("t1^-2 * 2", 'A'), "2*t1^-2")
        self.assertEqual(eval_expr("[t1, t2]", 'A'), "0")

    def test_vector_fields(self):
        self.assertEqual(eval_expr("(t1^2 - t1)*d1 + t2*d2", 'g'), "(t1^2 - t1)*d1 + (t2)*d2")
        self.assertEqual(eval_expr("[t2*d1, t1*d2]", 'g'), "(-t1)*d1 + (t2)*d2")

    def test_smash(self):
        self.assertEqual(eval_expr("X2(0,1)", 'smash'), "-t2 . d2 + 1 . t2*d2")
        self.assertEqual(eval_expr("[t1^-1 . t1*d1, t1]", 'smash'), "(1) . 1")
        self.assertEqual(eval_expr("[X1(1,0), X1(-1,0)] - X1(1,0) - X1(-1,0)", 'smash'), "0")
        self.assertEqual(eval_expr("t1*X2(0,1)", 'smash'), "-t1*t2 . d2 + t1 . t2*d2")

    def test_smash_product_keeps_coefficient_left(self):
        self.assertEqual(eval_expr("t1*d1 + t2", 'smash'), "t1 . d1 + (t2) . 1")
        self.assertEqual(evaluate("t1 * d1", 'smash'), evaluate("(t1 . 1) * d1", 'smash'))
        self.assertEqual(eval_expr("d1*t1", 'smash'), "t1 . d1 + (1) . 1")
        self.assertEqual(eval_expr("t1^-1 * d2", 'smash'), "t1^-1 . d2")

    def test_smash_product_is_not_the_weyl_product(self):
        self.assertEqual(eval_expr("[t1*d1, X1(1,0)]", 'smash'), eval_expr("[t1 . d1, X1(1,0)]", 'smash'))
        self.assertNotEqual(eval_expr("[t1 . d1, X1(1,0)]", 'smash'), "0")
        self.assertEqual(eval_expr("[1 . t1*d1, X1(1,0)]", 'smash'), "0")

    def test_tensor_algebra(self):
        self.assertEqual(eval_expr("t2*d2 (x) 1 + 1 (x) X2(0,1)", 'DL'), "(t2*d2) (x) 1 + (1) (x) X2(0,1)")
        self.assertEqual(eval_expr("[1 (x) X2(0,1), 1 (x) X2(0,2)]", 'DL'), "(1) (x) X2(0,2)")
        self.assertEqual(eval_expr("t1 * X1(1,0)", 'DL'), "(t1) (x) X1(1,0)")

    def test_truncation_escape(self):
        with self.assertRaises(TruncationEscape):
            eval_expr("[t2 (x) X1(1,0), d2 (x) X2(1,0)]", 'DL')


class ElaborationErrorTests(SimpleTestCase):
    def assertRejects(self, text, algebra, fragment):
        with self.assertRaises(ElaborationError) as cm:
            evaluate(text, algebra)
        self.assertIn(fragment, str(cm.exception))

    def test_derivative_in_a(self):
        self.assertRejects("d1 * t1", 'A', "'d1'")

    def test_t2_inverse(self):
        self.assertRejects("t2^-1", 'A', "'^'")

    def test_dot_outside_smash(self):
        self.assertRejects("t1 . d1", 'L', "'.'")

    def test_generator_outside_l(self):
        self.assertRejects("X1(1,0) + t1", 'D', "X1(1,0)")

    def test_negative_m2(self):
        self.assertRejects("X1(0,-1)", 'L', "X1(0,-1)")

    def test_product_in_l(self):
        self.assertRejects("X1(1,0) * X2(0,1)", 'L', "'*'")

    def test_scalar_in_l(self):
        self.assertRejects("X1(1,0) + 1", 'L', "scalar 1")

    def test_order_zero_part_in_g(self):
        self.assertRejects("d1 * t1", 'g', "vector field")

    def test_second_order_in_smash(self):
        self.assertRejects("d1^2", 'smash', "order 2")

    def test_product_of_fields_in_smash(self):
        self.assertRejects("d1 * t2*d2", 'smash', "order 2")

    def test_unknown_algebra(self):
        self.assertRejects("t1", 'Q', "unknown algebra")


class RoundTripTests(SimpleTestCase):
    """Canonical renderings parse back to the element they came from"""

    def assertRoundTrip(self, element, algebra):
        self.assertEqual(evaluate(str(element), algebra), element, str(element))

    def test_generated_elements(self):
        rng = random.Random(11)
        for _ in range(30):
            self.assertRoundTrip(random_apoly(rng), Algebra.A)
            self.assertRoundTrip(random_dop(rng), Algebra.D)
            self.assertRoundTrip(random_vfield(rng), Algebra.G)
            self.assertRoundTrip(random_smash(rng), Algebra.SMASH)
            self.assertRoundTrip(random_lelem(rng), Algebra.L)
            self.assertRoundTrip(phi(random_smash(rng)), Algebra.DL)

    def test_zero(self):
        for algebra in Algebra:
            with self.subTest(algebra=algebra):
                self.assertEqual(eval_expr("0", algebra), "0")
