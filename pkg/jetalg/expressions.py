"""
Expression language of the command line.

Text is parsed once into a small syntax tree; the tree has no algebra
attached. Elaboration then reads it inside one target algebra:

    A      polynomials in t1^±1, t2
    D      Weyl operators, products are normal ordered
    g      vector fields, written as first-order operators
    smash  f . X + h . 1 with f, h in A and X in g
    L      combinations of X1(m1,m2) and X2(m1,m2)
    DL     p (x) 1 + sum q (x) Xk(m)

Every canonical rendering of an element parses back to the same element.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from django.db import models
from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from .exceptions import ElaborationError, ExprSyntaxError
from .jet_lie import LElem, l_bracket
from .phi_rho import DLElem, dl_bracket
from .polynomials import APoly
from .smash import dot, embed_a, embed_g, smash_bracket, xk
from .vector_fields import VField
from .weyl import DMono, DOp, d_commutator, d_mul

logger = logging.getLogger(__name__)

GRAMMAR = r"""
    ?start: sum

    ?sum: term
        | sum "+" term          -> add
        | sum "-" term          -> sub

    ?term: product
         | product _DOT product     -> dot
         | product _TENSOR product  -> tensor

    ?product: unary
            | product "*" unary     -> mul

    ?unary: power
          | "-" unary           -> neg

    ?power: atom
          | atom "^" exponent   -> pow

    exponent: SIGNED_INT
            | "(" SIGNED_INT ")"

    ?atom: INT                  -> integer
         | RATIONAL             -> rational
         | SYMBOL               -> symbol
         | XNAME "(" index ")"  -> xgen
         | "[" sum "," sum "]"  -> bracket
         | "(" sum ")"

    index: SIGNED_INT "," SIGNED_INT
         | "(" SIGNED_INT "," SIGNED_INT ")"

    _DOT: "." | "·"
    _TENSOR: "(x)" | "⊗"
    RATIONAL.2: /\d+\/\d+/
    INT: /\d+/
    SIGNED_INT: /-?\d+/
    SYMBOL: /[td][12]/
    XNAME: /X[12]/

    %import common.WS
    %ignore WS
"""


class Algebra(models.TextChoices):
    A = 'A', 'A = C[t1^±1, t2]'
    D = 'D', 'Weyl algebra'
    G = 'g', 'vector fields Der(A)'
    SMASH = 'smash', 'A # U(g), degree one'
    L = 'L', 'jet Lie algebra'
    DL = 'DL', 'D (x) U(L), degree one'


# Syntax tree

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class XGen:
    k: int
    m: Tuple[int, int]


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


@dataclass(frozen=True)
class Dot:
    left: object
    right: object


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@v_args(inline=True)
class ExprBuilder(Transformer):
    """Turns the lark parse tree into the dataclasses above"""

    def integer(self, token):
        return Num(Fraction(int(token)))

    def rational(self, token):
        return Num(Fraction(str(token)))

    def symbol(self, token):
        return Sym(str(token))

    def xgen(self, name, index):
        return XGen(int(name[1]), index)

    def index(self, m1, m2):
        return int(m1), int(m2)

    def exponent(self, value):
        return int(value)

    def pow(self, base, exponent):
        return Pow(base, exponent)

    def neg(self, arg):
        return Neg(arg)

    def add(self, left, right):
        return Add(left, right)

    def sub(self, left, right):
        return Sub(left, right)

    def mul(self, left, right):
        return Mul(left, right)

    def bracket(self, left, right):
        return Bracket(left, right)

    def dot(self, left, right):
        return Dot(left, right)

    def tensor(self, left, right):
        return Tensor(left, right)


parser = Lark(GRAMMAR, parser='lalr')


def _token_text(name):
    """Literal text of a string terminal, the terminal name for regex ones"""
    try:
        pattern = parser.get_terminal(name).pattern
    except KeyError:
        return name
    return pattern.value if pattern.type == 'str' else name


def parse_expr(text):
    """Parse text into a syntax tree, raising ExprSyntaxError with its position"""
    try:
        tree = parser.parse(text)
    except UnexpectedInput as e:
        expected = getattr(e, 'expected', None) or getattr(e, 'allowed', None) or ()
        expected = {_token_text(name) for name in expected}
        line = e.line if e.line and e.line > 0 else None
        column = e.column if e.column and e.column > 0 else None
        logger.debug(f"Rejected expression {text!r} at {line}:{column}")
        raise ExprSyntaxError(f"cannot parse {text!r}", line=line, column=column, expected=expected)
    try:
        return ExprBuilder().transform(tree)
    except VisitError as e:
        # 1/0 and the like
        raise ExprSyntaxError(f"cannot parse {text!r}: {e.orig_exc}")


def describe(node):
    """Short name of a node for error messages"""
    if isinstance(node, Num):
        return f"scalar {node.value}"
    if isinstance(node, Sym):
        return f"atom '{node.name}'"
    if isinstance(node, XGen):
        return f"atom 'X{node.k}({node.m[0]},{node.m[1]})'"
    names = {
        Neg: "unary '-'", Add: "operator '+'", Sub: "operator '-'",
        Mul: "operator '*'", Pow: "operator '^'", Bracket: "bracket '[ , ]'",
        Dot: "operator '.'", Tensor: "operator '(x)'",
    }
    return names[type(node)]


def _is_plain(node, symbols=('t1', 't2', 'd1', 'd2')):
    """True when the subtree only uses the given symbols, numbers and ring operations"""
    if isinstance(node, Num):
        return True
    if isinstance(node, Sym):
        return node.name in symbols
    if isinstance(node, (Neg, Pow)):
        return _is_plain(node.arg if isinstance(node, Neg) else node.base, symbols)
    if isinstance(node, (Add, Sub, Mul, Bracket)):
        return _is_plain(node.left, symbols) and _is_plain(node.right, symbols)
    return False


class Elaborator:
    """
    Bottom-up evaluation of a syntax tree in one algebra.

    Numbers stay Fractions until they meet an element; subclasses say how a
    scalar becomes an element and what products, powers and brackets mean.
    """
    algebra = None

    def run(self, node):
        return self.finish(self.promote(self.eval(node), node))

    def eval(self, node):
        return getattr(self, f'eval_{type(node).__name__.lower()}')(node)

    def fail(self, node, detail=""):
        raise ElaborationError(f"{describe(node)} is not defined in {self.algebra}{detail}")

    def promote(self, value, node):
        if isinstance(value, Fraction):
            return self.from_scalar(value, node)
        return value

    def finish(self, value):
        return value

    def from_scalar(self, value, node):
        self.fail(node)

    def product(self, x, y, node):
        self.fail(node)

    def power(self, x, n, node):
        self.fail(node)

    def bracket(self, x, y, node):
        self.fail(node)

    def eval_num(self, node):
        return node.value

    def eval_sym(self, node):
        self.fail(node)

    def eval_xgen(self, node):
        self.fail(node)

    def eval_dot(self, node):
        self.fail(node)

    def eval_tensor(self, node):
        self.fail(node)

    def eval_neg(self, node):
        return -self.eval(node.arg)

    def eval_add(self, node):
        x, y = self.eval(node.left), self.eval(node.right)
        if isinstance(x, Fraction) and isinstance(y, Fraction):
            return x + y
        return self.promote(x, node.left) + self.promote(y, node.right)

    def eval_sub(self, node):
        x, y = self.eval(node.left), self.eval(node.right)
        if isinstance(x, Fraction) and isinstance(y, Fraction):
            return x - y
        return self.promote(x, node.left) - self.promote(y, node.right)

    def eval_mul(self, node):
        x, y = self.eval(node.left), self.eval(node.right)
        if isinstance(x, Fraction) and isinstance(y, Fraction):
            return x * y
        if isinstance(x, Fraction):
            return y.scale(x)
        if isinstance(y, Fraction):
            return x.scale(y)
        return self.product(x, y, node)

    def eval_pow(self, node):
        x = self.eval(node.base)
        if isinstance(x, Fraction):
            if x == 0 and node.exponent < 0:
                self.fail(node, ": 0 has no inverse")
            return x ** node.exponent
        return self.power(x, node.exponent, node)

    def eval_bracket(self, node):
        x = self.promote(self.eval(node.left), node.left)
        y = self.promote(self.eval(node.right), node.right)
        return self.bracket(x, y, node)


SYMBOLS = {
    't1': DMono(1, 0, 0, 0),
    't2': DMono(0, 1, 0, 0),
    'd1': DMono(0, 0, 1, 0),
    'd2': DMono(0, 0, 0, 1),
}


class WeylElaborator(Elaborator):
    algebra = Algebra.D
    symbols = ('t1', 't2', 'd1', 'd2')

    def from_scalar(self, value, node):
        return DOp.constant(value)

    def eval_sym(self, node):
        if node.name not in self.symbols:
            self.fail(node)
        return DOp({SYMBOLS[node.name]: 1})

    def product(self, x, y, node):
        return d_mul(x, y)

    def power(self, x, n, node):
        if n < 0:
            keys = list(x.keys())
            if len(keys) != 1 or keys[0].b or keys[0].c or keys[0].d:
                self.fail(node, f": only monomials in t1 can be inverted, got {x}")
            (key, coeff), = x.items()
            return DOp.monomial(key.a * n, coeff=coeff ** n)
        result = DOp.constant(1)
        for _ in range(n):
            result = d_mul(result, x)
        return result

    def bracket(self, x, y, node):
        return d_commutator(x, y)


class PolyElaborator(WeylElaborator):
    algebra = Algebra.A
    symbols = ('t1', 't2')

    def finish(self, value):
        return value.to_apoly()


class FieldElaborator(WeylElaborator):
    algebra = Algebra.G

    def finish(self, value):
        try:
            return VField.from_weyl(value)
        except ValueError as e:
            raise ElaborationError(f"{e} in {self.algebra}")


class LieElaborator(Elaborator):
    algebra = Algebra.L

    def from_scalar(self, value, node):
        if value:
            self.fail(node)
        return LElem()

    def eval_xgen(self, node):
        try:
            return LElem.basis(node.k, *node.m)
        except ValueError as e:
            raise ElaborationError(f"{describe(node)}: {e}")

    def bracket(self, x, y, node):
        return l_bracket(x, y)


class SmashElaborator(Elaborator):
    """
    t1, t2 stand for t . 1 and d1, d2 for 1 . d_k; '*' is the product of the
    smash algebra, so t1*d1 is t1 . d1 and d1*t1 is t1 . d1 + 1 . 1.
    Subtrees in t1, t2 alone are computed in A first.
    """
    algebra = Algebra.SMASH

    def eval(self, node):
        if not isinstance(node, Num) and _is_plain(node, PolyElaborator.symbols):
            return embed_a(PolyElaborator().run(node))
        return super().eval(node)

    def eval_sym(self, node):
        k = int(node.name[1])
        if node.name.startswith('t'):
            return embed_a(APoly.monomial(int(k == 1), int(k == 2)))
        return embed_g(VField.basis((0, 0), k))

    def from_scalar(self, value, node):
        return embed_a(APoly.constant(value))

    def eval_xgen(self, node):
        try:
            return xk(node.k, node.m)
        except ValueError as e:
            raise ElaborationError(f"{describe(node)}: {e}")

    def eval_dot(self, node):
        f = PolyElaborator().run(node.left)
        if isinstance(node.right, Num):
            return embed_a(f.scale(node.right.value))
        return dot(f, FieldElaborator().run(node.right))

    def product(self, x, y, node):
        """
        h . 1 times y is left multiplication; f . X times h . 1 is
        fh . X + f X(h) . 1. Anything else leaves the slice.
        """
        if not x.cover:
            return y.lmul(x.apart)
        if not y.cover:
            return x.lmul(y.apart) + smash_bracket(x, y)
        self.fail(node, f": ({x})*({y}) has order 2")

    def power(self, x, n, node):
        if not x.cover:
            op = DOp((DMono(mono.m1, mono.m2), coeff) for mono, coeff in x.apart.items())
            return embed_a(WeylElaborator().power(op, n, node).to_apoly())
        if n == 1:
            return x
        if n == 0:
            return embed_a(APoly.constant(1))
        if n < 0:
            self.fail(node, f": {x} has no inverse")
        self.fail(node, f": ({x})^{n} has order {n}")

    def bracket(self, x, y, node):
        return smash_bracket(x, y)


class TensorElaborator(Elaborator):
    algebra = Algebra.DL

    def eval(self, node):
        if not isinstance(node, Num) and _is_plain(node):
            return DLElem(WeylElaborator().run(node))
        return super().eval(node)

    def from_scalar(self, value, node):
        return DLElem(DOp.constant(value))

    def eval_xgen(self, node):
        return self.tensor(DOp.constant(1), LieElaborator().eval_xgen(node))

    def eval_tensor(self, node):
        left = WeylElaborator().run(node.left)
        if isinstance(node.right, Num):
            return DLElem(left.scale(node.right.value))
        return self.tensor(left, LieElaborator().run(node.right))

    def tensor(self, op, x):
        return DLElem(None, {key: op.scale(coeff) for key, coeff in x.items()})

    def product(self, x, y, node):
        if x.part1 and y.part1:
            self.fail(node, ": the product leaves PBW degree one")
        pairs = [(key, d_mul(op, y.part0)) for key, op in x.part1.items()]
        pairs += [(key, d_mul(x.part0, op)) for key, op in y.part1.items()]
        return DLElem.from_pairs(d_mul(x.part0, y.part0), pairs)

    def bracket(self, x, y, node):
        return dl_bracket(x, y)


ELABORATORS = {
    Algebra.A: PolyElaborator,
    Algebra.D: WeylElaborator,
    Algebra.G: FieldElaborator,
    Algebra.SMASH: SmashElaborator,
    Algebra.L: LieElaborator,
    Algebra.DL: TensorElaborator,
}


def evaluate(expr, algebra):
    """Element of the algebra denoted by expr (a syntax tree or text)"""
    try:
        algebra = Algebra(algebra)
    except ValueError:
        raise ElaborationError(f"unknown algebra '{algebra}', choose one of {', '.join(Algebra.values)}")
    if isinstance(expr, str):
        expr = parse_expr(expr)
    return ELABORATORS[algebra]().run(expr)


def eval_expr(expr, algebra):
    """Canonical rendering of evaluate(expr, algebra)"""
    return str(evaluate(expr, algebra))
