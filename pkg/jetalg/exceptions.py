class JetAlgError(Exception):
    """Base class for errors raised by jetalg operations"""


class NotInSubalgebra(JetAlgError):
    """A vector field does not vanish at the point (1, 0)"""


class NotInJetAlgebra(JetAlgError):
    """A smash-product element is not a combination of the X_k(m)"""


class TruncationEscape(JetAlgError):
    """A bracket in D (x) U(L) would leave PBW degree one"""


class DegreeTooHigh(JetAlgError):
    """An element of D (x) U(L) has no preimage in the degree-one smash slice"""


class ElaborationError(JetAlgError):
    """A parsed expression has no meaning in the requested algebra"""


class ExprSyntaxError(JetAlgError):
    """Expression text does not match the grammar"""

    def __init__(self, message, line=None, column=None, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        location = f" at line {line}, column {column}" if line is not None else ""
        details = f"; expected one of: {', '.join(sorted(self.expected))}" if self.expected else ""
        super().__init__(f"{message}{location}{details}")


class UnknownCheck(JetAlgError):
    """The check id is not in the catalog"""


class InvalidConfig(JetAlgError):
    """Sweep configuration is empty or inconsistent"""
