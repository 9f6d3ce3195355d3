"""Exact scalar arithmetic: the rationals Q and prime fields F_p.

The field is a configuration object shared by everything attached to one
structure; individual scalars are plain `Fraction`s (over Q) or ints in
[0, p) (over F_p).  All arithmetic is exact, never floating point.
"""

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError


def is_prime(p):
    """Trial division; moduli here are tiny."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Rationals:
    """The field Q.  Scalars are normalized `Fraction`s."""

    name = "Q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    def eq(self, a, b):
        return a == b

    def parse(self, text):
        """Accepts "p" or "p/q" with integer p, q."""
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational literal {text!r}") from e

    def render(self, x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p.  Scalars are int residues in [0, p)."""

    def __init__(self, p):
        if not is_prime(p):
            raise ParseError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"F_{p}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def coerce(self, x):
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def parse(self, text):
        try:
            v = int(text.strip())
        except ValueError as e:
            raise ParseError(f"bad F_{self.p} literal {text!r}") from e
        return v % self.p

    def render(self, x):
        return str(x % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


QQ = Rationals()


def check_same_field(a, b):
    if a != b:
        raise FieldMismatch(f"cannot mix scalars over {a!r} and {b!r}")
