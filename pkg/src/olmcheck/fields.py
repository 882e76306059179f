"""Exact coefficient fields: arbitrary-precision rationals and odd prime fields.

Two layers live here.  ``Rational`` and ``PrimeFieldElement`` are the
self-contained element types with operator overloading; they are what user
code and tests manipulate directly.  ``RationalField`` and ``PrimeField`` are
lightweight field descriptors used by the polynomial engine, which stores raw
coefficient values (``Fraction`` for the rationals, ``int`` residues for a
prime field) and calls the descriptor for arithmetic.  Both layers compute
the same thing; the raw layer exists because the Groebner inner loops cannot
afford per-element object dispatch.

Characteristic 2 is rejected everywhere: the chart equations divide by 2.
"""

from fractions import Fraction

from .errors import DivisionByZero, ModulusMismatch

Rational = Fraction


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeFieldElement:
    """A residue in F_p for an odd prime p."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue, modulus):
        if not _is_odd_prime(modulus):
            raise ValueError("modulus must be an odd prime >= 3, got %r" % (modulus,))
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    "mixed moduli %d and %d" % (self.modulus, other.modulus))
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.residue + o.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.residue - o.residue, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.residue * o.residue, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.modulus)

    def inverse(self):
        if self.residue == 0:
            raise DivisionByZero("inverse of 0 in F_%d" % self.modulus)
        return PrimeFieldElement(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return "PrimeFieldElement(%d, %d)" % (self.residue, self.modulus)


class RationalField:
    """Descriptor for Q with raw values stored as Fraction."""

    characteristic = 0
    modulus = 0

    def __repr__(self):
        return "QQ"

    def coerce(self, n):
        return Fraction(n)

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in QQ")
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def to_str(a):
        return str(a)

    def parse(self, text):
        return Fraction(text)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """Descriptor for F_p, p an odd prime; raw values are ints in [0, p)."""

    def __init__(self, p):
        if not _is_odd_prime(p):
            raise ValueError("modulus must be an odd prime >= 3, got %r" % (p,))
        self.p = p
        self.characteristic = p
        self.modulus = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return "GF(%d)" % self.p

    def coerce(self, n):
        if isinstance(n, Fraction):
            return self.div(n.numerator % self.p, n.denominator % self.p)
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of 0 in F_%d" % self.p)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @staticmethod
    def is_zero(a):
        return a == 0

    def to_str(self, a):
        # Balanced representative keeps printed generators readable
        # (traces carry -1/2 style coefficients).
        return str(a if a <= self.p // 2 else a - self.p)

    def parse(self, text):
        if "/" in text:
            num, den = text.split("/")
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(text) % self.p

    def element(self, n):
        return PrimeFieldElement(n, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def coefficient_field(modulus):
    """Field selector used by the CLI and verifier: 0 means Q, otherwise F_p."""
    if modulus == 0:
        return QQ
    return PrimeField(modulus)
