"""Exact ordered-field scalars: arbitrary-precision rationals and real cyclotomic numbers.

Rational values are plain ``gmpy2.mpq`` objects (always reduced, positive
denominator).  Cyclotomic values live in Q(zeta_m) and are represented by
their coefficient vector with respect to the power basis 1, zeta, ...,
zeta^(phi(m)-1); the representation is canonical, so the zero test is exact.
Sign evaluation of a nonzero (real) cyclotomic value uses interval
arithmetic whose precision doubles until the interval excludes zero.
"""
from __future__ import annotations

from functools import lru_cache

import mpmath
from gmpy2 import mpq, mpz


class NotRealError(ArithmeticError):
    """Sign was requested for a cyclotomic value with nonzero imaginary part."""


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_int(num, den):
    # den is monic with integer coefficients, so quotient/remainder stay integral
    num = list(num)
    q = [mpz(0)] * max(len(num) - len(den) + 1, 0)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c == 0:
            continue
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return (mpz(-1), mpz(1))
    poly = [mpz(-1)] + [mpz(0)] * (m - 1) + [mpz(1)]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(poly)


class CyclotomicField:
    """The field Q(zeta_m), with precomputed power-reduction and trig tables."""

    def __init__(self, order: int):
        self.order = order
        self.poly = cyclotomic_polynomial(order)
        self.degree = len(self.poly) - 1
        self._zeta_powers = self._power_table()
        self._trig_cache: dict[int, list] = {}
        self.zero = Cyclo(self, (mpq(0),) * self.degree)
        self.one = Cyclo(self, tuple(mpq(1 if i == 0 else 0) for i in range(self.degree)))

    def _power_table(self):
        # zeta^k for k = 0 .. order-1, reduced mod the cyclotomic polynomial
        d = self.degree
        table = []
        cur = [mpz(0)] * d
        cur[0] = mpz(1)
        for _ in range(self.order):
            table.append(tuple(cur))
            nxt = [mpz(0)] + cur[:-1]
            lead = cur[-1]
            if lead:
                for i in range(d):
                    nxt[i] -= lead * self.poly[i]
            cur = nxt
        return table

    def zeta_pow(self, e: int) -> "Cyclo":
        row = self._zeta_powers[e % self.order]
        return Cyclo(self, tuple(mpq(c) for c in row))

    def element(self, coeffs) -> "Cyclo":
        coeffs = [mpq(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than field degree")
        coeffs += [mpq(0)] * (self.degree - len(coeffs))
        return Cyclo(self, tuple(coeffs))

    def from_rational(self, value) -> "Cyclo":
        c = [mpq(0)] * self.degree
        c[0] = mpq(value)
        return Cyclo(self, tuple(c))

    def _trig(self, prec: int):
        table = self._trig_cache.get(prec)
        if table is None:
            old = mpmath.iv.prec
            try:
                mpmath.iv.prec = prec
                two_pi = 2 * mpmath.iv.pi
                table = []
                for k in range(self.degree):
                    angle = two_pi * k / self.order
                    table.append((mpmath.iv.cos(angle), mpmath.iv.sin(angle)))
            finally:
                mpmath.iv.prec = old
            self._trig_cache[prec] = table
        return table

    def interval_value(self, coeffs, prec: int):
        """Complex interval (re, im) enclosing sum(c_k * zeta^k) at given precision."""
        table = self._trig(prec)
        old = mpmath.iv.prec
        try:
            mpmath.iv.prec = prec
            re = mpmath.iv.mpf(0)
            im = mpmath.iv.mpf(0)
            for k, c in enumerate(coeffs):
                if c == 0:
                    continue
                ck = mpmath.iv.mpf(int(c.numerator)) / int(c.denominator)
                re += ck * table[k][0]
                im += ck * table[k][1]
        finally:
            mpmath.iv.prec = old
        return re, im

    def __repr__(self):
        return f"CyclotomicField({self.order})"


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


_MAX_SIGN_PREC = 1 << 16


class Cyclo:
    """An element of a fixed cyclotomic field, immutable."""

    __slots__ = ("field", "coeffs", "_sign", "_hash")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._sign = None
        self._hash = None

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.field is not self.field:
                if other.field.order != self.field.order:
                    raise ValueError("mixed cyclotomic field orders")
                other = Cyclo(self.field, other.coeffs)
            return other
        if isinstance(other, (int, type(mpq(0)), type(mpz(0)))):
            return self.field.from_rational(other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Cyclo(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, type(mpq(0)), type(mpz(0)))):
            if other == 0:
                return self.field.zero
            q = mpq(other)
            return Cyclo(self.field, tuple(a * q for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        conv = [mpq(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                conv[i + j] += a * b
        out = conv[:d]
        powers = self.field._zeta_powers
        order = self.field.order
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c == 0:
                continue
            row = powers[k % order]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
        return Cyclo(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        # extended Euclid of the coefficient polynomial with the cyclotomic polynomial
        a = [mpq(c) for c in self.field.poly]
        b = list(self.coeffs)
        _poly_trim(b)
        s_a, s_b = [mpq(0)], [mpq(1)]

        def poly_divmod(num, den):
            num = list(num)
            quot = [mpq(0)] * max(len(num) - len(den) + 1, 0)
            inv_lead = 1 / den[-1]
            for k in range(len(num) - len(den), -1, -1):
                c = num[k + len(den) - 1] * inv_lead
                if c == 0:
                    continue
                quot[k] = c
                for i, dc in enumerate(den):
                    num[k + i] -= c * dc
            return quot, _poly_trim(num)

        while b:
            q, r = poly_divmod(a, b)
            # s update: s_a - q * s_b
            prod = [mpq(0)] * (len(q) + len(s_b) - 1 if q and s_b else 0)
            for i, qc in enumerate(q):
                if qc == 0:
                    continue
                for j, sc in enumerate(s_b):
                    prod[i + j] += qc * sc
            new_s = [mpq(0)] * max(len(s_a), len(prod))
            for i, c in enumerate(s_a):
                new_s[i] += c
            for i, c in enumerate(prod):
                new_s[i] -= c
            a, b = b, r
            s_a, s_b = s_b, _poly_trim(new_s)
        # a is the gcd (a nonzero constant, since the cyclotomic polynomial is irreducible)
        assert len(a) == 1
        scale = 1 / a[0]
        inv = [c * scale for c in s_a]
        return self.field.element(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, type(mpq(0)), type(mpz(0)))):
            q = mpq(other)
            if q == 0:
                raise ZeroDivisionError
            return Cyclo(self.field, tuple(a / q for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = self.field.one
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    # -- predicates and order -----------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.coeffs[0]

    def sign(self) -> int:
        if self._sign is not None:
            return self._sign
        if self.is_zero():
            self._sign = 0
            return 0
        if self.is_rational():
            c = self.coeffs[0]
            self._sign = 1 if c > 0 else -1
            return self._sign
        prec = 64
        while prec <= _MAX_SIGN_PREC:
            re, im = self.field.interval_value(self.coeffs, prec)
            if 0 < im.a or im.b < 0:
                raise NotRealError("cyclotomic value has nonzero imaginary part")
            if 0 < re.a:
                self._sign = 1
                return 1
            if re.b < 0:
                self._sign = -1
                return -1
            prec *= 2
        raise ArithmeticError("sign undecided at maximum precision")

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.field.order == other.field.order and self.coeffs == other.coeffs
        if isinstance(other, (int, type(mpq(0)), type(mpz(0)))):
            return self.is_rational() and self.coeffs[0] == mpq(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.field.order, self.coeffs))
        return self._hash

    def __lt__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() < 0

    def __le__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() <= 0

    def __gt__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() > 0

    def __ge__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    def __float__(self):
        re, _ = self.field.interval_value(self.coeffs, 64)
        return float(re.mid)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __reduce__(self):
        return (_rebuild_cyclo, (self.field.order, tuple(str(c) for c in self.coeffs)))

    def __repr__(self):
        return f"Cyclo(m={self.field.order}, {format_scalar(self)})"


def _rebuild_cyclo(order, coeff_strs):
    field = cyclotomic_field(order)
    return field.element([mpq(s) for s in coeff_strs])


Scalar = object  # either mpq or Cyclo; algorithms are generic over the operators


def sign(x) -> int:
    """Exact sign in {-1, 0, +1} of a rational or cyclotomic scalar."""
    if isinstance(x, Cyclo):
        return x.sign()
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def is_zero(x) -> bool:
    if isinstance(x, Cyclo):
        return x.is_zero()
    return x == 0


def to_float(x) -> float:
    if isinstance(x, Cyclo):
        return float(x)
    return float(mpq(x).numerator) / float(mpq(x).denominator)


# -- serialization ------------------------------------------------------------

def format_scalar(x) -> str:
    """Exact text form: 'p/q' or 'p' for rationals, '[c0;c1;...]' for cyclotomics."""
    if isinstance(x, Cyclo):
        return "[" + ";".join(str(c) for c in x.coeffs) + "]"
    return str(mpq(x))


def parse_scalar(text: str, field: CyclotomicField | None = None):
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"malformed cyclotomic literal: {text!r}")
        if field is None:
            raise ValueError("cyclotomic literal requires a field")
        coeffs = [mpq(part) for part in text[1:-1].split(";")] if len(text) > 2 else []
        return field.element(coeffs)
    value = mpq(text)
    if field is not None:
        return field.from_rational(value)
    return value
