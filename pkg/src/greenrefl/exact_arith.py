"""Exact arithmetic over cyclotomic fields Q(zeta_e) and over rational
functions in one parameter t with cyclotomic coefficients.

Everything downstream (symmetric functions, character tables, Green
functions) is built on the two scalar types defined here:

* ``CycNum``   -- an element of Q(zeta_e), stored in the power basis
                  1, zeta, ..., zeta^(phi(e)-1) reduced modulo the e-th
                  cyclotomic polynomial.  Canonical: equal field elements
                  have identical coefficient tuples.
* ``TPoly``    -- a polynomial in t with CycNum coefficients.
* ``TRat``     -- a quotient of two TPoly, kept gcd-reduced with a monic
                  denominator, so equality is structural.

All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# integer polynomial helpers (used only to build cyclotomic polynomials)

def _int_poly_div(num, den):
    """Exact division of integer polynomial lists (ascending coeffs)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact integer polynomial division")
        q = c // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact integer polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e):
    """Coefficients (ascending) of the e-th cyclotomic polynomial."""
    if e <= 0:
        raise ValueError("order must be a positive integer")
    poly = [-1] + [0] * (e - 1) + [1]          # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _int_poly_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycField:
    """The cyclotomic field Q(zeta_e); interned so fields compare by identity."""

    _cache = {}

    def __new__(cls, e):
        field = cls._cache.get(e)
        if field is None:
            if e <= 0:
                raise ValueError("order must be a positive integer")
            field = object.__new__(cls)
            field._init(e)
            cls._cache[e] = field
        return field

    def _init(self, e):
        self.e = e
        poly = cyclotomic_polynomial(e)
        self.degree = len(poly) - 1
        d = self.degree
        # integer power table: zeta^k in the power basis (cyclotomic
        # polynomials are monic over Z, so the reduction is integral)
        top = [-c for c in poly[:d]]             # x^d = -(c_0 + ... + c_{d-1}x^{d-1})
        powers = []
        cur = [0] * d
        cur[0] = 1
        for _ in range(max(e, 2 * d)):
            powers.append(tuple(cur))
            lead = cur[d - 1] if d > 0 else 0
            nxt = [0] + cur[: d - 1]
            if lead:
                nxt = [a + lead * b for a, b in zip(nxt, top)]
            cur = nxt
        self._powers = powers
        self.zero = CycNum(self, (0,) * d, 1)
        self.one = CycNum(self, powers[0], 1)

    def __repr__(self):
        return f"CycField({self.e})"

    def from_rational(self, value):
        if isinstance(value, int):
            num, den = value, 1
        else:
            value = Fraction(value)
            num, den = value.numerator, value.denominator
        return CycNum(self, (num,) + (0,) * (self.degree - 1), den)

    def zeta(self, k=1):
        """zeta_e^k as a field element."""
        return CycNum(self, self._powers[k % self.e], 1)

    def make(self, nums, den):
        """Normalized element from integer numerators and a denominator."""
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        g = den
        for x in nums:
            if x:
                g = gcd_int(g, x)
            if g == 1:
                break
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        return CycNum(self, tuple(nums), den)

    def _reduce(self, conv):
        """Reduce an integer convolution (length <= 2*degree-1) into the
        power basis."""
        d = self.degree
        out = list(conv[:d]) + [0] * (d - min(d, len(conv)))
        for k in range(d, len(conv)):
            c = conv[k]
            if c:
                row = self._powers[k]
                for i in range(d):
                    out[i] += c * row[i]
        return out


def gcd_int(a, b):
    from math import gcd

    return gcd(a, b)


class CycNum:
    """An element of Q(zeta_e): integer coordinates in the power basis over
    a single positive denominator, in lowest terms."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den=1):
        # trusted: num integers, den positive, gcd(num..., den) = 1
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def rational(value, e=1):
        return CycField(e).from_rational(value)

    @property
    def coeffs(self):
        """Power-basis coordinates as Fractions (canonical)."""
        return tuple(Fraction(n, self.den) for n in self.num)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self):
        return not any(self.num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            nums = [a + b for a, b in zip(self.num, other.num)]
            if d1 == 1:
                return CycNum(self.field, tuple(nums), 1)
            return self.field.make(nums, d1)
        g = gcd_int(d1, d2)
        m1 = d2 // g
        m2 = d1 // g
        nums = [a * m1 + b * m2 for a, b in zip(self.num, other.num)]
        return self.field.make(nums, d1 * m1)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            nums = [a - b for a, b in zip(self.num, other.num)]
            if d1 == 1:
                return CycNum(self.field, tuple(nums), 1)
            return self.field.make(nums, d1)
        g = gcd_int(d1, d2)
        m1 = d2 // g
        m2 = d1 // g
        nums = [a * m1 - b * m2 for a, b in zip(self.num, other.num)]
        return self.field.make(nums, d1 * m1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.num, other.num
        d = self.field.degree
        if d == 1:
            n = a[0] * b[0]
            den = self.den * other.den
            if den == 1:
                return CycNum(self.field, (n,), 1)
            return self.field.make([n], den)
        if not any(a[1:]):
            c = a[0]
            if not c:
                return self.field.zero
            return self.field.make([c * x for x in b], self.den * other.den)
        if not any(b[1:]):
            c = b[0]
            if not c:
                return self.field.zero
            return self.field.make([c * x for x in a], self.den * other.den)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        den = self.den * other.den
        red = self.field._reduce(conv)
        if den == 1:
            return CycNum(self.field, tuple(red), 1)
        return self.field.make(red, den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            n = self.num[0]
            sign = 1 if n > 0 else -1
            return CycNum(
                self.field,
                (sign * self.den,) + (0,) * (self.field.degree - 1),
                abs(n),
            )
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.field.e)]
        a = [Fraction(c, self.den) for c in self.num]
        s_a, s_b = [Fraction(1)], [Fraction(0)]
        b = modulus
        while True:
            while a and not a[-1]:
                a.pop()
            if len(a) == 1:
                inv = [c / a[0] for c in s_a]
                inv += [Fraction(0)] * (self.field.degree - len(inv))
                return _cyc_from_fractions(self.field, inv)
            # b = q*a + r ; replace (a, b) <- (r, a)
            q = [Fraction(0)] * (len(b) - len(a) + 1)
            r = list(b)
            for k in range(len(q) - 1, -1, -1):
                q[k] = r[k + len(a) - 1] / a[-1]
                if q[k]:
                    for i, ai in enumerate(a):
                        r[k + i] -= q[k] * ai
            r = r[: len(a) - 1]
            # s_r = s_b - q*s_a
            s_r = list(s_b) + [Fraction(0)] * max(0, len(q) + len(s_a) - 1 - len(s_b))
            for k, qk in enumerate(q):
                if qk:
                    for i, si in enumerate(s_a):
                        s_r[k + i] -= qk * si
            a, b = r, a
            s_a, s_b = s_r, s_a

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def conjugate(self):
        """The automorphism zeta -> zeta^(-1) (complex conjugation)."""
        e = self.field.e
        d = self.field.degree
        if d == 1 or not any(self.num[1:]):
            return self
        out = [0] * d
        for i, c in enumerate(self.num):
            if c:
                row = self.field._powers[(e - i) % e]
                for k in range(d):
                    out[k] += c * row[k]
        return CycNum(self.field, tuple(out), self.den)

    # -- embedding into a larger cyclotomic field ---------------------------

    def embed(self, e2):
        """Image under Q(zeta_e) -> Q(zeta_e2), zeta_e -> zeta_e2^(e2/e)."""
        if e2 % self.field.e != 0:
            raise ValueError("no embedding: order does not divide target order")
        target = CycField(e2)
        step = e2 // self.field.e
        out = [0] * target.degree
        for i, c in enumerate(self.num):
            if c:
                row = target._powers[(i * step) % max(e2, 1)]
                for k in range(target.degree):
                    out[k] += c * row[k]
        return target.make(out, self.den)

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (
            self.field is other.field
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.e, self.num, self.den))
        return self._hash

    # -- presentation --------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mon = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{c}*{mon}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"Cyc({self.field.e}: {self})"

    def to_json(self):
        return {"e": self.field.e, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data):
        field = CycField(data["e"])
        coeffs = [Fraction(c) for c in data["coeffs"]]
        if len(coeffs) != field.degree:
            raise ValueError("wrong coefficient count")
        return _cyc_from_fractions(field, coeffs)


def _cyc_from_fractions(field, fracs):
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd_int(den, f.denominator)
    nums = [int(f * den) for f in fracs]
    return field.make(nums, den)


def cyc_make(e, raw):
    """Build an element of Q(zeta_e) from (exponent, rational) pairs.

    Exponents are reduced mod e; the result is in canonical reduced form.
    """
    field = CycField(e)
    out = field.zero
    for exponent, value in raw:
        out = out + field.zeta(exponent % e) * Fraction(value)
    return out


def cyc_inverse(a):
    return a.inverse()


def cyc_conjugate(a):
    return a.conjugate()


# ---------------------------------------------------------------------------
# polynomials in t over a cyclotomic field


class TPoly:
    """Polynomial in t with CycNum coefficients, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs, trusted=False):
        self.field = field
        if trusted:
            self.coeffs = coeffs
        else:
            coeffs = list(coeffs)
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
            self.coeffs = tuple(coeffs)
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(value):
        if not isinstance(value, CycNum):
            raise TypeError("constant expects a CycNum")
        if value.is_zero():
            return TPoly(value.field, (), trusted=True)
        return TPoly(value.field, (value,), trusted=True)

    @staticmethod
    def t_power(field, k, scale=None):
        coeff = field.one if scale is None else scale
        if coeff.is_zero():
            return TPoly(field, (), trusted=True)
        return TPoly(field, tuple([field.zero] * k + [coeff]), trusted=True)

    # -- basics --------------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def eval_zero(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(self.field, out)

    def __neg__(self):
        return TPoly(self.field, tuple(-c for c in self.coeffs), trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TPoly(self.field, (), trusted=True)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    if not bj.is_zero():
                        out[i + j] = out[i + j] + ai * bj
        return TPoly(self.field, out)

    def scale(self, c):
        if c.is_zero():
            return TPoly(self.field, (), trusted=True)
        return TPoly(self.field, tuple(a * c for a in self.coeffs), trusted=True)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q_len = len(rem) - len(other.coeffs) + 1
        if q_len <= 0:
            return TPoly(self.field, (), trusted=True), self
        quot = [self.field.zero] * q_len
        inv_lead = other.leading().inverse()
        for k in range(q_len - 1, -1, -1):
            c = rem[k + other.degree()]
            if c.is_zero():
                continue
            q = c * inv_lead
            quot[k] = q
            for i, oc in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - q * oc
        return TPoly(self.field, quot), TPoly(self.field, rem[: other.degree()])

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        if lead.is_one():
            return self
        inv = lead.inverse()
        return self.scale(inv)

    def gcd(self, other):
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
            b = b.monic() if not b.is_zero() else b
        return a.monic()

    def subst_power(self, k):
        """t -> t^k (k >= 1)."""
        if k == 1 or self.is_zero():
            return self
        zero = self.field.zero
        out = [zero] * (k * self.degree() + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return TPoly(self.field, out)

    def reversed_coeffs(self):
        """t^deg * p(1/t)."""
        return TPoly(self.field, tuple(reversed(self.coeffs)))

    def conjugate(self):
        return TPoly(self.field, tuple(c.conjugate() for c in self.coeffs), trusted=True)

    # -- comparison / presentation -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.e, self.coeffs))
        return self._hash

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mon = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            cs = str(c)
            needs_parens = ("+" in cs[1:]) or ("-" in cs[1:])
            if needs_parens:
                cs = f"({cs})"
            if mon:
                if cs == "1":
                    parts.append(mon)
                elif cs == "-1":
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{cs}*{mon}")
            else:
                parts.append(cs)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"TPoly({self})"


class TRat:
    """Rational function in t: gcd-reduced, monic denominator, canonical."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, reduce=True):
        field = num.field
        if den is None:
            den = TPoly(field, (field.one,), trusted=True)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            if num.is_zero():
                den = TPoly(field, (field.one,), trusted=True)
            else:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
                lead = den.leading()
                if not lead.is_one():
                    inv = lead.inverse()
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_cyc(value):
        return TRat(TPoly.constant(value), reduce=False)

    @staticmethod
    def rational(value, e=1):
        return TRat.from_cyc(CycField(e).from_rational(value))

    @staticmethod
    def t(field, k=1):
        return TRat(TPoly.t_power(field, k), reduce=False)

    @property
    def field(self):
        return self.num.field

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.den.degree() == 0 and self.num.degree() == 0 and self.num.coeffs[0].is_one()

    def is_polynomial(self):
        return self.den.degree() == 0

    def is_constant(self):
        return self.is_polynomial() and self.num.is_constant()

    def to_cyc(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.eval_zero()

    # -- arithmetic ----------------------------------------------------------
    #
    # add/mul keep the reduced invariant with the classical gcd tricks:
    # fractions in lowest terms stay in lowest terms after cross-cancelled
    # products, and sums only need a gcd against gcd(den1, den2).

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        b, d = self.den, other.den
        if b.degree() == 0 and d.degree() == 0:
            return TRat(self.num + other.num, b, reduce=False)
        if b == d:
            return TRat(self.num + other.num, b)
        if b.degree() == 0:
            return TRat(self.num * d + other.num, d, reduce=False)
        if d.degree() == 0:
            return TRat(self.num + other.num * b, b, reduce=False)
        g = b.gcd(d)
        if g.degree() == 0:
            return TRat(self.num * d + other.num * b, b * d, reduce=False)
        b1 = b.divmod(g)[0]
        d1 = d.divmod(g)[0]
        num = self.num * d1 + other.num * b1
        g2 = num.gcd(g)
        if g2.degree() > 0:
            num = num.divmod(g2)[0]
            den = b1 * d1 * g.divmod(g2)[0]
        else:
            den = b1 * d1 * g
        out = TRat(num, den, reduce=False)
        if not den.leading().is_one():
            inv = den.leading().inverse()
            out = TRat(num.scale(inv), den.scale(inv), reduce=False)
        return out

    def __neg__(self):
        return TRat(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return TRat(TPoly(self.field, (), trusted=True), reduce=False)
        a, b = self.num, self.den
        c, d = other.num, other.den
        if b.degree() == 0 and d.degree() == 0:
            return TRat(a * c, b * d, reduce=False).monic_den()
        if b.degree() > 0 and c.degree() > 0:
            g = c.gcd(b)
            if g.degree() > 0:
                c = c.divmod(g)[0]
                b = b.divmod(g)[0]
        if d.degree() > 0 and a.degree() > 0:
            g = a.gcd(d)
            if g.degree() > 0:
                a = a.divmod(g)[0]
                d = d.divmod(g)[0]
        return TRat(a * c, b * d, reduce=False).monic_den()

    def monic_den(self):
        lead = self.den.leading()
        if lead.is_one():
            return self
        inv = lead.inverse()
        return TRat(self.num.scale(inv), self.den.scale(inv), reduce=False)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * TRat(other.den, other.num)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return TRat(self.den, self.num)

    def scale_cyc(self, c):
        """Multiply by a constant; stays reduced, denominator stays monic."""
        if c.is_zero():
            return TRat(TPoly(self.field, (), trusted=True), reduce=False)
        return TRat(self.num.scale(c), self.den, reduce=False)

    def conjugate(self):
        """Conjugate coefficients (zeta -> zeta^(-1)); t is fixed."""
        if self.field.degree <= 1:
            return self
        return TRat(self.num.conjugate(), self.den.conjugate(), reduce=False)

    def subst_tinv(self):
        """The rational function g with g(t) = f(1/t), in canonical form."""
        a, b = self.num.degree(), self.den.degree()
        if a < 0:
            return self
        num = self.num.reversed_coeffs()
        den = self.den.reversed_coeffs()
        field = self.field
        if b >= a:
            num = num * TPoly.t_power(field, b - a)
        else:
            den = den * TPoly.t_power(field, a - b)
        return TRat(num, den)

    def subst_power(self, k):
        """t -> t^k."""
        if k == 1:
            return self
        return TRat(self.num.subst_power(k), self.den.subst_power(k))

    def eval_zero(self):
        """Value at t = 0 (denominator must not vanish there)."""
        d0 = self.den.eval_zero()
        if d0.is_zero():
            raise ZeroDivisionError("pole at t = 0")
        return self.num.eval_zero() / d0

    # -- comparison / presentation -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if "+" in ns[1:] or "-" in ns[1:]:
            ns = f"({ns})"
        if "+" in ds[1:] or "-" in ds[1:]:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"TRat({self})"

    def to_json(self):
        return {
            "num": [c.to_json() for c in self.num.coeffs],
            "den": [c.to_json() for c in self.den.coeffs],
        }

    @staticmethod
    def from_json(data):
        nums = [CycNum.from_json(c) for c in data["num"]]
        dens = [CycNum.from_json(c) for c in data["den"]]
        if not dens:
            raise ZeroDivisionError("zero denominator")
        field = dens[0].field
        return TRat(TPoly(field, nums), TPoly(field, dens))


def trat_normalize(num, den):
    """Canonical rational function num/den (gcd-reduced, monic denominator)."""
    return TRat(num, den)


def trat_subst_tinv(f):
    return f.subst_tinv()


def trat_zero(e=1):
    field = CycField(e)
    return TRat(TPoly(field, (), trusted=True), reduce=False)


def trat_one(e=1):
    return TRat.rational(1, e)
