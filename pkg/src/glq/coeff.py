"""Exact arithmetic over the field Q(q) of rational functions in one variable.

Elements are manipulated as ratios of Laurent polynomials in q with rational
coefficients.  Every value is kept in a canonical reduced form so that
structural equality coincides with mathematical equality:

  * the denominator is an ordinary polynomial in q (lowest exponent 0) with
    a nonzero constant term, and it is monic;
  * numerator and denominator share no polynomial factor;
  * all unit factors (rational scalars and powers of q) live in the numerator.

Specialisation substitutes an exact rational number for q, so no floating
point enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LaurentPoly:
    """A Laurent polynomial sum_e c_e q^e with Fraction coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        # coeffs: dict exponent -> nonzero Fraction.  Trusted by internal
        # callers; use the constructors below from outside.
        self.coeffs = coeffs or {}
        self._hash = None

    @staticmethod
    def from_dict(d):
        return LaurentPoly({e: Fraction(c) for e, c in d.items() if c})

    @staticmethod
    def from_int(n):
        n = Fraction(n)
        return LaurentPoly({0: n} if n else {})

    @staticmethod
    def q_power(e, coeff=1):
        coeff = Fraction(coeff)
        return LaurentPoly({e: coeff} if coeff else {})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    def scale(self, r):
        r = Fraction(r)
        if not r:
            return LaurentPoly()
        return LaurentPoly({e: c * r for e, c in self.coeffs.items()})

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    @property
    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def is_monomial(self):
        return len(self.coeffs) == 1

    def is_constant(self):
        return not self.coeffs or set(self.coeffs) == {0}

    def evaluate(self, q0):
        """Exact value at q = q0 (a nonzero Fraction)."""
        q0 = Fraction(q0)
        total = _ZERO
        for e, c in self.coeffs.items():
            total += c * q0 ** e
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                term = str(c)
            else:
                base = "q" if e == 1 else "q^%d" % e
                if c == 1:
                    term = base
                elif c == -1:
                    term = "-" + base
                else:
                    term = "%s*%s" % (c, base)
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    __repr__ = __str__


def _to_list(p):
    """Coefficient list of a Laurent polynomial with min_exp == 0."""
    n = p.max_exp
    out = [_ZERO] * (n + 1)
    for e, c in p.coeffs.items():
        out[e] = c
    return out


def _from_list(lst):
    return LaurentPoly({e: c for e, c in enumerate(lst) if c})


def _list_divmod(num, den):
    num = list(num)
    dn = len(den) - 1
    lead = den[dn]
    quot = [_ZERO] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if not c:
            continue
        f = c / lead
        quot[i - dn] = f
        for j, d in enumerate(den):
            num[i - dn + j] -= f * d
    while num and not num[-1]:
        num.pop()
    return quot, num


def _list_gcd(a, b):
    """Monic gcd of two coefficient lists over Q."""
    a = list(a)
    b = list(b)
    while b:
        _, r = _list_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    if lead != 1:
        a = [c / lead for c in a]
    return a


class RatFunc:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _reduced=False):
        if _reduced:
            self.num = num
            self.den = den
            self._hash = None
            return
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not num:
            self.num = LaurentPoly()
            self.den = LaurentPoly({0: _ONE})
            self._hash = None
            return
        shift_n = num.min_exp
        shift_d = den.min_exp
        net = shift_n - shift_d
        nl = _to_list(num.shift(-shift_n))
        dl = _to_list(den.shift(-shift_d))
        if len(dl) > 1:
            g = _list_gcd(nl, dl)
            if len(g) > 1:
                nl, _ = _list_divmod(nl, g)
                dl, _ = _list_divmod(dl, g)
        lead = dl[-1]
        if lead != 1:
            nl = [c / lead for c in nl]
            dl = [c / lead for c in dl]
        self.num = _from_list(nl).shift(net)
        self.den = _from_list(dl)
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_int(n):
        return RatFunc(LaurentPoly.from_int(n), LaurentPoly.from_int(1))

    @staticmethod
    def from_fraction(r):
        r = Fraction(r)
        return RatFunc(LaurentPoly.from_int(r), LaurentPoly.from_int(1))

    @staticmethod
    def q_power(e, coeff=1):
        """coeff * q^e."""
        return RatFunc(LaurentPoly.q_power(e, coeff), LaurentPoly.from_int(1))

    @staticmethod
    def from_poly(p):
        return RatFunc(p, LaurentPoly.from_int(1))

    # -- structure ------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def is_polynomial(self):
        return self.den.is_constant()

    def is_monomial(self):
        return self.den.is_constant() and self.num.is_monomial()

    # -- arithmetic -----------------------------------------------------

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverting zero in Q(q)")
        return RatFunc(self.den, self.num)

    def scale(self, r):
        return RatFunc(self.num.scale(r), self.den, _reduced=True) \
            if Fraction(r) else ZERO

    # -- specialisation --------------------------------------------------

    def evaluate(self, q0):
        """Exact value at q = q0; raises ZeroDivisionError on a pole."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ValueError("q = 0 is outside the domain")
        d = self.den.evaluate(q0)
        if d == 0:
            raise ZeroDivisionError("pole at q = %s" % q0)
        return self.num.evaluate(q0) / d

    def specialize(self, q0):
        """Evaluate at a rational q0 with q0 not in {0, 1}."""
        q0 = Fraction(q0)
        if q0 in (0, 1):
            raise ValueError("specialisation point q0 = %s is rejected" % q0)
        return self.evaluate(q0)

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        ns = str(self.num)
        if len(self.num.coeffs) > 1:
            ns = "(%s)" % ns
        return "%s / (%s)" % (ns, self.den)

    __repr__ = __str__


ZERO = RatFunc.from_int(0)
ONE = RatFunc.from_int(1)
Q = RatFunc.q_power(1)
QINV = RatFunc.q_power(-1)


def q_int(e):
    """The monomial q^e."""
    return RatFunc.q_power(e)


def sign_pow(k):
    """(-1)^k as a RatFunc."""
    return ONE if k % 2 == 0 else -ONE
