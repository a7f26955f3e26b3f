"""
Exact arithmetic in the coefficient field Q(q)
==============================================

Every computation in this package happens over the field of rational
functions in the deformation parameter q, with integer fractions as
scalars.  Nothing is floating point; equalities in the test suite are
exact identities of rational functions.
"""

from fractions import Fraction

from glq.coeff import ONE, Q, QINV, RatFunc, q_int

# q and its inverse are the basic building blocks.
print("q          =", Q)
print("q^-1       =", QINV)
print("q * q^-1   =", Q * QINV)

# q_int(k) is the Laurent monomial q^k; sums build honest polynomials.
bracket2 = Q + QINV
print("q + q^-1   =", bracket2)

# The quantum integer [3] = q^2 + 1 + q^-2 arises as a ratio:
# (q^3 - q^-3) / (q - q^-1).  Division stays exact.
num = q_int(3) - q_int(-3)
den = Q - QINV
print("[3]        =", num * den.inverse())

# Rational functions compare exactly: the two sides of the
# q-binomial identity [3] = [2]^2 - 1 agree as field elements.
lhs = num * den.inverse()
rhs = bracket2 * bracket2 - ONE
print("[2]^2 - 1  =", rhs, "   equal:", lhs == rhs)

# Specialization substitutes an exact fraction for q.  At q = 3/2 the
# quantum integer [3] becomes a fraction, not a float.
val = lhs.specialize(Fraction(3, 2))
print("[3] at q=3/2 =", val, "  (exactly", val.numerator, "/",
      val.denominator, ")")

# Zero tests are decisive: a difference of equal expressions is the
# actual zero of the field, so identity checking never needs a
# tolerance.
print("exact zero:", (lhs - rhs) == RatFunc.from_int(0))
