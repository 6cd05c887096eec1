"""
Split octonions over an exact field
===================================

Octonions here are 8-tuples of exact scalars in Q(zeta_24), written in a
Cartan basis e1, e2, u1, u2, u3, v1, v2, v3. Nothing is rounded.
"""

from exjordan.exactfield import I, SQRT2, Scalar
from exjordan.octonion import Octonion, basis

# The two idempotents add up to the unit and multiply to zero.
e1, e2 = basis("e1"), basis("e2")
print("e1 + e2 == 1:", e1 + e2 == Octonion.one())
print("e1 e2 == 0:  ", (e1 * e2).is_zero())

# The norm is multiplicative, including on zero divisors.
x = basis("u1") + basis("v1").scale(SQRT2)
y = e1.scale(I) + basis("u2")
print("n(x) =", x.norm(), " n(y) =", y.norm(), " n(xy) =", (x * y).norm())

# Alternativity: (xx)y = x(xy), even though the product is not associative.
z = basis("v3") + basis("u1")
print("(xy)z - x(yz) =", (x * y) * z - x * (y * z))
print("(xx)y - x(xy) =", (x * x) * y - x * (x * y))

# x times its conjugate is the norm times the unit.
print("x conj(x) == n(x) 1:", x * x.conj() == Octonion.one().scale(x.norm()))
print("a scalar:", Scalar.of(3) * SQRT2 * SQRT2)
