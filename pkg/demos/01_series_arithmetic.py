"""
Exact truncated power series
============================

Series carry their truncation order. Anything past it is unknown, so
mixing orders keeps the smaller one.
"""

from fractions import Fraction

from krzyz import TruncatedSeries, compose, exp, log

# 1/(1-z) known through z^5
geometric = TruncatedSeries([1], order=5) / TruncatedSeries([1, -1], order=5)
print("1/(1-z)      =", geometric)

# exp and log undo each other exactly on rationals
x = TruncatedSeries([0, Fraction(1, 2), Fraction(-1, 3)], order=6)
print("exp(x)       =", exp(x))
print("log(exp(x))  =", log(exp(x)))
assert log(exp(x)) == x

# composition needs w(0) = 0
w = TruncatedSeries([0, 1, 1], order=6)
print("exp(z + z^2) =", compose(exp(TruncatedSeries([0, 1], order=6)), w))

# a lower-order operand caps the result
short = TruncatedSeries([1, 1], order=2)
print("order of (geometric * short):", (geometric * short).order)
