"""Torsion period assignments and their canonical forms.

Run as: python3 demos/period_points.py
"""

from fractions import Fraction

from delpezzo import (
    ConstraintError,
    TorsionPoint,
    evaluate,
    make_marked_lattice,
    make_period,
    restrict_to_coroots,
    weyl_canonicalize,
)

M = make_marked_lattice(6)
zero = TorsionPoint.zero()

# images must satisfy 3*pi(h) = pi(e1) + ... + pi(e6) in (Q/Z)^2
half = TorsionPoint(Fraction(1, 2), Fraction(0))
try:
    make_period([zero, half, zero, zero, zero, zero, zero])
except ConstraintError as exc:
    print("rejected:", exc)

period = make_period([zero, half, zero, zero, zero, zero, half])
print("\naccepted: pi(e1) = pi(e6) =", half)
print("pi(kappa) =", evaluate(period, M.kappa))

values = restrict_to_coroots(period, M)
print("values on the simple coroots:", [str(p) for p in values])

canonical = weyl_canonicalize(period, M)
print("canonical coroot values:    ", [str(p) for p in canonical])

# a 6-torsion assignment: pi(h) = 2/6 and every pi(e_i) = 1/6
sixth = TorsionPoint.parse("1/6,0")
skew = make_period([sixth * 2] + [sixth] * 6)
print("\nanother period, coroot values:",
      [str(p) for p in restrict_to_coroots(skew, M)])
print("canonical form:             ",
      [str(p) for p in weyl_canonicalize(skew, M)])
