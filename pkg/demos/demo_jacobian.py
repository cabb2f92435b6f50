"""Jacobians of exponential maps, computed exactly.

Two settings:

* a symmetric pair g = h + q, where the Jacobian of the exponential map
  from q to the homogeneous superspace is J_1 = Ber_q(sinh(ad y)/ad y)
  for the generic point y of q;

* a whole formal supergroup (h = 0), where the Jacobian in the left
  invariant frame is Ber((1 - exp(-ad x))/ad x).

Both reduce to exp(str(w(ad y))) for the right logarithm series w, which
is how the toolkit computes them; an independent block-Berezinian route
cross-checks the answer.
"""

from fractions import Fraction

from supersym import jacobian, liealg, series

print("Symmetric-pair Jacobian on osp(1|2):")
alg, pair = liealg.catalog("osp12")
gp = jacobian.GenericPoint(pair)
for c in (Fraction(1), Fraction(2)):
    result = jacobian.jacobian_Jc(gp, c)
    print(f"  J_{c} =", result.J)
r = jacobian.sh_over_t_scaled(1, 4)
print("  block-Berezinian route for c = 1:", jacobian.jacobian_via_berezinian(gp, r))
print()

print("Degree-by-degree supertraces on a larger odd part (gl(1|1)):")
alg2, pair2 = liealg.catalog("gl11")
gp2 = jacobian.GenericPoint(pair2)
for k, s in jacobian.jacobian_Jc(gp2, 1).str_powers:
    print(f"  str_q((ad y)^{k}) =", s)
print("  J_1 =", jacobian.jacobian_Jc(gp2, 1).J, " (the supertraces vanish here)")
print()

print("Full-group Jacobian of the solvable algebra [x, y] = y, order 6:")
alg3, _ = liealg.catalog("solvable2")
J = jacobian.jacobian_full_group(alg3, 6)
print("  J =", J)
print("  (the series of (1 - e^{-t})/t evaluated on the nonzero eigenvalue)")
print()

print("Divergence identity, two independent routes, on gl(1|1):")
p = series.p_c(1, 12)
residuals = [
    jacobian.divergence_check(alg2, p, a, order=4) for a in range(alg2.dim)
]
print("  residuals all zero:", all(r.is_zero() for r in residuals))

print("Key identity behind the main Jacobian formula, on osp(1|2):")
ok = all(
    jacobian.key_identity_check(gp, c, a).is_zero()
    for c in (Fraction(1), Fraction(2))
    for a in range(alg.dim)
)
print("  residuals all zero:", ok)
