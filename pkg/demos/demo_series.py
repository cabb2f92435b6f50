"""The universal power series and their functional equations.

Three series drive everything in this toolkit, all with Bernoulli-number
coefficients and all computed exactly over the rationals:

    p_c(t) = t*coth(t/c)          even, constant term c
    q_c(t) = -tanh(t/(2c))        odd
    w_c(t) = log(sinh(t/c)/(t/c)) even, no constant term

This script prints them, verifies the functional equations that
characterize them (to a chosen order, coefficient by coefficient), and
shows that perturbing a single coefficient breaks the equations, which is
the uniqueness statement in computational form.
"""

from fractions import Fraction

from supersym import series

ORDER = 12

print("Bernoulli numbers b_0 .. b_12:")
print("  ", [str(series.bernoulli(n)) for n in range(13)])
print()

for c in (Fraction(1), Fraction(2), Fraction(1, 3)):
    print(f"c = {c}:")
    print("  p_c =", series.p_c(c, 8))
    print("  q_c =", series.q_c(c, 7))
    print("  w_c =", series.w_c(c, 8))
print()

print(f"Functional equations for (p_c, -t), checked to total order {ORDER}:")
d = series.TruncatedSeries1([0, -1], ORDER + 1)
for c in (Fraction(1), Fraction(2), Fraction(1, 3)):
    residuals = series.check_symmetric_equations(series.p_c(c, ORDER + 1), d, ORDER)
    status = "all zero" if all(r.is_zero() for r in residuals) else "NONZERO"
    print(f"  c = {c}: residuals {status}")

print(f"Coinduced equations for (1, q_c), checked to total order {ORDER}:")
one = series.TruncatedSeries1.constant(1, ORDER + 1)
for c in (Fraction(1), Fraction(2)):
    residuals = series.check_coinduced_equations(one, series.q_c(c, ORDER + 1), c, ORDER)
    status = "all zero" if all(r.is_zero() for r in residuals) else "NONZERO"
    print(f"  c = {c}: residuals {status}")
print()

print("Uniqueness: adding 1/7 to the t^2 coefficient of p_1 ...")
p = series.p_c(1, ORDER + 1)
coeffs = list(p.coefficients)
coeffs[2] += Fraction(1, 7)
bad = series.TruncatedSeries1(coeffs, ORDER + 1)
residuals = series.check_symmetric_equations(bad, d, ORDER)
nonzero = [i + 1 for i, r in enumerate(residuals) if not r.is_zero()]
print(f"  residual(s) {nonzero} become nonzero, as they must.")
print()

print("Two classical identities behind the Jacobian formulas:")
print("  p(0) w'(t) = (p(t) - p(0))/t for p = t/(e^t - 1), w = log((1-e^-t)/t):",
      "holds" if series.exp_jacobian_identity_residual(ORDER).is_zero() else "FAILS")
print("  q_c(2t) = (p_c(t) - p_c(2t))/t  (tanh + coth = 2 coth(2t)):",
      "holds" if series.tanh_coth_identity_residual(1, ORDER).is_zero() else "FAILS")
