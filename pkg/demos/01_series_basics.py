"""Truncated power series over ℚ[λ][x].

Run with ``python demos/01_series_basics.py``.
"""

from degenpoly import BiPoly, Series, degenerate_exp, degenerate_log, format_poly

# e_λ^x(t) keeps both λ and x symbolic; coefficients are stored plainly
e = degenerate_exp(4)
for n in range(5):
    print(f"(x)_{n},λ =", format_poly(e.egf_coefficient(n)))

# log_λ(1 + t) undoes e_λ(t) - 1 exactly, through the truncation order
t = Series.t(6)
em1 = degenerate_exp(6, 1) - 1
print("log_λ(1 + (e_λ(t) - 1)) == t:", degenerate_log(6)(em1) == t)

# λ → 0 recovers the ordinary exponential: coefficients xⁿ/n!
print("λ = 0:", [format_poly(c) for c in e.eval_lambda(0).coeffs])

# division needs a rational constant term
one_plus_t = Series((1, 1), 4)
sech_like = 2 / (one_plus_t + 1 / one_plus_t)
print("2/((1+t) + (1+t)^-1) =", [format_poly(c) for c in sech_like.coeffs])

# shifts in x are substitutions, not samples
p = e.egf_coefficient(3)
print("(x+1)_3,λ =", format_poly(p.shift_x(1)))
print("times x:", format_poly(p * BiPoly.x()))
