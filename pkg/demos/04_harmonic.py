"""Degenerate harmonic numbers and polynomials, two ways each."""

from degenpoly import format_poly, generalized_harmonic_deg, harmonic_numbers_deg, harmonic_poly_deg

h = harmonic_numbers_deg(6)
for n in range(1, 7):
    print(f"H_{n},λ = {format_poly(h[n])}    (λ=0: {h[n].eval(0)})")

for r in range(3):
    ogf = harmonic_poly_deg(r, 5, "ogf")
    explicit = harmonic_poly_deg(r, 5, "explicit")
    print(f"order {r}: ogf == explicit ->", ogf.values == explicit.values)
    print("   H_5 =", format_poly(ogf[5]))

g = generalized_harmonic_deg(2, 3)
print("H_λ(n+3, 2):", [format_poly(v) for v in g])
