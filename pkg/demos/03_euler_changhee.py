"""Type 2 degenerate Euler and type 2 Changhee polynomials, and how they relate."""

from degenpoly import BiPoly, format_poly, stirling1_deg, type2_changhee, type2_euler_deg

r, nmax = 2, 4
euler = type2_euler_deg(r, nmax)
changhee = type2_changhee(r, nmax)
for n in range(nmax + 1):
    print(f"n={n}  E = {format_poly(euler[n])}")
    print(f"      C = {format_poly(changhee[n])}")

# Changhee polynomials come out of the Euler ones through S1
s1 = stirling1_deg(nmax)
for n in range(nmax + 1):
    rhs = sum((euler[k] * s1[n, k] for k in range(n + 1)), BiPoly())
    print(f"n={n}: sum_k E_k S1(n,k) == C_n ->", rhs == changhee[n])

# x = 0 gives the numbers; at λ = 0 the odd ones vanish
print("Euler numbers at λ = 0:", [format_poly(v.eval(0)) for v in euler.numbers()])
