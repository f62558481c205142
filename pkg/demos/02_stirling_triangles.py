"""Degenerate Stirling and Jindalrae-Stirling triangles."""

from degenpoly import (
    format_poly,
    jindalrae1,
    jindalrae2,
    stirling1_deg,
    stirling2_deg,
    stirling_connection_oracle,
)

NMAX = 5

for name, build in [("S1", stirling1_deg), ("S2", stirling2_deg), ("SJ1", jindalrae1), ("SJ2", jindalrae2)]:
    tri = build(NMAX)
    print(f"{name}, row {NMAX}:")
    for k in range(NMAX + 1):
        print(f"  ({NMAX},{k}) = {format_poly(tri[NMAX, k])}")

# the generating-function route and the basis-change route agree
print("S1 routes agree:", stirling1_deg(8) == stirling_connection_oracle(8, "first"))
print("S2 routes agree:", stirling2_deg(8) == stirling_connection_oracle(8, "second"))

# classical numbers at λ = 0, identity matrix at λ = 1
s1_0 = stirling1_deg(NMAX).eval_lambda(0)
print("signed s(5, k):", [format_poly(s1_0[NMAX, k]) for k in range(NMAX + 1)])
print("S2 at λ = 1 is the identity:", all(
    (v == 1) == (n == k) for n, k, v in stirling2_deg(NMAX).eval_lambda(1).entries()
))
