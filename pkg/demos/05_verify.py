"""Run every identity check, then show what a failure looks like."""

from degenpoly import harness, run_all, stirling1_deg

for report in run_all(nmax=8, rmax=3, seed=1):
    print(report)

s1 = stirling1_deg(6)
tampered = s1.with_entry(3, 1, s1[3, 1] + 1)
print(harness.check_orthogonality(6, s1=tampered))
