"""Audit the corollary identities and show where the printed forms crack.

Setting x = 1 in the connection formulas produces weighted Fibonacci-number
sums with closed values; evaluating at Gaussian points, at (x + 1/x)/2, or
after q-fold differentiation produces more.  All of them are decidable in
exact arithmetic, and three of the printed forms turn out to need a fix:

  * the first-kind weighted sum is printed without its parent factor j,
  * the hypergeometric chain's 4/5-argument member carries prefactor 1/2^j
    where equality with its stated head requires 1/(j+1),
  * the second-kind derivative formula drops a rising factorial and only
    survives q = 1.

Each audit reports the verbatim residual next to the corrected one, so the
finding is reproducible rather than silently repaired.
"""

from fractions import Fraction

from fibcheb import (
    verify_2f1_chain,
    verify_complex_identities,
    verify_cor_sum_T,
    verify_cor_sum_U,
    verify_derivative_corollaries,
    verify_laurent_identity,
)

print("Weighted sums at x = 1")
print("----------------------")
for j in (1, 2, 5, 12):
    t = verify_cor_sum_T(j)
    u = verify_cor_sum_U(j)
    print(
        f"j={j:>2}:  second-kind sum = {u.lhs} (= j+1, {u.status.value});  "
        f"first-kind verbatim residual = {t.printed_residual}, "
        f"with factor j restored = residual {t.corrected_residual} ({t.status.value})"
    )
print()

print("The six-way hypergeometric chain")
print("--------------------------------")
for j in (1, 2, 6):
    chain = verify_2f1_chain(j)
    values = {c.name: str(c.lhs) for c in chain.checks}
    print(f"j={j}: members {values} -> {chain.status.value}")
    if chain.note:
        print(f"      {chain.note}")
print()

print("Gaussian and Laurent evaluations")
print("--------------------------------")
print("complex identities n=3:", verify_complex_identities(3).status.value)
laurent = verify_laurent_identity(2, Fraction(2))
print(f"F_3 at (2 + 1/2)/2: both sides = {laurent.lhs} ({laurent.status.value})")
print()

print("Derivative sequences")
print("--------------------")
for j, q in ((2, 1), (2, 2), (6, 3)):
    report = verify_derivative_corollaries(j, q)
    line = f"(j={j}, q={q}): {report.status.value}"
    if report.printed_residual != 0:
        line += (
            f"  second-kind form verbatim residual {report.printed_residual}, "
            f"corrected residual {report.corrected_residual}"
        )
    print(line)
