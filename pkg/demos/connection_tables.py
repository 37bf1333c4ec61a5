"""Walk through the connection coefficients between the two families.

Every Chebyshev polynomial is an integer combination of Fibonacci
polynomials, and every Fibonacci polynomial is a positive rational
combination of Chebyshev polynomials; the coefficients are values of
terminating Gauss series.  This script builds a few expansions from the
closed forms, reconstructs the source polynomials from them, and shows the
triangular-elimination oracle recovering the same numbers with no
hypergeometric machinery at all.
"""

from fibcheb import Direction, chebyshev_t, expand, fibonacci_poly, oracle_expand

print("A Chebyshev polynomial in the Fibonacci basis")
print("---------------------------------------------")
for j in (2, 3, 4):
    expansion = expand(j, Direction.T_IN_F)
    pieces = " + ".join(
        f"({term.coefficient}) F_{term.target_index}" for term in expansion.terms
    )
    print(f"T_{j} = {pieces}")
    assert expansion.reconstruct() == chebyshev_t(j)
print("reconstruction is exact (coefficient-wise polynomial equality)")
print()

print("A Fibonacci polynomial in both Chebyshev bases")
print("----------------------------------------------")
for direction, label in ((Direction.F_IN_T, "T"), (Direction.F_IN_U, "U")):
    expansion = expand(5, direction)
    pieces = " + ".join(
        f"({term.coefficient}) {label}_{term.target_index}" for term in expansion.terms
    )
    print(f"F_6 = {pieces}")
    assert expansion.reconstruct() == fibonacci_poly(6)
print("note: every coefficient in these expansions is strictly positive")
print()

print("Independent oracle: leading-term elimination")
print("--------------------------------------------")
source = chebyshev_t(6)
print(f"T_6 = {source}")
closed_form = expand(6, Direction.T_IN_F).coefficients_by_index()
eliminated = {i: c for i, c in oracle_expand(source, Direction.T_IN_F.target_basis) if c != 0}
print("closed-form coefficients:", {i: str(c) for i, c in sorted(closed_form.items())})
print("elimination coefficients:", {i: str(c) for i, c in sorted(eliminated.items())})
assert closed_form == eliminated
print("the two routes agree term by term")
