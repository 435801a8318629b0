"""A tour of Turan-type expressions over the classical families.

Builds the plain and extended Turan expressions of several polynomial
sequences and shows the exact closed forms the Chebyshev families
collapse to.  Run as: python3 demos/01_turan_expressions_tour.py
"""

from fractions import Fraction
from math import factorial

from turanstab import Poly, extended_turan, turan
from turanstab.sequences import bell, chebyshev_t, chebyshev_u, hermite


def main() -> None:
    print("== Bell polynomials ==")
    seq = bell(8)
    for k in range(4):
        print(f"  P_{k} = {seq[k].pretty()}")
    print("Turan expressions (P_{k+1})^2 - P_{k+2} P_k:")
    for k in range(4):
        print(f"  T_{k} = {turan(seq, k).pretty()}")
    print("Every coefficient is exact; note the uniform negative signs —")
    print("after reflecting x -> -x these are weakly Hurwitz stable.")

    print("\n== Hermite polynomials ==")
    seq = hermite(8)
    for k in range(4):
        print(f"  T_{k} = {turan(seq, k).pretty()}")
    print("All coefficients positive: the classical Turan inequality.")

    print("\n== Chebyshev collapse ==")
    t_seq, u_seq = chebyshev_t(16), chebyshev_u(16)
    base = Poly([1, 0, -1])  # 1 - x^2
    for n in (1, 2, 3):
        scale = Fraction(1 << (2 * n - 1), factorial(2 * n))
        got_t = extended_turan(t_seq, 5, n)
        got_u = extended_turan(u_seq, 5, n)
        assert got_t == base ** n * scale
        assert got_u == base ** (n - 1) * scale
        print(f"  n={n}: first kind  -> {got_t.pretty()}")
        print(f"       second kind -> {got_u.pretty()}")
    print("The extended expressions are independent of k — a rigidity")
    print("that makes the Chebyshev families the exactly-solvable case.")


if __name__ == "__main__":
    main()
