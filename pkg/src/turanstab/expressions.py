"""Turan-type expressions built exactly from polynomial sequences.

The k-th Turan expression of a sequence P is (P_{k+1})^2 - P_{k+2} P_k,
the negated 2x2 Hankel determinant.  The order-n extended form is the
alternating binomial convolution

    sum_{j=0}^{2n} (-1)^(n+j) / (2n)!  C(2n, j)  P_{j+k}  P_{2n+k-j},

which collapses to the plain Turan expression at n = 1.  The single-
function analogue over derivatives is the extended Laguerre expression;
its n = 1 case is the classical f'^2 - f f''.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polycore import Poly, Scalar


def turan(seq: list[Poly], k: int) -> Poly:
    """(P_{k+1})^2 - P_{k+2} * P_k, exactly."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(seq) < k + 3:
        raise ValueError(f"sequence must reach index {k + 2}")
    return seq[k + 1] * seq[k + 1] - seq[k + 2] * seq[k]


def extended_turan(seq: list[Poly], k: int, n: int) -> Poly:
    """Order-n extended Turan expression at index k.

    The j and 2n-j terms of the sum are equal, so the sum is folded; the
    unfolded form is kept around in the tests as a consistency oracle.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(seq) < 2 * n + k + 1:
        raise ValueError(f"sequence must reach index {2 * n + k}")
    total = Poly()
    for j in range(n):
        term = (seq[j + k] * seq[2 * n + k - j]).scale(2 * math.comb(2 * n, j))
        total = total + term if (n + j) % 2 == 0 else total - term
    middle = (seq[n + k] * seq[n + k]).scale(math.comb(2 * n, n))
    total = total + middle
    return total.scale(Fraction(1, math.factorial(2 * n)))


def extended_turan_unfolded(seq: list[Poly], k: int, n: int) -> Poly:
    """Literal term-by-term form of the extended Turan sum (test oracle)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(seq) < 2 * n + k + 1:
        raise ValueError(f"sequence must reach index {2 * n + k}")
    total = Poly()
    for j in range(2 * n + 1):
        term = (seq[j + k] * seq[2 * n + k - j]).scale(
            Fraction((-1) ** (n + j) * math.comb(2 * n, j), math.factorial(2 * n))
        )
        total = total + term
    return total


def extended_laguerre(f: Poly, n: int) -> Poly:
    """Order-n extended Laguerre expression of a single polynomial.

    n = 0 gives f^2; n = 1 gives f'^2 - f f''; once 2n exceeds deg(f) every
    derivative product vanishes and the result is the zero polynomial.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    if n < 0:
        raise ValueError("n must be >= 0")
    derivs = [f]
    for _ in range(2 * n):
        derivs.append(derivs[-1].derivative())
    total = Poly()
    for j in range(2 * n + 1):
        term = (derivs[j] * derivs[2 * n - j]).scale(
            Fraction((-1) ** (n + j) * math.comb(2 * n, j), math.factorial(2 * n))
        )
        total = total + term
    return total


def wronskian(f: Poly) -> Poly:
    """f'^2 - f'' f, the classical Laguerre expression of f."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    d = f.derivative()
    return d * d - f.derivative().derivative() * f


def fisk_expression(f: Poly, a: Scalar, b: Scalar, c: Scalar) -> Poly:
    """a*f^2 + b*f*f' + c*x*(f*f'' - f'^2), expanded exactly."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    d1 = f.derivative()
    d2 = d1.derivative()
    return (
        (f * f).scale(a)
        + (f * d1).scale(b)
        + (f * d2 - d1 * d1).shift_x(1).scale(c)
    )


def derivative_sequence(f: Poly) -> list[Poly]:
    """[D^d f, ..., D f, f] for deg(f) = d; element i has degree i.

    Feeding this into ``turan`` at index d - 2 reproduces the classical
    Laguerre expression f'^2 - f f'' (index pinned by a symbolic test).
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    seq = [f]
    for _ in range(f.degree()):
        seq.append(seq[-1].derivative())
    seq.reverse()
    return seq


# -- request plumbing --------------------------------------------------

KINDS = ("turan", "extended_turan", "extended_laguerre", "wronskian")


@dataclass(frozen=True)
class ExprRequest:
    """What to build: an expression kind plus post-construction reflect/shift.

    ``reflect`` applies x -> -x to the finished expression; ``shift`` then
    applies x -> x + shift.  For the single-function kinds (wronskian,
    extended_laguerre) the source is the sequence member at index k.
    """

    kind: str
    k: int
    n: int = 1
    reflect: bool = False
    shift: Fraction = Fraction(0)

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown expression kind {self.kind!r}")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.kind == "extended_turan" and self.n < 1:
            raise ValueError("extended_turan needs n >= 1")
        if self.kind == "extended_laguerre" and self.n < 0:
            raise ValueError("extended_laguerre needs n >= 0")


def build_expression(req: ExprRequest, seq: list[Poly]) -> Poly:
    """Construct the requested expression and apply reflect/shift."""
    req.validate()
    if req.kind == "turan":
        expr = turan(seq, req.k)
    elif req.kind == "extended_turan":
        expr = extended_turan(seq, req.k, req.n)
    elif req.kind == "extended_laguerre":
        expr = extended_laguerre(seq[req.k], req.n)
    else:
        expr = wronskian(seq[req.k])
    if req.reflect:
        expr = expr.compose_linear(-1, 0)
    if req.shift:
        expr = expr.compose_linear(1, Fraction(req.shift))
    return expr
