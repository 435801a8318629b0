"""Family generators, recurrence operators and the polar relations."""

from fractions import Fraction as F

import pytest

from turanstab import stability
from turanstab.polycore import Poly
from turanstab.sequences import (
    POLAR_SCALED,
    POLAR_UNIT,
    apply_polar_down,
    apply_type_a,
    apply_type_h,
    bell,
    bessel,
    chebyshev_t,
    chebyshev_u,
    generate,
    hermite,
    jensen,
    laguerre,
    legendre,
    spec,
    type_a,
    type_h,
    verify_relation,
)


def P(*coeffs):
    return Poly(coeffs)


class TestNamedFamilies:
    def test_bell(self):
        # hand-applied recurrence B_{k+1} = x(B_k + B_k') from B_0 = 1
        assert bell(4) == [
            P(1),
            P(0, 1),
            P(0, 1, 1),
            P(0, 1, 3, 1),
            P(0, 1, 7, 6, 1),
        ]

    def test_hermite(self):
        assert hermite(3) == [P(1), P(0, 2), P(-2, 0, 4), P(0, -12, 0, 8)]

    def test_chebyshev_t(self):
        assert chebyshev_t(3) == [P(1), P(0, 1), P(-1, 0, 2), P(0, -3, 0, 4)]

    def test_chebyshev_u(self):
        assert chebyshev_u(3) == [P(1), P(0, 2), P(-1, 0, 4), P(0, -4, 0, 8)]

    def test_bessel(self):
        assert bessel(2) == [P(1), P(1, 1), P(1, 3, 3)]

    def test_laguerre(self):
        assert laguerre(2) == [P(1), P(1, -1), P(1, -2, F(1, 2))]

    def test_legendre(self):
        assert legendre(3) == [
            P(1),
            P(0, 1),
            P(F(-1, 2), 0, F(3, 2)),
            P(0, F(-3, 2), 0, F(5, 2)),
        ]

    def test_jensen_all_ones(self):
        # gamma == 1 gives the binomial expansions (1+x)^n
        assert jensen([1, 1, 1], 2) == [P(1), P(1, 1), P(1, 2, 1)]

    def test_degree_contract(self):
        for seq in (bell(12), hermite(12), chebyshev_t(12), chebyshev_u(12),
                    laguerre(12), legendre(12), bessel(12)):
            for k, p in enumerate(seq):
                assert p.degree() == k

    def test_jensen_degree_drops_with_vanishing_gamma(self):
        seq = jensen([1, 1, 0], 2)
        assert seq[2].degree() == 1


class TestOperators:
    def test_type_a_bell_step(self):
        assert apply_type_a(P(1), 1, 0, 1) == P(0, 1)
        assert apply_type_a(P(0, 1), 1, 0, 1) == P(0, 1, 1)

    def test_type_a_general(self):
        assert apply_type_a(P(1), 2, 1, 3) == P(6, 6)

    def test_type_a_rejects_zero_a(self):
        with pytest.raises(ValueError):
            apply_type_a(P(1), 0, 0, 1)

    def test_type_h_hermite_steps(self):
        assert apply_type_h(P(1), 2, 0, -1) == P(0, 2)
        assert apply_type_h(P(0, 2), 2, 0, -1) == P(-2, 0, 4)

    def test_type_h_general(self):
        assert apply_type_h(P(1), 1, 1, 1) == P(1, -1)

    def test_type_h_rejects_bad_params(self):
        with pytest.raises(ValueError):
            apply_type_h(P(1), -1, 0, 1)
        with pytest.raises(ValueError):
            apply_type_h(P(1), 1, 0, 0)

    def test_polar_down_annihilates_monomial(self):
        assert apply_polar_down(P(0, 0, 1), 2).is_zero

    def test_polar_down_values(self):
        assert apply_polar_down(P(1, 2, 1), 2) == P(-2, -2)
        assert apply_polar_down(P(1, 1), 1) == P(-1)

    def test_polar_down_degree_mismatch(self):
        with pytest.raises(ValueError):
            apply_polar_down(P(1, 1), 2)


class TestRelations:
    def test_laguerre_polar_scaled(self):
        assert verify_relation(laguerre(6), POLAR_SCALED)

    def test_jensen_binomial_polar_scaled(self):
        assert verify_relation(jensen([1] * 7, 6), POLAR_SCALED)

    def test_bell_fails_polar_unit(self):
        assert not verify_relation(bell(3), POLAR_UNIT)

    def test_unknown_relation(self):
        with pytest.raises(ValueError):
            verify_relation(bell(3), "nope")


class TestSpec:
    def test_generate_dispatch(self):
        assert generate(spec("bell"), 2) == bell(2)
        assert generate(spec("jensen", gamma=[1, 1, 1]), 2) == jensen([1, 1, 1], 2)
        got = generate(spec("type_a", a=1, b=0, c=[1, 1, 1]), 3)
        assert got == bell(3)
        got_h = generate(spec("type_h", a=2, b=0, cscale=-1), 3)
        assert got_h == hermite(3)

    def test_invariant_enforcement(self):
        with pytest.raises(ValueError):
            spec("type_a", a=0, b=0, c=[1])
        with pytest.raises(ValueError):
            spec("type_a", a=1, b=-1, c=[1])
        with pytest.raises(ValueError):
            spec("type_a", a=1, b=0, c=[2, 1])  # decreasing
        with pytest.raises(ValueError):
            spec("type_h", a=0, cscale=1)
        with pytest.raises(ValueError):
            spec("jensen")

    def test_c_list_too_short(self):
        with pytest.raises(ValueError):
            generate(spec("type_a", a=1, b=0, c=[1]), 3)


class TestStructuralInvariants:
    def test_real_rootedness_type_a_type_h(self):
        # both recurrence shapes preserve real-rootedness
        seqs = [
            type_a(1, 0, [1] * 20, 20),
            type_a(2, 1, [F(j + 1, 2) for j in range(20)], 20),
            type_h(2, 0, -1, 20),
            type_h(1, F(1, 2), 3, 20),
        ]
        for seq in seqs:
            for p in seq:
                if p.degree() >= 1:
                    assert stability.all_roots_real(p)

    def test_hermite_parity(self):
        for k, h in enumerate(hermite(20)):
            assert h.compose_linear(-1, 0) == (h if k % 2 == 0 else -h)

    def test_bell_interlacing_chain(self):
        seq = bell(15)
        x = Poly.x()
        quotients = [p.exact_div(x) for p in seq[1:]]
        for q in quotients:
            if q.degree() >= 1:
                assert stability.all_roots_real(q)
                assert stability.sturm_real_count(q, 0, None) == 0
                assert q(0) != 0
        for k in range(2, 15):
            assert stability.interlace_check(seq[k], seq[k - 1], shared_root=0)
