"""Convolution monoids of cochains and pairings, Milnor-Moore inverses,
coboundaries, and the Laplace/cocycle/Frobenius property checkers."""

import pytest

from symchar.convolution import (
    adjoint_comultiplication,
    antipode_cochain,
    coboundary1,
    cochains_equal,
    convolve1,
    convolve2,
    derived_pairing,
    eps1_cochain,
    frobenius_inverse,
    identity_cochain,
    inner_pairing,
    is_algebra_hom,
    is_cocycle2,
    is_frobenius,
    is_laplace,
    milnor_moore_inverse1,
    milnor_moore_inverse2,
    outer_pairing,
    pairings_equal,
    schur_hall_pairing,
    unit_counit_cochain,
    unit_pairing,
    Cochain1,
    Pairing,
)
from symchar.kronecker import inner_coproduct_basis
from symchar.partitions import partitions_up_to
from symchar.schur import SymFunc, antipode, outer_mul, s, unit


class TestConvolutionMonoid:
    def test_unit_of_cochain_convolution(self):
        e = unit_counit_cochain()
        assert cochains_equal(convolve1(e, identity_cochain()), identity_cochain(), 5)
        assert cochains_equal(convolve1(identity_cochain(), e), identity_cochain(), 5)

    def test_antipode_law(self):
        # S * Id = e = Id * S
        e = unit_counit_cochain()
        assert cochains_equal(convolve1(antipode_cochain(), identity_cochain()), e, 6)
        assert cochains_equal(convolve1(identity_cochain(), antipode_cochain()), e, 6)

    def test_unit_of_pairing_convolution(self):
        e2 = unit_pairing()
        assert pairings_equal(convolve2(e2, inner_pairing()), inner_pairing(), 5)
        assert pairings_equal(convolve2(inner_pairing(), e2), inner_pairing(), 5)


class TestMilnorMooreInverse:
    def test_inverse_of_identity_is_antipode(self):
        inv = milnor_moore_inverse1(identity_cochain())
        assert cochains_equal(inv, antipode_cochain(), 8)

    def test_inverse_of_antipode_is_identity(self):
        inv = milnor_moore_inverse1(antipode_cochain())
        assert cochains_equal(inv, identity_cochain(), 6)

    def test_inverse_of_outer_is_antipode_twisted(self):
        inv = milnor_moore_inverse2(outer_pairing())
        mbar = Pairing(
            lambda mu, nu: outer_mul(
                antipode(SymFunc.basis(mu)), antipode(SymFunc.basis(nu))
            ),
            "m.(SxS)",
        )
        assert pairings_equal(inv, mbar, 6)

    def test_rejects_non_normalized_cochain(self):
        bad = Cochain1(lambda lam: SymFunc.zero(), "zero")
        with pytest.raises(ValueError, match="normalized"):
            milnor_moore_inverse1(bad)

    def test_rejects_non_unital_pairing(self):
        bad = Pairing(lambda mu, nu: SymFunc.zero(), "zero2")
        with pytest.raises(ValueError, match="unital"):
            milnor_moore_inverse2(bad)

    def test_non_normalized_but_unital_pairing_is_invertible(self):
        # a(1,1) = 1 is the only invertibility requirement over a connected
        # coalgebra; the outer product itself is the canonical example.
        lopsided = Pairing(
            lambda mu, nu: SymFunc.basis(mu) if not nu else SymFunc.zero(), "lopsided"
        )
        inv = milnor_moore_inverse2(lopsided)
        assert pairings_equal(convolve2(inv, lopsided), unit_pairing(), 4)
        assert pairings_equal(convolve2(lopsided, inv), unit_pairing(), 4)


class TestCoboundary:
    def test_coboundary_of_unit_is_e2(self):
        assert pairings_equal(coboundary1(unit_counit_cochain()), unit_pairing(), 4)

    def test_coboundary_is_cocycle(self):
        # d(f) is a 2-cocycle for any invertible f; take f = eta o eps1.
        assert is_cocycle2(coboundary1(eps1_cochain()), 4)


class TestCheckers:
    def test_cocycle_examples(self):
        assert is_cocycle2(inner_pairing(), 5)
        assert is_cocycle2(unit_pairing(), 5)

    def test_outer_is_not_a_cocycle(self):
        # c = outer fails the multiplicativity constraint: at (1, 1, s1) the
        # left side is s1 but the right side is [2](s1) = 2 s1.  Consistently,
        # the product deformed by c would not be associative.
        witness = []
        assert not is_cocycle2(outer_pairing(), 3, witness)
        assert witness[0][:3] == ((), (), (1,))
        assert witness[0][3] == s(1)
        assert witness[0][4] == s(1).scale(2)

    def test_algebra_hom_examples(self):
        assert is_algebra_hom(antipode_cochain(), 5)
        assert is_algebra_hom(eps1_cochain(), 6)
        bad = Cochain1(
            lambda lam: SymFunc.basis(lam) + outer_mul(SymFunc.basis(lam), s(1)),
            "id+shift",
        )
        witness = []
        assert not is_algebra_hom(bad, 4, witness)
        assert witness

    def test_laplace_examples(self):
        assert is_laplace(inner_pairing(), 6)
        assert is_laplace(schur_hall_pairing(), 6)

    def test_outer_fails_laplace_with_witness(self):
        witness = []
        assert not is_laplace(outer_pairing(), 3, witness)
        assert witness
        # The documented counterexample: m(s1, s1 s1) = s1^3 while the
        # straightened sum gives 2 s1^3.
        cube = s(1) * s(1) * s(1)
        direct = outer_pairing()(s(1), s(1) * s(1))
        assert direct == cube
        straightened = SymFunc.zero()
        from symchar.schur import coproduct_basis

        for (x1, x2), c in coproduct_basis((1,)).items():
            straightened = straightened + outer_mul(
                outer_pairing().on_basis(x1, (1,)), outer_pairing().on_basis(x2, (1,))
            ).scale(c)
        assert straightened == cube.scale(2)

    def test_frobenius_examples(self):
        assert is_frobenius(inner_pairing(), 5)
        assert not is_frobenius(outer_pairing(), 4)

    def test_frobenius_accepts_explicit_comultiplication(self):
        def delta(lam):
            from symchar.schur import TensorSymFunc

            return TensorSymFunc(dict(inner_coproduct_basis(lam)))

        assert is_frobenius(inner_pairing(), 4, delta_a=delta)

    def test_derived_antipode_inner_laplace_not_frobenius(self):
        a = derived_pairing(inner_pairing(), antipode_cochain(), 4)
        assert is_laplace(a, 4)
        assert not is_frobenius(a, 4)


class TestAdjointComultiplication:
    def test_inner_adjoint_matches_inner_coproduct(self):
        for lam in partitions_up_to(4):
            assert adjoint_comultiplication(inner_pairing(), lam).terms == dict(
                inner_coproduct_basis(lam)
            )


class TestDerivedAndInverse:
    def test_derived_identity_is_same_pairing(self):
        assert pairings_equal(
            derived_pairing(inner_pairing(), identity_cochain()), inner_pairing(), 4
        )

    def test_derived_eps1_inner_is_schur_hall(self):
        assert pairings_equal(
            derived_pairing(inner_pairing(), eps1_cochain()), schur_hall_pairing(), 4
        )

    def test_derived_rejects_non_hom(self):
        bad = Cochain1(lambda lam: SymFunc.basis(lam).scale(2), "doubling")
        with pytest.raises(ValueError, match="not an algebra homomorphism"):
            derived_pairing(inner_pairing(), bad, 3)

    def test_frobenius_inverse_of_inner(self):
        inv = frobenius_inverse(inner_pairing(), 4)
        assert pairings_equal(convolve2(inv, inner_pairing()), unit_pairing(), 5)
        assert pairings_equal(inv, milnor_moore_inverse2(inner_pairing()), 4)

    def test_frobenius_inverse_of_e2(self):
        assert pairings_equal(frobenius_inverse(unit_pairing(), 3), unit_pairing(), 3)

    def test_frobenius_inverse_rejects_non_frobenius(self):
        with pytest.raises(ValueError, match="not Frobenius"):
            frobenius_inverse(outer_pairing(), 3)
