"""Tests for the seminormal idempotents, the paired seminormal families,
and the distinguished dual families at deformed parameters.

The headline negative result is frozen here: at the one-box-two-parameter
collision (xi = 1, Q1 = Q2) the distinguished families are NOT dual to
each other -- the pairing has a nonzero off-diagonal entry whose exact
value is pinned below.  What survives in general is unitriangularity,
and at split semisimple points the pairing is the identity.
"""

import pytest

from cyclohecke.coeff import (
    QQ,
    GenericParams,
    order_at_zero,
    specialize_at_zero,
)
from cyclohecke.combinat import enumerate_multipartitions, enumerate_std
from cyclohecke.hecke import HeckeAlgebra
from cyclohecke.seminormal import (
    DUAL_FACTOR_CONVENTION,
    SeminormalBasis,
    specialize_element,
)
from cyclohecke.traceform import r_lambda, tau


def deformed(n, ell, xi, Q):
    return HeckeAlgebra(GenericParams(n, ell, xi, Q, generic=True))


@pytest.fixture(scope="module")
def SN():
    # main deformed configuration: two boxes, two parameters
    return SeminormalBasis(deformed(2, 2, QQ(3), (QQ(1), QQ(2))))


@pytest.fixture(scope="module")
def SN_collide():
    # one box, colliding parameters: xi = 1, Q1 = Q2
    return SeminormalBasis(deformed(1, 2, QQ(1), (QQ(2), QQ(2))))


# ---------------------------------------------------------------------------
# idempotents
# ---------------------------------------------------------------------------


def test_F_are_orthogonal_idempotents(SN):
    H = SN.algebra
    tabs = [t for lam in enumerate_multipartitions(2, 2) for t in enumerate_std(lam)]
    for i, t in enumerate(tabs):
        Ft = SN.F(t)
        assert Ft * Ft == Ft
        for u in tabs[i + 1 :]:
            assert (Ft * SN.F(u)).is_zero()


def test_F_sum_to_one(SN):
    H = SN.algebra
    acc = H.zero()
    for lam in enumerate_multipartitions(2, 2):
        for t in enumerate_std(lam):
            acc = acc + SN.F(t)
    assert acc == H.one()


def test_F_diagonal_matches_f(SN):
    for lam in enumerate_multipartitions(2, 2):
        for t in enumerate_std(lam):
            # f_tt = F_t m_tt F_t is gamma_t-proportional to F_t itself
            # only in the one-dimensional cells; in general F f F = f
            ft = SN.f(t, t)
            assert SN.F(t) * ft == ft
            assert ft * SN.F(t) == ft


# ---------------------------------------------------------------------------
# product rules for the paired families
# ---------------------------------------------------------------------------


def test_f_family_product_rule(SN):
    for lam in enumerate_multipartitions(2, 2):
        stds = enumerate_std(lam)
        for s in stds:
            for t in stds:
                for u in stds:
                    for v in stds:
                        prod = SN.f(s, t) * SN.f(u, v)
                        if t == u:
                            assert prod == SN.f(s, v) * SN.gamma(t)
                        else:
                            assert prod.is_zero()


def test_g_family_product_rule(SN):
    # the structure scalar of the dual family at inner index t is read
    # through the conjugate tableau
    for lam in enumerate_multipartitions(2, 2):
        stds = enumerate_std(lam)
        for s in stds:
            for t in stds:
                for u in stds:
                    for v in stds:
                        prod = SN.g(s, t) * SN.g(u, v)
                        if t == u:
                            scal = SN.gamma_check(t.conjugate())
                            assert prod == SN.g(s, v) * scal
                        else:
                            assert prod.is_zero()


def test_f_and_g_cross_shapes_annihilate(SN):
    shapes = enumerate_multipartitions(2, 2)
    a = enumerate_std(shapes[0])[0]
    b = enumerate_std(shapes[-1])[0]
    assert (SN.f(a, a) * SN.f(b, b)).is_zero()
    assert (SN.g(a, a) * SN.g(b, b)).is_zero()


# ---------------------------------------------------------------------------
# traces of the basis elements
# ---------------------------------------------------------------------------


def test_tau_of_f_matches_closed_form(SN):
    for _, s, t in SN.pairs():
        assert tau(SN.f(s, t)) == SN.tau_f_expected(s, t)


def test_tau_f_expected_is_kronecker_gamma_over_schur(SN):
    for _, s, t in SN.pairs():
        if s == t:
            lam = s.shape
            assert SN.tau_f_expected(s, t) == SN.gamma(s) / SN.schur_element(lam)
        else:
            assert SN.tau_f_expected(s, t) == SN.algebra.field_zero


def test_sigma_matches_prediction(SN):
    for _, s, t in SN.pairs():
        assert SN.sigma(s, t) == SN.sigma_predicted(s, t)
        assert SN.dual_factor(s, t) * SN.sigma(s, t) == SN.algebra.field_one


def test_schur_element_is_tableau_independent(SN):
    for lam in enumerate_multipartitions(2, 2):
        s_lam = SN.schur_element(lam)
        for t in enumerate_std(lam):
            assert SN.gamma(t) / tau(SN.f(t, t)) == s_lam


def test_schur_element_group_algebra_oracle():
    # at xi = 1, ell = 1, Q = 0 the x -> 0 specialization is the group
    # algebra of S_3, whose Schur elements are 3!/#Std(lam): 6, 3, 6
    SN = SeminormalBasis(deformed(3, 1, QQ(1), (QQ(0),)))
    expect = {(3,): QQ(6), (2, 1): QQ(3), (1, 1, 1): QQ(6)}
    for lam in enumerate_multipartitions(3, 1):
        val = specialize_at_zero(SN.schur_element(lam))
        assert val == expect[lam.comps[0]]


def test_trace_of_identity_decomposes_over_schur_elements(SN):
    # tau(F_t) = 1/s_lambda and the F_t sum to 1, so
    # tau(1) = sum_lam #Std(lam) / s_lambda
    H = SN.algebra
    total = H.field_zero
    for lam in enumerate_multipartitions(2, 2):
        count = len(enumerate_std(lam))
        total = total + H.field(count) / SN.schur_element(lam)
    assert total == tau(H.one())
    # and indeed tau(F_t) = 1/s_lambda tableau by tableau
    for lam in enumerate_multipartitions(2, 2):
        for t in enumerate_std(lam):
            assert tau(SN.F(t)) == H.field_one / SN.schur_element(lam)


# ---------------------------------------------------------------------------
# expansions
# ---------------------------------------------------------------------------


def test_expand_in_f_roundtrip(SN):
    H = SN.algebra
    elem = H.T(1) * H.L(2) + H.L(1) * QQ(2)
    coords = SN.expand_in_f(elem)
    acc = H.zero()
    for (s, t), c in coords.items():
        acc = acc + SN.f(s, t) * c
    assert acc == elem


def test_expand_in_g_roundtrip(SN):
    H = SN.algebra
    elem = H.T(1) - H.L(1) * H.L(2)
    coords = SN.expand_in_g(elem)
    acc = H.zero()
    for (s, t), c in coords.items():
        acc = acc + SN.g(s, t) * c
    assert acc == elem


# ---------------------------------------------------------------------------
# distinguished families: split semisimple point
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def SN_separated():
    return SeminormalBasis(deformed(2, 2, QQ(5), (QQ(1), QQ(7))))


def test_no_corrections_at_semisimple_point(SN_separated):
    assert SN_separated.correction_depth("B") == 0
    assert SN_separated.correction_depth("Bcheck") == 0
    for _, s, t in SN_separated.pairs():
        B, corr = SN_separated.distinguished("B", s, t)
        assert corr == {}
        assert B == SN_separated.f(s, t)
        C, corr2 = SN_separated.distinguished("Bcheck", s, t)
        assert corr2 == {}
        assert C == SN_separated.g(s, t)


def test_pairing_identity_at_semisimple_point(SN_separated):
    H = SN_separated.algebra
    pairs, M = SN_separated.pairing_matrix()
    for i in range(len(pairs)):
        for j in range(len(pairs)):
            want = H.field_one if i == j else H.field_zero
            assert M[i][j] == want


def test_pairing_identity_survives_specialization(SN_separated):
    target = HeckeAlgebra(GenericParams(2, 2, QQ(5), (QQ(1), QQ(7))))
    pairs, M = SN_separated.pairing_matrix_specialized(target)
    for i in range(len(pairs)):
        for j in range(len(pairs)):
            want = QQ(1) if i == j else QQ(0)
            assert M[i][j] == want


# ---------------------------------------------------------------------------
# distinguished families: the collision counterexample
# ---------------------------------------------------------------------------


def test_collision_has_depth_one_corrections(SN_collide):
    assert SN_collide.correction_depth("B") == 1
    assert SN_collide.correction_depth("Bcheck") == 1


def test_collision_correction_tables_frozen(SN_collide):
    pairs = SN_collide.pairs()
    assert len(pairs) == 2
    # dominance linearization puts the dominant one-box shape first
    (_, top, _), (_, bot, _) = pairs[0], pairs[1]
    B_bot, corr = SN_collide.distinguished("B", bot, bot)
    assert corr == {(top, top): [QQ(1)]}
    # B_bot = f_bot + x^-1 f_top
    H = SN_collide.algebra
    x = H.field.x
    assert B_bot == SN_collide.f(bot, bot) + SN_collide.f(top, top) * (
        H.field_one / x
    )
    C_top, corr2 = SN_collide.distinguished("Bcheck", top, top)
    assert corr2 == {(bot, bot): [QQ(1)]}
    assert C_top == SN_collide.g(top, top) + SN_collide.g(bot, bot) * (
        H.field_one / x
    )


def test_collision_duality_fails_with_frozen_value(SN_collide):
    # the minimal counterexample to the distinguished families being dual:
    # tau(B_bot * Bcheck_top) = x^-1 (sigma_top + sigma_bot) = -1 - 3x,
    # which does not vanish (not even at x = 0)
    pairs = SN_collide.pairs()
    (_, top, _), (_, bot, _) = pairs[0], pairs[1]
    B_bot, _ = SN_collide.distinguished("B", bot, bot)
    C_top, _ = SN_collide.distinguished("Bcheck", top, top)
    H = SN_collide.algebra
    x = H.field.x
    got = tau(B_bot * C_top)
    assert got == -(H.field_one) - x * QQ(3)
    # cross-check the closed form against the two sigmas
    sig = SN_collide.sigma(top, top) + SN_collide.sigma(bot, bot)
    assert got == sig / x


def test_collision_pairing_unitriangular_with_one_deviation(SN_collide):
    H = SN_collide.algebra
    pairs, M = SN_collide.pairing_matrix()
    n = len(pairs)
    deviations = []
    for i in range(n):
        assert M[i][i] == H.field_one
        for j in range(i + 1, n):
            assert M[i][j] == H.field_zero  # strictly dominant side vanishes
    for i in range(n):
        for j in range(i):
            if M[i][j] != H.field_zero:
                deviations.append((i, j))
    assert deviations == [(1, 0)]


def test_collision_deviation_survives_specialization(SN_collide):
    target = HeckeAlgebra(GenericParams(1, 2, QQ(1), (QQ(2), QQ(2))))
    pairs, M = SN_collide.pairing_matrix_specialized(target)
    assert M[0][0] == QQ(1) and M[1][1] == QQ(1)
    assert M[0][1] == QQ(0)
    assert M[1][0] != QQ(0)


# ---------------------------------------------------------------------------
# distinguished families: separated but not semisimple
# ---------------------------------------------------------------------------


def test_separated_nonsemisimple_deviation_positions():
    # xi = 2, Q = (0, 1): the base point is not semisimple, and the
    # pairing picks up exactly two off-diagonal entries
    SN = SeminormalBasis(deformed(2, 2, QQ(2), (QQ(0), QQ(1))))
    H = SN.algebra
    pairs, M = SN.pairing_matrix()
    n = len(pairs)
    deviations = set()
    for i in range(n):
        assert M[i][i] == H.field_one
        for j in range(n):
            if i != j and M[i][j] != H.field_zero:
                deviations.add((i, j))
    assert deviations == {(2, 0), (7, 5)}


# ---------------------------------------------------------------------------
# re-solving with extra depth is stable
# ---------------------------------------------------------------------------


def test_distinguished_solution_is_depth_stable(SN_collide):
    pairs = SN_collide.pairs()
    for _, s, t in pairs:
        for kind in ("B", "Bcheck"):
            default_elem, default_corr = SN_collide.distinguished(kind, s, t)
            deeper_elem, deeper_corr = SN_collide.distinguished(
                kind, s, t, depth=SN_collide.correction_depth(kind) + 2
            )
            assert deeper_elem == default_elem
            # extra slots solve to zero and are dropped or zero-padded
            for key, coeffs in deeper_corr.items():
                base = default_corr.get(key, [])
                assert coeffs[: len(base)] == base
                assert all(c == QQ(0) for c in coeffs[len(base):])


# ---------------------------------------------------------------------------
# conventions and specialization helper
# ---------------------------------------------------------------------------


def test_dual_factor_convention_string():
    assert "reciprocal" in DUAL_FACTOR_CONVENTION
    assert "r_lambda" in DUAL_FACTOR_CONVENTION


def test_specialize_element_coefficients():
    src = deformed(2, 2, QQ(3), (QQ(1), QQ(2)))
    target = HeckeAlgebra(GenericParams(2, 2, QQ(3), (QQ(1), QQ(2))))
    x = src.field.x
    elem = src.T(1) * (src.field_one + x) + src.one() * (x * x)
    out = specialize_element(elem, target)
    assert out == target.T(1)
