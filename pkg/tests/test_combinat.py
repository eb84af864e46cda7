"""Tests for the multipartition / tableau / permutation combinatorics.

Counting facts are checked against closed-form or independently generated
values, and the structural maps (conjugation, tableau permutations,
semistandard fibers, residue data) against their defining properties.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclohecke.coeff import QQ
from cyclohecke.combinat import (
    Multicomposition,
    Multipartition,
    Node,
    Permutation,
    SemistandardTableau,
    StandardTableau,
    cell_pairs_ordered,
    dominance_compare,
    dominates,
    enumerate_multicompositions,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_permutations,
    enumerate_semistd,
    enumerate_std,
    node_content,
    residue_equivalent,
    shape_key,
    std_by_dominance,
    type_fibers,
    type_tableau,
    w_lambda,
)

words = st.lists(st.integers(min_value=1, max_value=3), max_size=8)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def test_permutation_basics():
    e = Permutation.identity(4)
    s1 = Permutation.transposition(4, 1)
    assert e.is_identity() and e.length() == 0
    assert s1(1) == 2 and s1(2) == 1 and s1(3) == 3
    assert s1 * s1 == e
    assert s1.length() == 1


def test_permutation_word_roundtrip():
    w = Permutation.from_word(4, (1, 2, 1, 3))
    assert Permutation.from_word(4, w.reduced_word()) == w
    assert len(w.reduced_word()) == w.length()


def test_permutation_mul_applies_left_factor_first():
    s1 = Permutation.transposition(3, 1)
    s2 = Permutation.transposition(3, 2)
    # (s1*s2) means "apply s1, then s2": 1 -> 2 -> 3.
    assert (s1 * s2)(1) == 3
    assert (s2 * s1)(1) == 2


def test_longest_element_length():
    w0 = max(enumerate_permutations(4), key=lambda w: w.length())
    assert w0.length() == 6  # n(n-1)/2


@given(u=words, v=words)
@settings(max_examples=60, deadline=None)
def test_permutation_group_laws(u, v):
    a = Permutation.from_word(4, u)
    b = Permutation.from_word(4, v)
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert a * a.inverse() == Permutation.identity(4)
    # length is subadditive and respects parity
    assert (a * b).length() <= a.length() + b.length()
    assert ((a * b).length() - a.length() - b.length()) % 2 == 0


# ---------------------------------------------------------------------------
# multipartitions and dominance
# ---------------------------------------------------------------------------


def test_partition_counts():
    assert len(list(enumerate_partitions(4))) == 5
    assert len(list(enumerate_partitions(6))) == 11


def test_multipartition_counts():
    # sum over compositions of n of products of partition counts
    assert len(enumerate_multipartitions(2, 1)) == 2
    assert len(enumerate_multipartitions(2, 2)) == 5
    assert len(enumerate_multipartitions(3, 2)) == 10
    assert len(enumerate_multipartitions(2, 3)) == 9
    assert len(enumerate_multipartitions(4, 2)) == 20


def test_multipartition_validation():
    with pytest.raises(ValueError):
        Multipartition(((1, 2),))  # rows must weakly decrease


def test_conjugate_is_an_involution():
    for lam in enumerate_multipartitions(3, 2):
        assert lam.conjugate().conjugate() == lam
    # component order reverses and each partition transposes
    lam = Multipartition(((2, 1), (1,)))
    assert lam.conjugate() == Multipartition(((1,), (2, 1)))


def test_dominance_on_partitions():
    a = Multipartition(((3,),))
    b = Multipartition(((2, 1),))
    c = Multipartition(((1, 1, 1),))
    assert dominates(a, b) and dominates(b, c) and dominates(a, c)
    assert not dominates(c, b)
    assert dominance_compare(a, b) == 1
    assert dominance_compare(b, a) == -1
    assert dominance_compare(a, a) == 0


def test_dominance_incomparable_pair():
    # classic incomparable pair at n=6 in one component
    a = Multipartition(((4, 1, 1),))
    b = Multipartition(((3, 3),))
    assert dominance_compare(a, b) is None


def test_dominance_weights_earlier_components_higher():
    a = Multipartition(((1,), ()))
    b = Multipartition(((), (1,)))
    assert dominates(a, b) and not dominates(b, a)


# ---------------------------------------------------------------------------
# standard tableaux
# ---------------------------------------------------------------------------


def test_std_counts_match_hook_formula():
    # single-component counts from the hook-length formula
    assert len(enumerate_std(Multipartition(((2, 1),)))) == 2
    assert len(enumerate_std(Multipartition(((3, 1),)))) == 3
    assert len(enumerate_std(Multipartition(((2, 2),)))) == 2
    # two components: choose entries for each component, then count each
    assert len(enumerate_std(Multipartition(((1,), (1,))))) == 2
    assert len(enumerate_std(Multipartition(((2,), (1,))))) == 3


def test_std_total_count_equals_group_order_weighted():
    # sum over shapes of (#Std)^2 = ell^n * n!
    for n, ell in ((2, 2), (3, 2), (2, 3)):
        total = sum(
            len(enumerate_std(lam)) ** 2 for lam in enumerate_multipartitions(n, ell)
        )
        assert total == ell ** n * _factorial(n)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_initial_tableau_fills_rows_first():
    lam = Multipartition(((2,), (1,)))
    t = StandardTableau.initial_tableau(lam)
    assert t.entry(Node(1, 1, 1)) == 1
    assert t.entry(Node(1, 1, 2)) == 2
    assert t.entry(Node(2, 1, 1)) == 3
    assert t.d_perm().is_identity()


def test_final_tableau_is_conjugate_extreme():
    lam = Multipartition(((2,), (1,)))
    t = StandardTableau.final_tableau(lam)
    # the conjugate of the final tableau is the initial tableau of the
    # conjugate shape
    conj = t.conjugate()
    assert conj == StandardTableau.initial_tableau(lam.conjugate())


def test_tableau_perm_roundtrip():
    lam = Multipartition(((2, 1), (1,)))
    t0 = StandardTableau.initial_tableau(lam)
    for t in enumerate_std(lam):
        assert t0.apply_perm(t.d_perm()) == t
        assert t.shape == lam


def test_dprime_perm_reaches_from_final():
    lam = Multipartition(((2,), (1,)))
    tfin = StandardTableau.final_tableau(lam)
    for t in enumerate_std(lam):
        assert tfin.apply_perm(t.dprime_perm()) == t


def test_w_lambda_connects_the_two_extremes():
    for lam in enumerate_multipartitions(3, 2):
        t0 = StandardTableau.initial_tableau(lam)
        tfin = StandardTableau.final_tableau(lam)
        assert t0.apply_perm(w_lambda(lam)) == tfin


def test_conjugating_tableaux_is_involutive():
    lam = Multipartition(((2, 1), (1,)))
    for t in enumerate_std(lam):
        assert t.conjugate().conjugate() == t
        assert t.conjugate().shape == lam.conjugate()


def test_std_by_dominance_is_a_dominance_linearization():
    lam = Multipartition(((2, 1),))
    ordered = std_by_dominance(lam)
    assert set(ordered) == set(enumerate_std(lam))
    assert ordered[0] == StandardTableau.initial_tableau(lam)


def test_cell_pairs_ordered_covers_all_pairs():
    labels = cell_pairs_ordered(2, 2)
    total = sum(len(enumerate_std(lam)) ** 2 for lam in enumerate_multipartitions(2, 2))
    assert len(labels) == total == 8
    for lam, s, t in labels:
        assert s.shape == lam and t.shape == lam
    # labels are grouped by shape, each shape appearing in one block
    seen = []
    for lam, _, _ in labels:
        if not seen or seen[-1] != lam:
            seen.append(lam)
    assert len(seen) == len(set(map(repr, seen)))


# ---------------------------------------------------------------------------
# semistandard tableaux and fibers
# ---------------------------------------------------------------------------


def test_type_tableau_of_identity_type_is_injective():
    # with type omega = (1,1,...,1) in the last component, semistandard
    # tableaux of shape lam biject with standard tableaux
    lam = Multipartition(((2,), (1,)))
    omega = Multicomposition(((), (1, 1, 1)))
    fibers = type_fibers(lam, omega)
    assert len(fibers) == len(enumerate_std(lam))
    for fiber in fibers.values():
        assert len(fiber) == 1


def test_type_fibers_cover_exactly_the_semistandard_images():
    # the fibers are disjoint, and together they contain exactly those
    # standard tableaux whose relabelling by the type is semistandard
    lam = Multipartition(((2, 1), ()))
    mu = Multicomposition(((2, 1), ()))
    fibers = type_fibers(lam, mu)
    everything = [t for fiber in fibers.values() for t in fiber]
    assert len(everything) == len(set(map(repr, everything)))
    survivors = []
    for t in enumerate_std(lam):
        try:
            type_tableau(t, mu)
        except ValueError:
            continue
        survivors.append(t)
    assert sorted(map(repr, everything)) == sorted(map(repr, survivors))
    for S, fiber in fibers.items():
        for t in fiber:
            assert type_tableau(t, mu) == S


def test_type_tableau_rejects_row_violations():
    # shape (1,1) cannot carry the type (2,): both entries would sit in
    # one column with equal labels
    lam = Multipartition(((1, 1),))
    mu = Multicomposition(((2,),))
    assert enumerate_semistd(lam, mu) == ()
    t = enumerate_std(lam)[0]
    with pytest.raises(ValueError):
        type_tableau(t, mu)


def test_semistd_can_be_empty_despite_dominance():
    # dominance of shapes is necessary but not sufficient for a
    # semistandard tableau to exist when the type lives in a later
    # component than the shape
    lam = Multipartition(((1, 1), ()))
    mu = Multicomposition(((), (2,)))
    assert dominates(lam, mu.as_multipartition()) or dominance_compare(
        lam, mu.as_multipartition()
    ) in (1, None)
    assert enumerate_semistd(lam, mu) == ()


def test_semistd_nonempty_implies_dominance():
    for lam in enumerate_multipartitions(3, 2):
        for mu in enumerate_multipartitions(3, 2):
            if enumerate_semistd(lam, mu):
                assert dominates(lam, mu)


def test_semistandard_tableau_structure():
    lam = Multipartition(((2,), ()))
    mu = Multicomposition(((1,), (1,)))
    tabs = enumerate_semistd(lam, mu)
    assert len(tabs) == 1
    (tab,) = tabs
    assert isinstance(tab, SemistandardTableau)
    assert tab.shape == lam
    assert tab.has_type(mu)
    assert dict(tab.type_counts()) == {(1, 1): 1, (1, 2): 1}


# ---------------------------------------------------------------------------
# contents and residues
# ---------------------------------------------------------------------------


def test_node_content_formula():
    xi, Q = QQ(2), (QQ(3), QQ(5))
    # box (comp 2, row 1, col 3): content = xi^2 Q_2 + [2]
    assert node_content(Node(2, 1, 3), xi, Q) == QQ(4) * QQ(5) + QQ(3)
    # box (comp 1, row 2, col 1): content = xi^-1 Q_1 + [-1]
    assert node_content(Node(1, 2, 1), xi, Q) == QQ("3/2") - QQ("1/2")


def test_residue_equivalence_at_colliding_parameters():
    # with xi = 1 and equal cyclotomic parameters the two one-box shapes
    # carry identical residues
    xi, Q = QQ(1), (QQ(2), QQ(2))
    a = Multipartition(((1,), ()))
    b = Multipartition(((), (1,)))
    assert residue_equivalent(a, b, xi, Q)


def test_residue_equivalence_separates_at_generic_point():
    xi, Q = QQ(5), (QQ(1), QQ(7))
    shapes = enumerate_multipartitions(2, 2)
    for a, b in itertools.combinations(shapes, 2):
        assert not residue_equivalent(a, b, xi, Q)


def test_shape_key_orders_by_dominance_refinement():
    shapes = enumerate_multipartitions(2, 2)
    keyed = sorted(shapes, key=lambda s: (shape_key(s), repr(s)), reverse=True)
    # whenever a strictly dominates b, a must come first
    for i, a in enumerate(keyed):
        for b in keyed[i + 1 :]:
            assert dominance_compare(b, a) != 1


def test_enumerate_multicompositions_counts():
    # compositions of 2 into at most 2 parts per component, 2 components:
    # per component with total k: k=0 -> 1, k=1 -> 2 [(1),(1,?)..], count directly
    found = enumerate_multicompositions(2, 2, 2)
    assert all(mc.n == 2 and mc.ell == 2 for mc in found)
    assert len(set(map(repr, found))) == len(found)
