import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import lgmirror as lg
from lgmirror.errors import (
    CapExceededError,
    DimensionMismatchError,
    NotAMemberError,
    ParseError,
)
from oracles import (
    apply_to_vector,
    brute_force_diagonal,
    element_of_matrix,
    matrix_product,
)


def diag(*phases):
    return lg.MonomialSymmetry.diagonal([F(p) for p in phases])


def perm(cycles, n):
    return lg.MonomialSymmetry.from_cycles(cycles, n)


def test_composition_of_mixed_elements():
    # the two displayed products of (1/2,1/4,1/4,0)(123) and (1/2,1/4,1/4,0)(132)
    a = diag("1/2", "1/4", "1/4", 0) * perm([(0, 1, 2)], 4)
    b = diag("1/2", "1/4", "1/4", 0) * perm([(0, 2, 1)], 4)
    assert (a * b) == diag("3/4", "1/2", "3/4", 0)
    assert (b * a) == diag("3/4", "3/4", "1/2", 0)


def test_inverse_and_identity():
    g = diag("1/2", "1/4", "1/4", 0) * perm([(0, 1, 2)], 4)
    assert (g * g.inverse()).is_identity
    assert (g.inverse() * g).is_identity
    assert g ** 0 == lg.MonomialSymmetry.identity(4)
    assert g ** -1 == g.inverse()


def _random_element(rng, n, denominator=12):
    images = list(range(n))
    rng.shuffle(images)
    phases = [F(rng.randrange(denominator), denominator) for _ in range(n)]
    return lg.MonomialSymmetry(images, phases)


def test_composition_matches_dense_matrix_product():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 8)
        a = _random_element(rng, n)
        b = _random_element(rng, n)
        dense = element_of_matrix(matrix_product(a.phase_matrix(),
                                                 b.phase_matrix()))
        assert a * b == dense


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10 ** 9))
def test_composition_is_associative(n, seed):
    rng = random.Random(seed)
    a, b, c = (_random_element(rng, n) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_is_symmetry_on_quartic(quartic):
    assert lg.is_symmetry(lg.exponential_grading(quartic), quartic)
    assert lg.is_symmetry(perm([(0, 1, 2)], 4), quartic)
    assert not lg.is_symmetry(diag("1/3", 0, 0, 0), quartic)
    with pytest.raises(DimensionMismatchError):
        lg.is_symmetry(diag("1/4", "1/4"), quartic)


def test_is_symmetry_respects_weights():
    poly = lg.parse_polynomial("x1^3 + x2^4 + x3^4")
    # x2, x3 share a weight; x1 does not
    assert lg.is_symmetry(perm([(1, 2)], 3), poly)
    assert not lg.is_symmetry(perm([(0, 1)], 3), poly)


def test_diagonal_group_fermat_quartic(quartic):
    group = lg.diagonal_group(quartic)
    assert group.order == 256
    assert {g.phases for g in group} == brute_force_diagonal(quartic)


def test_diagonal_group_chain_is_cyclic_of_order_12():
    poly = lg.parse_polynomial("x1^3*x2 + x2^2*x3 + x3^2")
    group = lg.diagonal_group(poly)
    assert group.order == 12
    assert {g.phases for g in group} == brute_force_diagonal(poly)
    assert max(g.order() for g in group) == 12  # cyclic


def test_diagonal_group_order_equals_determinant():
    from lgmirror.linalg import determinant
    rng = random.Random(3)
    samples = [
        "x1^2 + x2^3",
        "x1^3*x2 + x2^2",
        "x1^2*x2 + x2^2*x3 + x3^2*x1",
        "x1^5 + x2^2*x3 + x3^3",
    ]
    for text in samples:
        poly = lg.parse_polynomial(text)
        group = lg.diagonal_group(poly)
        assert group.order == abs(int(determinant(poly.exponents)))
        assert {g.phases for g in group} == brute_force_diagonal(poly)


def test_exponential_grading(quartic):
    j = lg.exponential_grading(quartic)
    assert j == diag("1/4", "1/4", "1/4", "1/4")
    assert j in lg.diagonal_group(quartic)
    quintic = lg.parse_polynomial("x1^5 + x2^5 + x3^5 + x4^5 + x5^5")
    assert lg.exponential_grading(quintic).phases == (F(1, 5),) * 5
    loop = lg.parse_polynomial("x1^2*x2 + x2^2*x3 + x3^2*x1")
    assert lg.exponential_grading(loop).phases == (F(1, 3),) * 3


def test_closure_orders(quartic, quartic_group):
    assert quartic_group.order == 12
    assert lg.closure([lg.MonomialSymmetry.identity(3)]).order == 1
    sl = lg.sl_subgroup(lg.diagonal_group(quartic))
    star = lg.closure(list(sl.generators) + [perm([(0, 1, 2)], 4)])
    assert star.order == 192


def test_closure_cap():
    with pytest.raises(CapExceededError):
        lg.closure([diag("1/4", "1/4", "1/4", "1/4")], cap=3)
    assert lg.closure([diag("1/4", "1/4", "1/4", "1/4")], cap=4).order == 4


def test_sl_subgroup(quartic):
    sl = lg.sl_subgroup(lg.diagonal_group(quartic))
    assert sl.order == 64
    gens = [diag("1/4", "1/4", "1/4", "1/4"), diag("1/2", "1/4", "1/4", 0),
            diag("1/4", "1/2", "1/4", 0)]
    assert lg.closure(gens) == sl
    assert perm([(0, 1, 2)], 4).det_phase() == 0
    assert perm([(0, 1)], 4).det_phase() == F(1, 2)


def test_conjugacy_classes_abelian_are_singletons(quartic_group):
    classes = quartic_group.conjugacy_classes()
    assert len(classes) == quartic_group.order
    assert all(len(c) == 1 for c in classes)


def test_conjugacy_classes_and_centralizers_nonabelian(quartic):
    sl = lg.sl_subgroup(lg.diagonal_group(quartic))
    star = lg.closure(list(sl.generators) + [perm([(0, 1, 2)], 4)])
    for cls in star.conjugacy_classes():
        assert len(cls) * star.centralizer(cls[0]).order == star.order
    assert sum(len(c) for c in star.conjugacy_classes()) == star.order
    assert len(star.class_of(diag("1/4", "1/2", "1/2", "3/4"))) == 3
    jperm = diag("1/4", "1/4", "1/4", "1/4") * perm([(0, 1, 2)], 4)
    assert len(star.class_of(jperm)) == 16
    with pytest.raises(NotAMemberError):
        star.centralizer(diag("1/3", 0, 0, 0))


def test_age_values(quartic):
    j = lg.exponential_grading(quartic)
    assert j.age() == 1
    assert perm([(0, 1, 2)], 4).age() == 1
    assert perm([(0, 2, 1)], 4).age() == 1
    assert (j * perm([(0, 1, 2)], 4)).age() == 2
    g = diag("1/4", "1/2", "3/4", 0)
    assert g.age() == sum(g.phases)  # diagonal: plain phase sum
    assert lg.MonomialSymmetry.identity(4).age() == 0


def test_age_inverse_identity_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 8)
        g = _random_element(rng, n)
        assert g.age() + g.inverse().age() == n - g.fixed_locus().dim


def test_age_and_locus_conjugation_invariant():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = _random_element(rng, n)
        gamma = _random_element(rng, n)
        conj = g.conjugated_by(gamma)
        assert conj.age() == g.age()
        assert conj.fixed_locus().dim == g.fixed_locus().dim


def test_fixed_locus_examples(quartic):
    locus = perm([(0, 1, 2)], 4).fixed_locus()
    assert locus.dim == 2
    assert locus.cycles == ((0, 1, 2), (3,))
    assert locus.canonical_vectors() == ((F(0), F(0), F(0), None),
                                         (None, None, None, F(0)))
    assert lg.exponential_grading(quartic).fixed_locus().dim == 0
    assert lg.MonomialSymmetry.identity(4).fixed_locus().dim == 4


def test_fixed_vectors_are_fixed_random():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = _random_element(rng, n)
        for vec in g.fixed_locus().canonical_vectors():
            assert apply_to_vector(g, vec) == vec


def test_conjugation_moves_fixed_vectors():
    # x in Fix(g)  <=>  γ⁻¹·x in Fix(γ⁻¹gγ)
    rng = random.Random(19)
    for _ in range(200):
        n = rng.randint(1, 6)
        g = _random_element(rng, n)
        gamma = _random_element(rng, n)
        conj = g.conjugated_by(gamma)
        for vec in g.fixed_locus().canonical_vectors():
            moved = apply_to_vector(gamma.inverse(), vec)
            assert apply_to_vector(conj, moved) == moved


def test_subgroup_enumeration_small():
    klein = lg.closure([perm([(0, 1), (2, 3)], 5), perm([(0, 2), (1, 3)], 5)])
    assert len(klein.subgroups()) == 5
    three = lg.closure([perm([(0, 1, 2)], 4)])
    assert len(three.subgroups()) == 2
    s3 = lg.closure([perm([(0, 1)], 3), perm([(0, 1, 2)], 3)])
    assert s3.order == 6 and not s3.is_abelian
    assert len(s3.subgroups()) == 6


def test_parse_generator(quartic):
    assert lg.parse_generator("j", quartic) == lg.exponential_grading(quartic)
    g = lg.parse_generator("diag(1/2, 1/4, 1/4, 0)*(1 2 3)", quartic)
    assert g == diag("1/2", "1/4", "1/4", 0) * perm([(0, 1, 2)], 4)
    assert lg.parse_generator("(1 2)(3 4)", quartic) == perm([(0, 1), (2, 3)], 4)
    assert lg.parse_generator("diag(3/4, 0, 0, 1/4)", quartic) == \
        diag("3/4", 0, 0, "1/4")
    for bad in ("diag(1/2, 1/4)", "(1 2", "(1 5)", "(1 1 2)", "diag(1/2,0,0,0)(1 2)"):
        with pytest.raises(ParseError):
            lg.parse_generator(bad, quartic)


def test_element_labels():
    assert diag("1/4", "1/4", "1/4", "1/4").label() == "(1/4, 1/4, 1/4, 1/4)"
    assert perm([(0, 1, 2)], 4).label() == "(1 2 3)"
    mixed = diag("1/2", 0, 0, 0) * perm([(0, 1)], 4)
    assert mixed.label() == "(1/2, 0, 0, 0)(1 2)"
    assert lg.MonomialSymmetry.identity(2).label() == "(0, 0)"
