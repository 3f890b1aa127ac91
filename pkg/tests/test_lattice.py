from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers_oracle import laplace_det
from tstrata.errors import DomainError, InvariantError
from tstrata.hj import Chain, classify_chain, enumerate_t_chains
from tstrata.lattice import (
    PicardLattice,
    chain_gram,
    det_exact,
    discrepancies,
    hirzebruch,
    is_negative_definite,
    leading_minors,
    solve_exact,
)
from tstrata.poly import N


# ----------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------

def test_hirzebruch_gram():
    f0 = hirzebruch(0)
    assert f0.gram == ((0, 1), (1, 0))
    assert f0.canonical == (-2, -2)
    f2 = hirzebruch(2)
    assert f2.gram == ((-2, 1), (1, 0))
    assert f2.canonical == (-2, -4)
    with pytest.raises(DomainError):
        hirzebruch(-1)


def test_d0_self_intersection():
    f5 = hirzebruch(5)
    d0 = f5.divisor(D=1, F=5)
    assert f5.intersect(d0, d0) == 5


def test_blow_up_drops_k2():
    f0 = hirzebruch(0)
    assert f0.k_squared == 8
    once = f0.blow_up("E1")
    assert once.k_squared == 7
    assert once.k_squared + once.rank == 10
    nu = 3
    y = hirzebruch(2).blow_up("E1", "E2", *[f"A{i}" for i in range(1, nu + 1)])
    assert y.k_squared == 6 - nu
    assert y.intersect(y.basis("E1"), y.basis("E2")) == 0
    assert y.intersect(y.basis("E1"), y.basis("E1")) == -1


def test_blow_up_duplicate_label():
    with pytest.raises(DomainError):
        hirzebruch(1).blow_up("D")
    with pytest.raises(DomainError):
        hirzebruch(1).blow_up("E", "E")


def test_ruling_through_two_points():
    y = hirzebruch(3).blow_up("E1", "E2")
    phi = y.divisor(F=1, E1=-1, E2=-1)
    assert y.intersect(phi, phi) == -2


def test_bad_class_or_matrix():
    f1 = hirzebruch(1)
    with pytest.raises(DomainError):
        f1.divisor(X=1)
    with pytest.raises(DomainError):
        f1.intersect(f1.divisor(D=1), hirzebruch(2).blow_up("E").divisor(E=1))
    with pytest.raises(DomainError):
        PicardLattice(("a", "a"), ((0, 1), (1, 0)), (0, 0))
    with pytest.raises(DomainError):
        PicardLattice(("a", "b"), ((0, 1), (2, 0)), (0, 0))


# ----------------------------------------------------------------------
# pairing, Riemann-Roch, genus
# ----------------------------------------------------------------------

def test_pairings_on_fd():
    for d in (0, 1, 2, 5):
        fd = hirzebruch(d)
        D, F = fd.basis("D"), fd.basis("F")
        assert fd.intersect(D, D + d * F) == 0
        big = fd.divisor(D=6, F=N + 3 + 3 * d)
        assert fd.intersect(big, D) == N + 3 - 3 * d


def test_chi_rr_values():
    d = 3
    fd = hirzebruch(d)
    assert fd.chi_rr(fd.zero()) == 1
    res = fd.chi_rr(fd.divisor(D=6, F=N + 4 + 3 * d))
    assert res == 7 * N + 35  # projective dimension 7n+34
    assert fd.chi_rr(fd.divisor(D=6, F=N + 3 + 3 * d)) == 7 * N + 28


def test_chi_rr_pointwise_matches_symbolic():
    for d in (0, 1, 4):
        fd = hirzebruch(d)
        cls = fd.divisor(D=6, F=N + 3 + 3 * d)
        sym = fd.chi_rr(cls)
        for n in (15, 16, 21):
            assert sym.at(n) == fd.chi_rr(cls.at(n))


def test_arithmetic_genus():
    d = 2
    fd = hirzebruch(d)
    assert fd.arithmetic_genus(fd.basis("D")) == 0
    y = fd.blow_up("E1", "E2")
    assert y.arithmetic_genus(y.basis("E1")) == 0
    assert fd.arithmetic_genus(fd.divisor(D=6, F=N + 3 + 3 * d)) == 5 * N + 10


@st.composite
def lattice_and_class(draw):
    d = draw(st.integers(0, 4))
    blows = draw(st.integers(0, 3))
    lat = hirzebruch(d)
    if blows:
        lat = lat.blow_up(*[f"E{i}" for i in range(blows)])
    coords = draw(st.lists(
        st.integers(-6, 6), min_size=lat.rank, max_size=lat.rank
    ))
    return lat, lat.divisor(**dict(zip(lat.labels, coords)))


@given(lattice_and_class())
def test_serre_duality_symmetry(lat_cls):
    lat, a = lat_cls
    assert lat.chi_rr(a) == lat.chi_rr(lat.k - a)


@given(lattice_and_class())
def test_adjunction_consistency(lat_cls):
    # chi(a) + p_a(a) = a^2 + chi(O) + 1 is an identity of the two halvings
    lat, a = lat_cls
    assert lat.chi_rr(a) + lat.arithmetic_genus(a) == lat.intersect(a, a) + 2


def test_pairing_report_certificate():
    # M = 2*(D + dF) + aF - E1 - E2 pairs 0 with the ruling transform,
    # 1 with each exceptional, 2 with a general fiber
    d, a = 3, 4
    y = hirzebruch(d).blow_up("E1", "E2")
    m = y.divisor(D=2, F=2 * d + a, E1=-1, E2=-1)
    report = y.pairing_report(m, {
        "R'": y.divisor(F=1, E1=-1, E2=-1),
        "E1": y.basis("E1"),
        "fiber": y.basis("F"),
    })
    assert report == {"R'": 0, "E1": 1, "fiber": 2}


# ----------------------------------------------------------------------
# chain Gram matrices
# ----------------------------------------------------------------------

def test_chain_gram_shapes():
    assert chain_gram(Chain((4,))) == ((-4,),)
    assert chain_gram(Chain((3, 3))) == ((-3, 1), (1, -3))
    g = chain_gram(Chain((3, 2, 3)))
    assert g == ((-3, 1, 0), (1, -2, 1), (0, 1, -3))


def test_chain_gram_determinant_examples():
    # |det| equals the continued-fraction numerator; for [3,2,3] the value
    # is 12/5, and Laplace expansion confirms det = -12
    g = chain_gram(Chain((3, 2, 3)))
    assert laplace_det(g) == -12
    assert det_exact(g) == -12
    assert det_exact(chain_gram(Chain((4,)))) == -4
    assert det_exact(chain_gram(Chain((3, 3)))) == 8


@given(st.lists(st.integers(2, 6), min_size=1, max_size=6))
def test_det_matches_laplace(entries):
    g = chain_gram(Chain(tuple(entries)))
    assert det_exact(g) == laplace_det(g)


@given(st.lists(st.integers(2, 6), min_size=1, max_size=7))
def test_det_sign_and_numerator(entries):
    from tstrata.hj import hj_eval

    c = Chain(tuple(entries))
    det = det_exact(chain_gram(c))
    assert det == (-1) ** len(c) * hj_eval(c).numerator


# ----------------------------------------------------------------------
# negative definiteness
# ----------------------------------------------------------------------

def test_negative_definite_examples():
    assert is_negative_definite(chain_gram(Chain((4,))))
    assert is_negative_definite(chain_gram(Chain((2, 2))))
    assert not is_negative_definite(((-1, 2), (2, -1)))  # det -3 breaks alternation
    assert not is_negative_definite(((0, 1), (1, 0)))
    assert not is_negative_definite(((1,),))
    with pytest.raises(DomainError):
        is_negative_definite(((1, 2), (3, 4)))
    with pytest.raises(DomainError):
        is_negative_definite(((1, 2, 3), (2, 1, 1)))


def test_leading_minors_bareiss():
    m = ((-2, 1, 0), (1, -2, 1), (0, 1, -2))
    assert leading_minors(m) == [-2, 3, -4]


def test_all_small_chains_negative_definite():
    # exhaustive small sweep (entries are unbounded in general, so bounded
    # boxes plus the hypothesis sweep below stand in for "all")
    from itertools import product

    for r in range(1, 9):
        for entries in product((2, 3, 4), repeat=r):
            assert is_negative_definite(chain_gram(Chain(entries)))
    for r in range(1, 7):
        for entries in product((2, 3, 4, 5, 6), repeat=r):
            assert is_negative_definite(chain_gram(Chain(entries)))


@given(st.lists(st.integers(2, 40), min_size=1, max_size=12))
def test_random_chains_negative_definite(entries):
    assert is_negative_definite(chain_gram(Chain(tuple(entries))))


# ----------------------------------------------------------------------
# discrepancies
# ----------------------------------------------------------------------

@pytest.mark.parametrize("entries,expected", [
    ((4,), (Fraction(-1, 2),)),
    ((3, 2, 3), (Fraction(-1, 2),) * 3),
    ((2,), (Fraction(0),)),
    ((2, 5), (Fraction(-1, 3), Fraction(-2, 3))),
])
def test_discrepancies(entries, expected):
    assert discrepancies(Chain(entries)) == expected


def test_discrepancies_2x2_cramer_oracle():
    # [2,5]: solve [[-2,1],[1,-5]] a = (0,3) by Cramer's rule
    det = (-2) * (-5) - 1 * 1
    a1 = Fraction(0 * (-5) - 1 * 3, det)
    a2 = Fraction((-2) * 3 - 0 * 1, det)
    assert (a1, a2) == (Fraction(-1, 3), Fraction(-2, 3))
    assert discrepancies(Chain((2, 5))) == (a1, a2)


def test_discrepancies_defining_equations():
    for entries in ((2, 5), (3, 2, 2, 3), (2, 2, 6), (6, 2, 2), (4, 3, 2)):
        c = Chain(entries)
        g = chain_gram(c)
        a = discrepancies(c)
        for j in range(len(c)):
            assert sum(a[i] * g[i][j] for i in range(len(c))) == c[j] - 2


def test_discrepancy_range_on_t_chains():
    half = Fraction(-1, 2)
    for c in enumerate_t_chains(10):
        disc = discrepancies(c)
        assert all(-1 < x <= 0 for x in disc)
        if classify_chain(c).two_gorenstein:
            assert all(x == half for x in disc)
        else:
            assert any(x != half for x in disc)


def test_solve_exact_singular():
    with pytest.raises(InvariantError):
        solve_exact(((1, 1), (1, 1)), (1, 2))
