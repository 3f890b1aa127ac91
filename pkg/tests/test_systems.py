import pytest
from hypothesis import given, strategies as st

from tstrata.errors import DomainError
from tstrata.poly import N
from tstrata.systems import (
    BlowupConfig,
    admissible,
    admissible_d_range,
    analyze_system,
    config_lattice,
    is_reduced,
    l_class,
    regime_of,
    ruling_transform,
    strict_section,
    table2_dim,
    table2_formula,
)


def test_config_validation():
    BlowupConfig(0, 0, 1)
    BlowupConfig(3, 1, 1)
    with pytest.raises(DomainError):
        BlowupConfig(0, 1, 0)
    with pytest.raises(DomainError):
        BlowupConfig(-1, 0, 0)
    with pytest.raises(DomainError):
        BlowupConfig(2, 2, 0)


def test_admissibility():
    assert admissible(13, 0) and not admissible(12, 0)
    assert admissible(14, 1)
    assert not admissible(5, 4)  # 5 < d+3 = 7
    assert admissible(17, 10)    # n = 2d-3
    assert not admissible(15, 9)  # parity
    with pytest.raises(DomainError):
        regime_of(12, 0)


def test_regimes():
    assert regime_of(20, 7) == "ge3dm1"  # 20 >= 20
    assert regime_of(24, 9) == "eq3dm3"
    assert regime_of(20, 9) == "mid"
    assert regime_of(16, 9) == "eq2dm2"
    assert regime_of(17, 10) == "eq2dm3"
    assert regime_of(15, 0) == "ge3dm1"
    assert regime_of(14, 1) == "ge3dm1"


def test_admissible_d_range():
    assert admissible_d_range(20) == [1, 3, 5, 7, 9, 11]
    assert admissible_d_range(17) == [0, 2, 4, 6, 8, 10]


def test_l_class_example():
    cfg = BlowupConfig(0, 0, 0)
    lat = config_lattice(cfg)
    L = l_class(cfg, 13)
    assert L.coords == (6, 16, -2, -2)
    assert lat.intersect(L, L) == 184
    assert lat.intersect(L, ruling_transform(lat)) == 2


def test_l_class_pairings_with_section():
    for d, i in ((4, 0), (4, 1)):
        cfg = BlowupConfig(d, i, 0)
        lat = config_lattice(cfg)
        L = lat.divisor(D=6, F=N + 3 + 3 * d, E1=-2, E2=-2)
        expected = N + 3 - 3 * d if i == 0 else N + 1 - 3 * d
        assert lat.intersect(L, strict_section(cfg, lat)) == expected


def test_l_class_inadmissible():
    with pytest.raises(DomainError):
        l_class(BlowupConfig(0, 0, 0), 12)  # parity
    with pytest.raises(DomainError):
        l_class(BlowupConfig(9, 0, 0), 10)  # below d+3


# frozen closed forms: (regime, i) -> dims for a concrete admissible cell
TABLE2_CELLS = [
    # (n, d, i, j, expected dim)
    (20, 7, 0, 0, 161), (20, 7, 0, 1, 161), (20, 7, 1, 0, 161), (20, 7, 1, 1, 161),
    (24, 9, 0, 0, 189), (24, 9, 1, 0, 190), (24, 9, 1, 1, 190),
    (20, 9, 0, 0, 164), (20, 9, 1, 0, 166), (20, 9, 1, 1, 166),
    (16, 9, 0, 0, 140), (16, 9, 1, 0, 142),
    (17, 10, 0, 0, 149), (17, 10, 0, 1, 149),
    (15, 0, 0, 0, 126), (15, 0, 0, 1, 126),
]


@pytest.mark.parametrize("n,d,i,j,expected", TABLE2_CELLS)
def test_analyze_dimensions(n, d, i, j, expected):
    analysis = analyze_system(BlowupConfig(d, i, j), n)
    assert analysis.reduced
    assert analysis.dim == expected
    assert analysis.dim == table2_dim(analysis.regime, i, n, d)
    # L = Z + M by construction; verify the decomposition recorded
    assert (analysis.Z + analysis.M).coords == analysis.L.coords


@pytest.mark.parametrize("n,d,i,j", [
    (17, 10, 1, 0), (17, 10, 1, 1),  # n = 2d-3, i = 1
    (16, 9, 1, 1),                   # n = 2d-2, i = j = 1
])
def test_non_reduced_cells(n, d, i, j):
    analysis = analyze_system(BlowupConfig(d, i, j), n)
    assert not analysis.reduced
    assert analysis.Z is None and analysis.M is None and analysis.dim is None


def test_reduced_flag_table():
    assert not is_reduced(BlowupConfig(10, 1, 0), "eq2dm3")
    assert not is_reduced(BlowupConfig(9, 1, 1), "eq2dm2")
    assert is_reduced(BlowupConfig(9, 1, 0), "eq2dm2")
    assert is_reduced(BlowupConfig(9, 0, 1), "eq2dm2")


def test_fixed_parts_match_table():
    assert analyze_system(BlowupConfig(7, 0, 0), 20).Z_name == "0"
    assert analyze_system(BlowupConfig(9, 1, 0), 24).Z_name == "D'"
    assert analyze_system(BlowupConfig(9, 1, 1), 20).Z_name == "D'+(E1-E2)"
    assert analyze_system(BlowupConfig(9, 0, 0), 16).Z_name == "D'"


def test_symbolic_interval_rows_match_closed_forms():
    # on the interval rows the lattice dimension is a polynomial identity
    for d in (7, 9, 11):
        for i in (0, 1):
            for regime in ("ge3dm1", "mid"):
                analysis = analyze_system(BlowupConfig(d, i, 0), N, regime=regime)
                assert analysis.dim == table2_dim(regime, i, N, d)


def test_symbolic_boundary_rows_match_pointwise():
    # boundary rows fix n as a function of d, so compare at that point
    for d, regime, n_at in ((9, "eq3dm3", 24), (9, "eq2dm2", 16), (10, "eq2dm3", 17)):
        for i in (0, 1):
            cfg = BlowupConfig(d, i, 0)
            if not is_reduced(cfg, regime):
                continue
            analysis = analyze_system(cfg, N, regime=regime)
            closed = table2_dim(regime, i, n_at, d)
            assert analysis.dim.at(n_at) == closed


def test_symbolic_needs_regime():
    with pytest.raises(DomainError):
        analyze_system(BlowupConfig(3, 0, 0), N)
    with pytest.raises(DomainError):
        analyze_system(BlowupConfig(3, 0, 0), N, regime="nope")
    with pytest.raises(DomainError):
        analyze_system(BlowupConfig(3, 0, 0), 20, regime="mid")  # wrong row


def test_j_dimension_equality_sweep():
    for n in range(14, 40):
        for d in admissible_d_range(n):
            for i in (0, 1):
                if i == 1 and d == 0:
                    continue
                a0 = analyze_system(BlowupConfig(d, i, 0), n)
                a1 = analyze_system(BlowupConfig(d, i, 1), n)
                if a0.reduced and a1.reduced:
                    assert a0.dim == a1.dim


def test_sign_certificates_sweep():
    for n in range(14, 36):
        for d in admissible_d_range(n):
            for i in (0, 1):
                if i == 1 and d == 0:
                    continue
                for j in (0, 1):
                    analysis = analyze_system(BlowupConfig(d, i, j), n)
                    if not analysis.reduced:
                        continue
                    lat = config_lattice(analysis.config)
                    ds = strict_section(analysis.config, lat)
                    dl = lat.intersect(ds, analysis.L)
                    assert (dl < 0) == ("D'" in analysis.Z_name)
                    if "D'" in analysis.Z_name:
                        assert lat.intersect(ds, analysis.L - ds) >= 0
                    if analysis.Z_name == "D'+(E1-E2)":
                        e = lat.divisor(E1=1, E2=-1)
                        assert lat.intersect(e, analysis.L - ds) == -1


@given(st.integers(14, 120))
def test_every_admissible_cell_analyzes(n):
    for d in admissible_d_range(n):
        for i in (0, 1):
            if i == 1 and d == 0:
                continue
            for j in (0, 1):
                analysis = analyze_system(BlowupConfig(d, i, j), n)
                assert analysis.regime == regime_of(n, d)
                if analysis.reduced:
                    assert analysis.dim == table2_dim(analysis.regime, i, n, d)


def test_table2_formula_strings():
    assert table2_formula("ge3dm1", 0) == "7n+21"
    assert table2_formula("eq2dm3", 1) is None
