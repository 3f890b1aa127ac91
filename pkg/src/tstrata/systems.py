"""Linear systems on F_d blown up at two points of one ruling.

Configurations are indexed by (d, i, j): the two centers P1, P2 sit on a
ruling R, with i = 1 iff P1 lies on the negative section D (needs d > 0) and
j = 1 iff P2 is infinitely near P1.  P2 never lies on D.  The lattice is the
same rank-4 lattice for j = 0 and j = 1 (basis D, F, E1, E2 with orthogonal
(-1)-classes); what changes with j = 1 is effectivity: E1 - E2 becomes an
effective (-2)-class and can enter fixed parts.

For admissible (n, d) (n - d odd, n >= max(2d-3, d+3)) the class analysed is

    L = 6D + (n+3+3d)F - 2E1 - 2E2.

``analyze_system`` reports whether the general member is reduced, the fixed
part Z (a finite case table verified by sign certificates: a class lands in
Z exactly when it pairs negatively against the residual system), the moving
part M = L - Z, and dim|L| = (M^2 - M.K)/2.  The same dimension has a
closed form per regime row (TABLE2), giving an independent second path.

Regime rows for d >= 1 (n = 3d-2 and 3d-4 are killed by parity):

    ge3dm1   n >= 3d-1
    eq3dm3   n  = 3d-3
    mid      2d-1 <= n <= 3d-5
    eq2dm2   n  = 2d-2
    eq2dm3   n  = 2d-3

For d <= 1 only ge3dm1 is reachable; d = 0 forces i = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .lattice import DivisorClass, PicardLattice, hirzebruch
from .poly import Poly, half_exact, simplify, value_at


@dataclass(frozen=True)
class BlowupConfig:
    d: int
    i: int
    j: int

    def __post_init__(self):
        if self.d < 0:
            raise DomainError(f"d must be >= 0, got {self.d}")
        if self.i not in (0, 1) or self.j not in (0, 1):
            raise DomainError(f"i, j must be 0 or 1, got ({self.i}, {self.j})")
        if self.d == 0 and self.i == 1:
            raise DomainError("d = 0 forces i = 0 (no negative section to sit on)")

    def __str__(self):
        return f"Y{self.i}{self.j}(d={self.d})"


def admissible(n: int, d: int) -> bool:
    """(n, d) admissible for these configurations: n - d odd and
    n >= max(2d-3, d+3)."""
    return (n - d) % 2 == 1 and n >= max(2 * d - 3, d + 3)


def require_admissible(n: int, d: int) -> None:
    if (n - d) % 2 != 1:
        raise DomainError(f"n - d must be odd, got (n, d) = ({n}, {d})")
    if n < max(2 * d - 3, d + 3):
        raise DomainError(
            f"need n >= max(2d-3, d+3) = {max(2 * d - 3, d + 3)}, got n = {n}"
        )


def regime_of(n: int, d: int) -> str:
    """Table row for concrete admissible (n, d)."""
    require_admissible(n, d)
    if n >= 3 * d - 1:
        return "ge3dm1"
    if n == 3 * d - 3:
        return "eq3dm3"
    if n == 2 * d - 2:
        return "eq2dm2"
    if n == 2 * d - 3:
        return "eq2dm3"
    return "mid"


REGIMES = ("ge3dm1", "eq3dm3", "mid", "eq2dm2", "eq2dm3")

#: dim|L| closed forms per regime, for i = 0 and i = 1 (None: non-reduced).
#: Values agree with dim|L| for j = 1 as well wherever that cell is reduced.
TABLE2 = {
    "ge3dm1": (
        (lambda n, d: 7 * n + 21, "7n+21"),
        (lambda n, d: 7 * n + 21, "7n+21"),
    ),
    "eq3dm3": (
        (lambda n, d: 7 * n + 21, "7n+21"),
        (lambda n, d: 7 * n + 22, "7n+22"),
    ),
    "mid": (
        (lambda n, d: 6 * n + 3 * d + 17, "6n+3d+17"),
        (lambda n, d: 6 * n + 3 * d + 19, "6n+3d+19"),
    ),
    "eq2dm2": (
        (lambda n, d: 7 * n + d + 19, "7n+d+19"),
        (lambda n, d: 7 * n + d + 21, "7n+d+21"),
    ),
    "eq2dm3": (
        (lambda n, d: 6 * n + 3 * d + 17, "6n+3d+17"),
        None,
    ),
}

#: Fixed part Z per regime and (i, j): "0", "D'", "D'+(E1-E2)", or None
#: when the general member is non-reduced.
TABLE3 = {
    "ge3dm1": {(0, 0): "0", (0, 1): "0", (1, 0): "0", (1, 1): "0"},
    "eq3dm3": {(0, 0): "0", (0, 1): "0", (1, 0): "D'", (1, 1): "D'+(E1-E2)"},
    "mid": {(0, 0): "D'", (0, 1): "D'", (1, 0): "D'", (1, 1): "D'+(E1-E2)"},
    "eq2dm2": {(0, 0): "D'", (0, 1): "D'", (1, 0): "D'", (1, 1): None},
    "eq2dm3": {(0, 0): "D'", (0, 1): "D'", (1, 0): None, (1, 1): None},
}


def config_lattice(cfg: BlowupConfig) -> PicardLattice:
    return hirzebruch(cfg.d).blow_up("E1", "E2")


def strict_section(cfg: BlowupConfig, lat: PicardLattice) -> DivisorClass:
    """Strict transform D' of the negative section (loses E1 when P1 sits
    on it; P2 never does)."""
    return lat.divisor(D=1, E1=-cfg.i)


def ruling_transform(lat: PicardLattice) -> DivisorClass:
    """Strict transform R' of the ruling through P1, P2: a (-2)-class."""
    return lat.divisor(F=1, E1=-1, E2=-1)


def l_class(cfg: BlowupConfig, n) -> DivisorClass:
    """The analysed class 6D + (n+3+3d)F - 2E1 - 2E2 in the Y_ij lattice."""
    if isinstance(n, int):
        require_admissible(n, cfg.d)
    lat = config_lattice(cfg)
    return lat.divisor(D=6, F=n + 3 + 3 * cfg.d, E1=-2, E2=-2)


def is_reduced(cfg: BlowupConfig, regime: str) -> bool:
    """General member reduced unless (n = 2d-3, i = 1) or
    (n = 2d-2, i = j = 1)."""
    if regime == "eq2dm3" and cfg.i == 1:
        return False
    if regime == "eq2dm2" and cfg.i == 1 and cfg.j == 1:
        return False
    return True


@dataclass(frozen=True)
class SystemAnalysis:
    """Verdict for one |L| on one configuration.

    When the general member is non-reduced, Z, M and dim are all None; that
    cell never degrades to -1 arithmetic.
    """

    config: BlowupConfig
    n: object  # int or Poly
    regime: str
    L: DivisorClass
    reduced: bool
    Z: DivisorClass | None
    Z_name: str | None
    M: DivisorClass | None
    dim: object | None


def analyze_system(cfg: BlowupConfig, n, regime: str | None = None) -> SystemAnalysis:
    """Analyse |L| on Y_ij: fixed part, moving part, dimension.

    With concrete n the regime is detected (and admissibility enforced);
    with symbolic n the caller must name the regime row.  In reduced cells
    the dimension is (M^2 - M.K)/2, asserted even, and at concrete n we
    also check M^2 > 0 and M.K < 0, the inputs the closed forms rely on.
    """
    if isinstance(n, int):
        detected = regime_of(n, cfg.d)
        if regime is not None and regime != detected:
            raise DomainError(
                f"(n, d) = ({n}, {cfg.d}) lies in regime {detected!r}, not {regime!r}"
            )
        regime = detected
    elif regime is None:
        raise DomainError("symbolic n needs an explicit regime row")
    elif regime not in REGIMES:
        raise DomainError(f"unknown regime {regime!r}")

    lat = config_lattice(cfg)
    L = lat.divisor(D=6, F=n + 3 + 3 * cfg.d, E1=-2, E2=-2)
    if not is_reduced(cfg, regime):
        return SystemAnalysis(cfg, n, regime, L, False, None, None, None, None)

    z_name = TABLE3[regime][(cfg.i, cfg.j)]
    d_strict = strict_section(cfg, lat)
    if z_name == "0":
        Z = lat.zero()
    elif z_name == "D'":
        Z = d_strict
    elif z_name == "D'+(E1-E2)":
        Z = d_strict + lat.divisor(E1=1, E2=-1)
    else:  # pragma: no cover - TABLE3 marks non-reduced cells with None
        raise DomainError(f"no fixed part recorded for {cfg} in regime {regime}")

    M = L - Z
    mk = lat.intersect(M, lat.k)
    dim = simplify(half_exact(lat.intersect(M, M) - mk))
    if isinstance(n, int):
        if value_at(lat.intersect(M, M), n) <= 0:
            raise DomainError(f"M^2 <= 0 for {cfg} at (n, d) = ({n}, {cfg.d})")
        if value_at(mk, n) >= 0:
            raise DomainError(f"M.K >= 0 for {cfg} at (n, d) = ({n}, {cfg.d})")
    return SystemAnalysis(cfg, n, regime, L, True, Z, z_name, M, dim)


def table2_dim(regime: str, i: int, n, d: int):
    """Closed-form dim|L_i0| (= dim|L_i1| where reduced); None for the
    non-reduced cell."""
    entry = TABLE2[regime][i]
    if entry is None:
        return None
    value, _ = entry
    return simplify(value(n, d))


def table2_formula(regime: str, i: int) -> str | None:
    entry = TABLE2[regime][i]
    return None if entry is None else entry[1]


def admissible_d_range(n: int) -> list[int]:
    """All d with (n, d) admissible, ascending."""
    return [d for d in range(0, (n + 3) // 2 + 1) if admissible(n, d)]
