"""Tangent and obstruction dimensions at general T-singular surfaces.

The surface X in the stratum (n, d, which) has minimal resolution a smooth
double cover of Y = F_d blown up at the two ruling points P1, P2 and at the
nu extra branch-curve nodes Q_1..Q_nu on the negative section.  The two
cohomology dimensions reduce to Euler characteristics on Y:

  h2 — sections of a split rank-2 bundle on the line with summand degrees
       (n+d-5)/2 and (n-d-5)/2, both >= -1 once n >= d+3; so
       h2 = sum of (deg+1) over the nonnegative-degree summands = n - 3.

  h1 — assembled as  -chi(T_Y) - chi(K_Y|_B) - chi(K_Y|_Delta)  where
       Delta = R' + A_1 + ... + A_nu, B is the (strict-transform) branch
       curve, -chi(T_Y) = 10 chi(O_Y) - 2 K_Y^2 = 2 nu - 2, and every
       curve chi is Riemann-Roch on the lattice:
       chi(M|_C) = M.C + 1 - p_a(C).

The branch curve splits by regime: irreducible for n >= 3d-3; the strict
transform of the negative section plus a residual curve for n = 2d-3 (both
centers off the section) and for 2d-2 <= n <= 3d-5 (P1 on the section
exactly in the D'' case).  Components are pairwise disjoint after the
blow-ups, which is asserted before the chis are added.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantError
from .lattice import DivisorClass, PicardLattice, hirzebruch
from .moduli import D_PRIME, D_SECOND, FIRST, d_second_empty, nu_count, require_admissible


def h2_tx(n: int, d: int) -> int:
    """Obstruction dimension by the degree sum route; equals n - 3."""
    require_admissible(FIRST, n, d)
    degrees = ((n + d - 5) // 2, (n - d - 5) // 2)
    return sum(deg + 1 for deg in degrees if deg >= 0)


def _chi_restriction(lat: PicardLattice, m: DivisorClass, c: DivisorClass):
    """chi of the line bundle m restricted to a curve of class c."""
    return lat.intersect(m, c) + 1 - lat.arithmetic_genus(c)


@dataclass(frozen=True)
class _Assembly:
    lattice: PicardLattice
    nu: int
    branch_parts: tuple[DivisorClass, ...]
    delta_parts: tuple[DivisorClass, ...]


def _build(n: int, d: int, which: str) -> _Assembly:
    if which not in (D_PRIME, D_SECOND):
        raise DomainError(f"which must be {D_PRIME!r} or {D_SECOND!r}, got {which!r}")
    if which == D_SECOND and d_second_empty(n, d):
        raise DomainError(f"{D_SECOND} stratum is empty at (n, d) = ({n}, {d})")
    nu = nu_count(n, d, which)
    labels = ["E1", "E2"] + [f"A{i}" for i in range(1, nu + 1)]
    lat = hirzebruch(d).blow_up(*labels)
    a_sum = lat.zero()
    for i in range(1, nu + 1):
        a_sum = a_sum + lat.basis(f"A{i}")

    total = (
        lat.divisor(D=6, F=n + 3 + 3 * d, E1=-2, E2=-2) - 2 * a_sum
    )  # strict transform of the branch curve
    if n >= 3 * d - 3:
        branch = (total,)
    elif n == 2 * d - 3:
        branch = (lat.basis("D"), total - lat.basis("D"))
    else:  # 2d-2 <= n <= 3d-5; P1 lies on the section exactly for D''
        section = lat.divisor(D=1, E1=-1 if which == D_SECOND else 0) - a_sum
        branch = (section, total - section)

    ruling = lat.divisor(F=1, E1=-1, E2=-1)
    delta = (ruling,) + tuple(lat.basis(f"A{i}") for i in range(1, nu + 1))

    for parts in (branch, delta):
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                if lat.intersect(parts[a], parts[b]) != 0:
                    raise InvariantError(
                        f"curve components not disjoint at ({n}, {d}, {which})"
                    )
    return _Assembly(lat, nu, branch, delta)


def h1_tx(n: int, d: int, which: str) -> int:
    """Equisingular tangent dimension assembled from lattice chi terms.

    Returns the assembled value without comparing it to the closed form
    7n + 18 - nu; the comparison is the callers' cross-check.
    """
    require_admissible(FIRST, n, d)
    asm = _build(n, d, which)
    lat = asm.lattice
    minus_chi_ty = 10 * lat.chi_o - 2 * lat.k_squared
    if minus_chi_ty != 2 * asm.nu - 2:
        raise InvariantError(
            f"10 chi(O) - 2K^2 = {minus_chi_ty} != 2 nu - 2 at ({n}, {d}, {which})"
        )
    k = lat.k
    chi_b = sum(_chi_restriction(lat, k, c) for c in asm.branch_parts)
    chi_delta = sum(_chi_restriction(lat, k, c) for c in asm.delta_parts)
    return minus_chi_ty - chi_b - chi_delta


@dataclass(frozen=True)
class TangentReport:
    """Tangent/obstruction record at a general point of one stratum.

    The two representation-type bits are recorded facts about how the
    canonical involution acts; nothing here re-derives them.
    """

    n: int
    d: int
    which: str
    nu: int
    h1: int
    h2: int
    qg_tangent_dim: int
    divisor_tangent_dim: int
    smooth_point: bool
    h1_involution_invariant: bool = True
    h2_involution_anti_invariant: bool = True


def tangent_report(n: int, d: int, which: str) -> TangentReport:
    """Assemble h1, h2 and the deformation-space dimensions, cross-checking
    h1 against its closed form.

    The full deformation space has dimension h1 + (1 + nu): one length-1
    local contribution per singular point, all reached.  The stratum of
    non-smoothable directions misses exactly the non-canonical point's
    contribution, so the divisor tangent dimension is one less: 7n + 18.
    """
    if n < 14:
        raise DomainError(f"tangent report is stated for n >= 14, got {n}")
    nu = nu_count(n, d, which)
    h1 = h1_tx(n, d, which)
    if h1 != 7 * n + 18 - nu:
        raise InvariantError(
            f"h1 assembly gives {h1}, closed form {7 * n + 18 - nu} "
            f"at ({n}, {d}, {which})"
        )
    h2 = h2_tx(n, d)
    if h2 != n - 3:
        raise InvariantError(f"h2 degree sum gives {h2} != n - 3 at ({n}, {d})")
    qg = h1 + 1 + nu
    return TangentReport(
        n=n, d=d, which=which, nu=nu, h1=h1, h2=h2,
        qg_tangent_dim=qg, divisor_tangent_dim=qg - 1, smooth_point=True,
    )
