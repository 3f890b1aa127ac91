"""Numerical moduli bookkeeping for Horikawa-type surfaces.

Two families, indexed by n (so p_g = n+1) and the scroll type d:

  * first kind:  K^2 = 2p_g - 4, branch class 6D + (n+3+3d)F on F_d,
    admissible when n - d is odd and n >= max(d+3, 2d-3);
  * second kind: K^2 = 2p_g - 3, branch class 6D + (n+5+3d)F,
    admissible when n - d is odd and n >= max(d+3, 2d-2).

On top of the smooth classification sit the strata D'_{n,d} / D''_{n,d} of
stable second-kind surfaces whose minimal resolution is a first-kind surface
carrying a 2-Gorenstein T-chain over a ruling; D'' collects the cases where
the chain meets the strict transform of the negative section.  Their
dimensions (TABLE1 rows) admit two independent computations: closed forms,
and dim|L_i0| minus the automorphism dimension of the blown-up surface.

Empty strata are the explicit EMPTY sentinel, never -1 arithmetic; the
text renderer can print -1 for byte-compatible reproduction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantError
from .lattice import DivisorClass, hirzebruch
from . import systems
from .poly import simplify

D_PRIME = "D'"
D_SECOND = "D''"
FIRST = "first"
SECOND = "second"


class _Empty:
    """Sentinel for an empty stratum (distinct from any dimension)."""

    def __repr__(self):
        return "EMPTY"

    def __str__(self):
        return "∅"


EMPTY = _Empty()


def is_empty(x) -> bool:
    return isinstance(x, _Empty)


# ----------------------------------------------------------------------
# admissibility (single source of parity truth)
# ----------------------------------------------------------------------

def admissible(kind: str, n: int, d: int) -> bool:
    if kind == FIRST:
        floor = max(d + 3, 2 * d - 3)
    elif kind == SECOND:
        floor = max(d + 3, 2 * d - 2)
    else:
        raise DomainError(f"kind must be 'first' or 'second', got {kind!r}")
    return d >= 0 and (n - d) % 2 == 1 and n >= floor


def require_admissible(kind: str, n: int, d: int) -> None:
    if not admissible(kind, n, d):
        raise DomainError(
            f"(n, d) = ({n}, {d}) not admissible for the {kind} kind "
            f"(need n - d odd and n >= max(d+3, 2d-{3 if kind == FIRST else 2}))"
        )


def admissible_d_range(kind: str, n: int) -> list[int]:
    return [d for d in range(0, (n + 3) // 2 + 1) if admissible(kind, n, d)]


# ----------------------------------------------------------------------
# smooth-surface invariants and components
# ----------------------------------------------------------------------

def invariants(kind: str, n: int) -> tuple[int, int, int]:
    """(p_g, K^2, chi(O)) for the family with p_g = n + 1."""
    if kind == FIRST:
        if n < 2:
            raise DomainError(f"first kind needs n >= 2, got {n}")
        return n + 1, 2 * n - 2, n + 2
    if kind == SECOND:
        if n < 1:
            raise DomainError(f"second kind needs n >= 1, got {n}")
        return n + 1, 2 * n - 1, n + 2
    raise DomainError(f"kind must be 'first' or 'second', got {kind!r}")


def branch_class(kind: str, n: int, d: int) -> DivisorClass:
    """Branch curve class on F_d (basis D, F)."""
    require_admissible(kind, n, d)
    lat = hirzebruch(d)
    shift = 3 if kind == FIRST else 5
    return lat.divisor(D=6, F=n + shift + 3 * d)


@dataclass(frozen=True)
class StratumRecord:
    tag: str              # "Hor2", "D'" or "D''"
    n: int
    d: int
    dim: object           # int, Poly, or EMPTY
    nu: int | None
    is_component: bool
    regime: str
    formula: str          # closed form as text ("7n+19-d", "EMPTY", ...)
    eta: int | None = None
    dense: bool | None = None


def stratum_dim_second(n: int, d: int) -> StratumRecord:
    """Dimension of the type-(d) stratum of smooth second-kind surfaces.

    eta = max(0, 3d - n - 4) measures how far the negative section is forced
    into the branch curve; eta <= d - 2 whenever positive.
    """
    require_admissible(SECOND, n, d)
    eta = max(0, 3 * d - n - 4)
    if eta > 0 and eta > d - 2:
        raise InvariantError(f"eta = {eta} exceeds d - 2 = {d - 2} at ({n}, {d})")
    if d == 0:
        dim, formula, dense = 7 * n + 19, "7n+19", True
        nu = 0
    elif eta == 0:
        dim, formula, dense = 7 * n + 20 - d, "7n+20-d", d == 1
        nu = 0
    else:
        dim, formula, dense = 7 * n + 21 + eta - d, "7n+21+eta-d", False
        nu = n + 2 - 2 * d  # A_1 points of the general member; equals d-2-eta
        if dim > 7 * n + 19 or (dim == 7 * n + 19) != (eta == d - 2):
            raise InvariantError(f"stratum dimension bound violated at ({n}, {d})")
    return StratumRecord(
        tag="Hor2", n=n, d=d, dim=dim, nu=nu,
        is_component=(dim == 7 * n + 19), regime="eta>0" if eta else "eta=0",
        formula=formula, eta=eta, dense=dense,
    )


@dataclass(frozen=True)
class ModuliComponent:
    kind: str
    n: int
    tag: str             # "1", "1a", "1b", "2", "2a", "2b"
    dim: int
    d_values: str        # description of the scroll types it contains


def moduli_components(kind: str, n: int) -> list[ModuliComponent]:
    """Irreducible components of the moduli space of the smooth family.

    One component except when 8 | 2n-2 (first kind, n = 4k+1, k >= 2) or
    4 | n (second kind, n = 4k, k >= 2), which split into a/b.
    """
    if kind == FIRST:
        if n < 6:
            raise DomainError(f"first-kind component count needs n >= 6, got {n}")
        dim = 7 * n + 21
        if (2 * n - 2) % 8 == 0:
            k = (2 * n - 2) // 8
            return [
                ModuliComponent(kind, n, "1a", dim, f"d even, 0 <= d <= {2 * k}"),
                ModuliComponent(kind, n, "1b", dim, f"d = {2 * k + 2}"),
            ]
        return [ModuliComponent(kind, n, "1", dim, "all admissible d")]
    if kind == SECOND:
        if n < 7:
            raise DomainError(f"second-kind component count needs n >= 7, got {n}")
        dim = 7 * n + 19
        if n % 4 == 0:
            k = n // 4
            return [
                ModuliComponent(kind, n, "2a", dim, f"d odd, 1 <= d <= {2 * k - 1}"),
                ModuliComponent(kind, n, "2b", dim, f"d = {2 * k + 1}"),
            ]
        return [ModuliComponent(kind, n, "2", dim, "all admissible d")]
    raise DomainError(f"kind must be 'first' or 'second', got {kind!r}")


# ----------------------------------------------------------------------
# the T-singular strata D'_{n,d} and D''_{n,d}
# ----------------------------------------------------------------------

def table1_regime(n: int, d: int) -> str:
    """Row of the stratum-dimension table (first-kind admissibility)."""
    require_admissible(FIRST, n, d)
    if d == 0:
        return "d0"
    if n >= 3 * d - 1:
        return "ge3dm1"
    if n == 3 * d - 3:
        return "eq3dm3"
    if n == 2 * d - 3:
        return "eq2dm3"
    return "mid"  # 2d-2 <= n <= 3d-5


#: regime -> ((dim D', formula, is_component), (dim D'', formula, is_component))
#: EMPTY rows carry None formulas.
TABLE1 = {
    "d0": ((lambda n, d: 7 * n + 18, "7n+18", True), (None, None, False)),
    "ge3dm1": (
        (lambda n, d: 7 * n + 19 - d, "7n+19-d", True),
        (lambda n, d: 7 * n + 18 - d, "7n+18-d", False),
    ),
    "eq3dm3": (
        (lambda n, d: 7 * n + 19 - d, "7n+19-d", True),
        (lambda n, d: 7 * n + 19 - d, "7n+19-d", True),
    ),
    "mid": (
        (lambda n, d: 6 * n + 2 * d + 15, "6n+2d+15", True),
        (lambda n, d: 6 * n + 2 * d + 16, "6n+2d+16", True),
    ),
    "eq2dm3": ((lambda n, d: 7 * n + 18, "7n+18", True), (None, None, False)),
}


def aut_dim_y00(d: int) -> int:
    """dim Aut of F_d blown up at two general points of a ruling off the
    negative section; the d = 0 value is 3."""
    return 3 if d == 0 else d + 2


def aut_dim_y10(d: int) -> int:
    """dim Aut of the blow-up with P1 on the negative section (d > 0)."""
    if d <= 0:
        raise DomainError("the P1-on-section configuration needs d > 0")
    return d + 3


def d_second_empty(n: int, d: int) -> bool:
    """D''_{n,d} is empty exactly for d = 0 and for n = 2d-3 (the section
    and the rest of the branch curve are disjoint there)."""
    return d == 0 or n == 2 * d - 3


def nu_count(n: int, d: int, which: str) -> int:
    """Number of A_1 points on the general surface of the stratum:
    0 for n >= 3d-3 and for n = 2d-3; otherwise n+3-2d (D') or n+2-2d (D'')."""
    require_admissible(FIRST, n, d)
    if which not in (D_PRIME, D_SECOND):
        raise DomainError(f"which must be {D_PRIME!r} or {D_SECOND!r}, got {which!r}")
    if which == D_SECOND and d_second_empty(n, d):
        raise DomainError(f"{D_SECOND} stratum is empty at (n, d) = ({n}, {d})")
    if n >= 3 * d - 3 or n == 2 * d - 3:
        return 0
    return n + 3 - 2 * d if which == D_PRIME else n + 2 - 2 * d


def d_strata(n: int, d: int) -> tuple[StratumRecord, StratumRecord]:
    """Records for D'_{n,d} and D''_{n,d}, with the two dimension paths
    (closed form vs linear-system dimension minus Aut) compared exactly."""
    if n < 14:
        raise DomainError(f"stratum table is stated for n >= 14, got {n}")
    require_admissible(FIRST, n, d)
    regime = table1_regime(n, d)
    row_prime, row_second = TABLE1[regime]

    records = []
    for which, row in ((D_PRIME, row_prime), (D_SECOND, row_second)):
        value, formula, is_comp = row
        if which == D_SECOND and d_second_empty(n, d):
            if value is not None:
                raise InvariantError(f"table marks nonempty {which} at ({n}, {d})")
            records.append(
                StratumRecord(which, n, d, EMPTY, None, False, regime, "EMPTY")
            )
            continue
        closed = simplify(value(n, d))
        i = 0 if which == D_PRIME else 1
        analysis = systems.analyze_system(systems.BlowupConfig(d, i, 0), n)
        aut = aut_dim_y00(d) if which == D_PRIME else aut_dim_y10(d)
        lattice_dim = simplify(analysis.dim - aut)
        if lattice_dim != closed:
            raise InvariantError(
                f"dimension paths disagree for {which} at (n, d) = ({n}, {d}): "
                f"lattice {lattice_dim}, closed form {closed}"
            )
        records.append(
            StratumRecord(
                which, n, d, closed, nu_count(n, d, which), is_comp, regime, formula
            )
        )
    return records[0], records[1]


@dataclass(frozen=True)
class DnComponent:
    """One irreducible component of the divisor of T-singular surfaces."""

    n: int
    d: int
    which: str           # D' or D''
    dim: int
    inside: str          # the smooth-family component whose closure holds it


def dn_components(n: int) -> list[DnComponent]:
    """Irreducible components of the T-singular divisor for p_g = n+1.

    One component (d = 0 or 1 by parity) when n = 2, 3 mod 4; a second one
    at d = (n+3)/2 (the n = 2d-3 stratum, a D') when n = 1 mod 4, and at
    d = (n+2)/2 (the n = 2d-2 boundary, a D'') when n = 0 mod 4.
    """
    if n < 14:
        raise DomainError(f"component description is stated for n >= 14, got {n}")
    top = 7 * n + 18
    base_d = 0 if n % 2 == 1 else 1
    comps = [DnComponent(n, base_d, D_PRIME, top, "Hor2" if n % 4 else "Hor2a")]
    if n % 4 == 1:
        comps.append(DnComponent(n, (n + 3) // 2, D_PRIME, top, "Hor2"))
    elif n % 4 == 0:
        comps.append(DnComponent(n, (n + 2) // 2, D_SECOND, top, "Hor2b"))
    return comps


# ----------------------------------------------------------------------
# intersection forms
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class IntersectionForm:
    rank: int
    signature: int
    parity: str          # "even" | "odd"
    even_class: bool     # canonical class divisible by 2
    standard_form: str   # Freedman homeomorphism class of the minimal model


def component_tags(kind: str, n: int) -> list[str]:
    """Valid component tags for the topology classifier at this n."""
    if kind == FIRST:
        if n < 3:
            raise DomainError(f"first kind classifier needs n >= 3, got {n}")
        if n >= 9 and (2 * n - 2) % 8 == 0:
            return ["1a", "1b"]
        return ["1"]
    if kind == SECOND:
        if n < 1:
            raise DomainError(f"second kind classifier needs n >= 1, got {n}")
        if n >= 8 and n % 4 == 0:
            return ["2a", "2b"]
        return ["2"]
    raise DomainError(f"kind must be 'first' or 'second', got {kind!r}")


def intersection_form(kind: str, n: int, tag: str) -> IntersectionForm:
    """Rank, signature, parity and homeomorphism class of the intersection
    form of the minimal models in the given moduli component.

    rank = 12 chi - K^2 - 2 and signature = K^2 - 8 chi (simply connected,
    so these pin the form once parity is known).  Second-kind forms are odd
    (K^2 odd); first-kind component 1b is even exactly when n = 5 mod 8
    (2-divisible canonical class), everything else odd.  Even forms must
    have signature divisible by 16, which is asserted.
    """
    if tag not in component_tags(kind, n):
        raise DomainError(
            f"no component tagged {tag!r} for the {kind} kind at n = {n}"
        )
    _, k2, chi = invariants(kind, n)
    rank = 12 * chi - k2 - 2
    signature = k2 - 8 * chi
    even = kind == FIRST and tag == "1b" and n % 8 == 5
    if even and signature % 16 != 0:
        raise InvariantError(
            f"even form with signature {signature} not divisible by 16 (n = {n})"
        )
    if even:
        e8 = signature // 8                      # signed number of E8 blocks
        hyp = (rank - abs(signature)) // 2
        form = f"{e8}E8 + {hyp}H"
    else:
        pos = (rank + signature) // 2
        neg = (rank - signature) // 2
        form = f"{pos}<1> + {neg}<-1>"
    return IntersectionForm(rank, signature, "even" if even else "odd", even, form)
