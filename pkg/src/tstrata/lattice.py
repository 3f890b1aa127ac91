"""Exact intersection theory on labeled Picard lattices.

A lattice is a labeled integer basis with a symmetric Gram pairing and a
canonical class; divisor classes are coordinate vectors whose entries may be
integers or :class:`~tstrata.poly.Poly` values (linear forms in the genus
symbol), so table rows like ``7n+21`` come out as closed forms.

Constructors cover what the tables need: the Hirzebruch surface F_d with
basis (D, F), D^2 = -d, D.F = 1, F^2 = 0, K = -2D - (d+2)F, and iterated
blow-ups appending (-1)-classes orthogonal to everything older.  Every
constructed lattice satisfies K^2 + rank = 10 with chi(O) = 1, and that is
asserted, not assumed.

Definiteness checks and determinants are exact (fraction-free Bareiss);
linear solves run over :class:`fractions.Fraction`.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantError
from .hj import Chain
from .poly import Poly, half_exact, simplify, value_at


@dataclass(frozen=True)
class DivisorClass:
    """Integer (or Poly) coordinate vector in a lattice basis."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(simplify(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise DomainError("divisor classes live in different lattices")
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise DomainError("divisor classes live in different lattices")
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coords))

    def __rmul__(self, scalar):
        return DivisorClass(tuple(scalar * a for a in self.coords))

    def at(self, n: int) -> "DivisorClass":
        """Evaluate symbolic coordinates at a concrete genus value."""
        return DivisorClass(tuple(value_at(c, n) for c in self.coords))


@dataclass(frozen=True)
class PicardLattice:
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]
    chi_o: int = 1

    def __post_init__(self):
        rank = len(self.labels)
        if len(set(self.labels)) != rank:
            raise DomainError(f"duplicate basis labels in {self.labels}")
        if len(self.gram) != rank or any(len(row) != rank for row in self.gram):
            raise DomainError("Gram matrix size does not match basis")
        for i in range(rank):
            for j in range(rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DomainError("Gram matrix not symmetric")

    @property
    def rank(self) -> int:
        return len(self.labels)

    # -- class constructors -------------------------------------------
    def basis(self, label: str) -> DivisorClass:
        if label not in self.labels:
            raise DomainError(f"unknown basis label {label!r}")
        i = self.labels.index(label)
        return DivisorClass(tuple(1 if k == i else 0 for k in range(self.rank)))

    def divisor(self, **coeffs) -> DivisorClass:
        unknown = set(coeffs) - set(self.labels)
        if unknown:
            raise DomainError(f"unknown basis labels {sorted(unknown)}")
        return DivisorClass(tuple(coeffs.get(lbl, 0) for lbl in self.labels))

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank)

    @property
    def k(self) -> DivisorClass:
        return DivisorClass(self.canonical)

    # -- pairing and numerics ------------------------------------------
    def intersect(self, a: DivisorClass, b: DivisorClass):
        """a . b through the Gram pairing (skips zero coordinates)."""
        if len(a) != self.rank or len(b) != self.rank:
            raise DomainError("coordinate length does not match lattice rank")
        total = 0
        for i, ai in enumerate(a.coords):
            if ai == 0:
                continue
            row = self.gram[i]
            for j, bj in enumerate(b.coords):
                if bj == 0 or row[j] == 0:
                    continue
                total = total + ai * bj * row[j]
        return simplify(total)

    @property
    def k_squared(self):
        return self.intersect(self.k, self.k)

    def chi_rr(self, a: DivisorClass):
        """Riemann-Roch Euler characteristic chi(a) = chi(O) + a.(a-K)/2."""
        return simplify(self.chi_o + half_exact(self.intersect(a, a - self.k)))

    def arithmetic_genus(self, a: DivisorClass):
        """Adjunction genus p_a(a) = 1 + a.(a+K)/2."""
        return simplify(1 + half_exact(self.intersect(a, a + self.k)))

    def pairing_report(self, a: DivisorClass, curves: dict[str, DivisorClass]) -> dict:
        """All pairings a.C for a named set of classes; sign checks are the
        caller's business (this is a finite certificate, not a nefness proof)."""
        return {name: self.intersect(a, c) for name, c in curves.items()}

    # -- constructors --------------------------------------------------
    def blow_up(self, *new_labels: str) -> "PicardLattice":
        """Append orthogonal (-1)-classes; K gains each new class, so K^2
        drops by one per blow-up."""
        if not new_labels:
            raise DomainError("blow_up needs at least one fresh label")
        for lbl in new_labels:
            if lbl in self.labels or new_labels.count(lbl) > 1:
                raise DomainError(f"blow-up label {lbl!r} is not fresh")
        old = self.rank
        extra = len(new_labels)
        rank = old + extra
        gram = tuple(
            tuple(
                (self.gram[i][j] if i < old and j < old else (-1 if i == j else 0))
                for j in range(rank)
            )
            for i in range(rank)
        )
        lat = PicardLattice(
            labels=self.labels + tuple(new_labels),
            gram=gram,
            canonical=self.canonical + (1,) * extra,
            chi_o=self.chi_o,
        )
        _assert_noether(lat)
        return lat


def _assert_noether(lat: PicardLattice) -> None:
    if lat.k_squared + lat.rank != 10:
        raise InvariantError(
            f"K^2 + rank = {lat.k_squared + lat.rank} != 10 on {lat.labels}"
        )


def hirzebruch(d: int) -> PicardLattice:
    """The rank-2 lattice of F_d in the basis (D, F)."""
    if d < 0:
        raise DomainError(f"Hirzebruch parameter must be >= 0, got {d}")
    lat = PicardLattice(
        labels=("D", "F"),
        gram=((-d, 1), (1, 0)),
        canonical=(-2, -(d + 2)),
    )
    _assert_noether(lat)
    return lat


# ----------------------------------------------------------------------
# chain lattices
# ----------------------------------------------------------------------

def chain_gram(c: Chain) -> tuple[tuple[int, ...], ...]:
    """Tridiagonal intersection matrix: diagonal -e_i, off-diagonal 1."""
    r = len(c)
    return tuple(
        tuple(
            -c[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(r)
        )
        for i in range(r)
    )


def discrepancies(c: Chain) -> tuple[Fraction, ...]:
    """The coefficients (a_1, ..., a_r) writing the canonical class of the
    resolution as pullback plus sum a_i C_i, from adjunction with p_a = 0:
    sum_i a_i (C_i . C_j) = e_j - 2 for each j.  Unique because the chain
    Gram matrix is negative definite."""
    gram = chain_gram(c)
    rhs = [Fraction(e - 2) for e in c]
    return tuple(solve_exact(gram, rhs))


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Gaussian elimination over Fraction with partial (nonzero) pivoting."""
    r = len(rhs)
    m = [[Fraction(matrix[i][j]) for j in range(r)] + [Fraction(rhs[i])] for i in range(r)]
    for col in range(r):
        pivot = next((i for i in range(col, r) if m[i][col] != 0), None)
        if pivot is None:
            raise InvariantError("singular linear system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(r):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][r] for i in range(r)]


def leading_minors(matrix) -> list[int]:
    """Leading principal minors det(M[:k][:k]), k = 1..r, exactly.

    Fraction-free Bareiss elimination: the (k, k) entry entering step k is
    the (k+1)-st leading minor.  The recursion needs nonzero pivots, so the
    list stops after a zero minor; a zero minor already refutes definiteness,
    which is all this feeds.
    """
    r = len(matrix)
    m = [[int(x) for x in row] for row in matrix]
    minors = []
    prev = 1
    for k in range(r):
        minors.append(m[k][k])
        if m[k][k] == 0:
            break
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return minors


def det_exact(matrix) -> int:
    """Integer determinant via Fraction-pivoted elimination (handles zero
    leading minors, unlike plain Bareiss)."""
    r = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(r):
        pivot = next((i for i in range(col, r) if m[i][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, r):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    assert det.denominator == 1
    return int(det)


def is_negative_definite(matrix) -> bool:
    """Exact Sylvester test: leading principal minors alternate in sign
    starting negative."""
    r = len(matrix)
    if any(len(row) != r for row in matrix):
        raise DomainError("matrix must be square")
    for i in range(r):
        for j in range(r):
            if matrix[i][j] != matrix[j][i]:
                raise DomainError("matrix must be symmetric")
    sign = -1
    for k, minor in enumerate(leading_minors(matrix)):
        if minor * sign <= 0:
            return False
        sign = -sign
    return True
