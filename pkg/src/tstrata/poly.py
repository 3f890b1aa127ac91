"""Exact integer polynomials in one symbol.

All table entries produced here are integer-linear in the genus parameter n,
but intermediate self-intersection numbers are quadratic, so the class keeps
a full dense coefficient vector.  Everything is plain ``int`` arithmetic; the
only division is the exact halving used by Riemann-Roch, which raises if a
coefficient is odd (that is the parity assertion, not an error path).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError


@dataclass(frozen=True)
class Poly:
    """Dense integer polynomial; ``coeffs[k]`` multiplies the symbol^k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    # -- basic queries ------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def constant(self) -> int:
        if not self.is_constant:
            raise InvariantError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def at(self, value: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _lift(x) -> "Poly | None":
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return Poly((x,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        size = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = o.coeffs + (0,) * (size - len(o.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def half(self) -> "Poly":
        """Exact division by 2; odd coefficients are an invariant breach."""
        if any(c % 2 for c in self.coeffs):
            raise InvariantError(f"parity violation: {self} is not divisible by 2")
        return Poly(tuple(c // 2 for c in self.coeffs))

    # -- comparisons / rendering --------------------------------------
    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def render(self, symbol: str = "n") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k] if k < len(self.coeffs) else 0
            if c == 0:
                continue
            mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
            mag = abs(c)
            body = mono if (mag == 1 and k > 0) else (f"{mag}{mono}" if k > 0 else f"{mag}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()!r})"


#: The genus symbol used throughout (tables are linear in it).
N = Poly((0, 1))


def value_at(x, n: int):
    """Evaluate ``x`` (int or Poly) at a concrete integer."""
    return x.at(n) if isinstance(x, Poly) else x


def simplify(x):
    """Demote a constant Poly to a plain int; pass anything else through."""
    if isinstance(x, Poly) and x.is_constant:
        return x.constant
    return x


def half_exact(x):
    """Exact halving for int or Poly with the shared parity assertion."""
    if isinstance(x, Poly):
        return simplify(x.half())
    if x % 2:
        raise InvariantError(f"parity violation: {x} is not divisible by 2")
    return x // 2


def render_value(x, symbol: str = "n") -> str:
    return x.render(symbol) if isinstance(x, Poly) else str(x)
