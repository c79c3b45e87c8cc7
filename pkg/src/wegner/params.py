"""Hexagonal parametrization of n and the minimal boundary count p0(n)."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def ceil_isqrt(x: int) -> int:
    """Smallest r >= 0 with r*r >= x."""
    if x < 0:
        raise ValueError(f"ceil_isqrt of negative number {x}")
    r = isqrt(x)
    return r if r * r == x else r + 1


def hex_number(a: int) -> int:
    """Centered hexagonal number 1 + 6*C(a, 2)."""
    return 1 + 3 * a * (a - 1)


@dataclass(frozen=True, order=True)
class HexParams:
    """The triple (a, b, c) with n = 1 + 6*C(a,2) + a*b + c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a < 1 or not 0 <= self.b <= 5 or not 0 <= self.c < self.a:
            raise ValueError(f"invalid hexagonal parameters {self!r}")

    @property
    def regular(self) -> bool:
        """True when n is a centered hexagonal number (b = c = 0)."""
        return self.b == 0 and self.c == 0


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def decompose(n: int) -> HexParams:
    """Write n = 1 + 6*C(a,2) + a*b + c with a, then b, then c maximal."""
    _require_positive(n)
    # 3a^2 - 3a + 1 <= n  <=>  (6a - 3)^2 <= 12n - 3
    a = (isqrt(12 * n - 3) + 3) // 6
    b, c = divmod(n - hex_number(a), a)
    return HexParams(a, b, c)


def recompose(p: HexParams) -> int:
    return hex_number(p.a) + p.a * p.b + p.c


def p0_of_params(p: HexParams) -> int:
    """6(a-1) + b + 1 - delta(b+c, 0)."""
    return 6 * (p.a - 1) + p.b + 1 - (1 if p.regular else 0)


def p0_of_n(n: int) -> int:
    """ceil(sqrt(12n - 3)) - 3, in exact integer arithmetic."""
    _require_positive(n)
    return ceil_isqrt(12 * n - 3) - 3
