"""Number-theoretic tests for exceptional n.

Three predicates are provided:

* ``check_wegner_conjecture`` -- Wegner's conjectured congruences on (a, b, c),
  known to be wrong (n = 1541551 is a counterexample);
* ``check_boeroeczky_ruzsa`` -- the Boeroeczky-Ruzsa criterion
  ``ceil(sqrt(12n-3))**2 + 3 - 12n == (3k-1) * 9**l``;
* ``check_corrected`` -- the corrected congruence form of the same criterion,
  stated in terms of (a, b, c).

Each returns a witness when n is flagged exceptional and ``None`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .params import HexParams, ceil_isqrt, decompose, p0_of_params


@dataclass(frozen=True)
class BRWitness:
    k: int
    l: int
    discriminant: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.l < 1:
            raise ValueError(f"witness needs k, l >= 1: {self!r}")
        if 9**self.l * (3 * self.k - 1) != self.discriminant:
            raise ValueError(f"inconsistent witness {self!r}")


@dataclass(frozen=True)
class WegnerWitness:
    branch: Literal["b2", "b5"]
    m: int


@dataclass(frozen=True)
class Verdict:
    """All criterion results for one n, plus the packing oracle if it was run."""

    n: int
    params: HexParams
    p0: int
    wegner_conjecture: Optional[WegnerWitness]
    boeroeczky_ruzsa: Optional[BRWitness]
    corrected: Optional[BRWitness]
    oracle: Optional[bool] = None
    solutions: Optional[tuple] = None

    def consistent(self) -> bool:
        flags = [self.boeroeczky_ruzsa is not None, self.corrected is not None]
        if self.oracle is not None:
            flags.append(self.oracle)
        return len(set(flags)) == 1


def valuation3(x: int) -> int:
    """Exponent of 3 in a nonzero integer."""
    if x == 0:
        raise ValueError("3-adic valuation of 0 is infinite")
    v = 0
    while x % 3 == 0:
        x //= 3
        v += 1
    return v


def split_nine_power(d: int) -> Optional[tuple[int, int]]:
    """Return (k, l) with d == (3k-1) * 9**l, k >= 1, l >= 1, or None.

    Because 3k-1 is prime to 3, l is forced to be half the 3-adic valuation.
    """
    if d <= 0:
        return None
    v = valuation3(d)
    if v == 0 or v % 2:
        return None
    l = v // 2
    q = d // 9**l
    if q % 3 != 2:
        return None
    return (q + 1) // 3, l


def br_discriminant(n: int) -> int:
    """ceil(sqrt(12n - 3))**2 + 3 - 12n (always >= 0)."""
    r = ceil_isqrt(12 * n - 3)
    return r * r + 3 - 12 * n


def check_boeroeczky_ruzsa(n: int) -> Optional[BRWitness]:
    d = br_discriminant(n)
    kl = split_nine_power(d)
    if kl is None:
        return None
    return BRWitness(kl[0], kl[1], d)


def param_discriminant(p: HexParams) -> int:
    """12(a - c) + (b - 2)**2 - 9; equals br_discriminant off the regular case."""
    if p.regular:
        raise ValueError("discriminant identity does not hold for b = c = 0")
    return 12 * (p.a - p.c) + (p.b - 2) ** 2 - 9


def check_wegner_conjecture(p: HexParams) -> Optional[WegnerWitness]:
    """Smallest m >= 0 satisfying one of Wegner's two congruences."""
    d = p.a - p.c
    m = 0
    if p.b == 2:
        # 9**(m+1) | d + 6m with d + 6m > 0 needs 9**(m+1) <= d + 6m
        while 9 ** (m + 1) <= d + 6 * m:
            if (d + 6 * m) % 9 ** (m + 1) == 0:
                return WegnerWitness("b2", m)
            m += 1
    elif p.b == 5:
        while 9**m <= d:
            if (d - 6 * 9**m) % 9 ** (m + 1) == 0:
                return WegnerWitness("b5", m)
            m += 1
    return None


def _repunit9(count: int) -> int:
    """sum_{i=0}^{count-1} 9**i (zero for count <= 0)."""
    return (9**count - 1) // 8 if count > 0 else 0


def check_corrected(p: HexParams) -> Optional[BRWitness]:
    """Corrected characterization: factor D, then test the branch congruence."""
    d_ac = p.a - p.c
    if p.b == 2:
        d = 12 * d_ac - 9
    elif p.b == 5:
        d = 12 * d_ac
    else:
        return None
    kl = split_nine_power(d)
    if kl is None:
        return None
    k, l = kl
    mod = 9**l
    if p.b == 2:
        m = _repunit9(l - 1)
        ok = (d_ac + 6 * m) % mod == 0
    else:
        ok = (d_ac - 6 * 9 ** (l - 1)) % mod == 0
    return BRWitness(k, l, d) if ok else None


def induction_lemma_holds(l: int, z: int) -> bool:
    """Is -8*sum_{i<=l-2} 9**i + 12*9**(l-1)*z - 1 of the form 9**(l-1)*(3k-1), k >= 1?"""
    if l < 1 or z < 1:
        raise ValueError("l and z must be positive")
    lhs = -8 * _repunit9(l - 1) + 12 * 9 ** (l - 1) * z - 1
    q, r = divmod(lhs, 9 ** (l - 1))
    return r == 0 and q % 3 == 2 and (q + 1) // 3 >= 1


def verdict(n: int) -> Verdict:
    """Evaluate the three number-theoretic criteria (no packing search)."""
    p = decompose(n)
    return Verdict(
        n=n,
        params=p,
        p0=p0_of_params(p),
        wegner_conjecture=check_wegner_conjecture(p),
        boeroeczky_ruzsa=check_boeroeczky_ruzsa(n),
        corrected=check_corrected(p),
    )
