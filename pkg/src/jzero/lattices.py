"""Finite-index sublattices of Z^2 in column Hermite normal form.

A sublattice is stored as the column basis

    [ d1  0  ]
    [ k   d2 ]      d1, d2 >= 1,  0 <= k < d2,

so membership of (x, y) is the pair of conditions d1 | x and
d2 | (y - k * x / d1), and the index is d1 * d2.  Every lattice this
package needs arises from congruences u*x + v*y = 0 (mod N), so lattices
remember their defining congruences; intersections then reduce to solving
all congruences at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def _solve_kernel(c1: int, c2: int, N: int) -> tuple[int, int, int]:
    """HNF data (d1, k, d2) for {(z1, z2): c1 z1 + c2 z2 = 0 mod N},
    with basis columns (d1, k) and (0, d2).

    d2 is the smallest positive z2 with (0, z2) in the kernel; d1 the
    smallest positive z1 occurring at all, and k a matching z2 for z1 = d1.
    """
    if N <= 0:
        raise ValueError("modulus must be positive")
    c1 %= N
    c2 %= N
    g2 = math.gcd(c2, N)  # >= 1
    d2 = N // g2
    d1 = g2 // math.gcd(c1, g2)
    rhs = (-c1 * d1) % N
    assert rhs % g2 == 0
    if d2 == 1:
        k = 0
    else:
        k = (rhs // g2) * pow(c2 // g2, -1, d2) % d2
    return d1, k, d2


@dataclass(frozen=True)
class SubLattice:
    """Finite-index sublattice of Z^2, column HNF basis ((d1, k), (0, d2))."""

    d1: int
    k: int
    d2: int
    congruences: tuple[tuple[int, int, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.d1 <= 0 or self.d2 <= 0 or not (0 <= self.k < self.d2):
            raise ValueError(f"not a normalized HNF triple: {(self.d1, self.k, self.d2)}")

    @property
    def index(self) -> int:
        return self.d1 * self.d2

    def basis(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Basis vectors (columns): (d1, k) and (0, d2)."""
        return ((self.d1, self.k), (0, self.d2))

    def contains(self, x: int, y: int) -> bool:
        if x % self.d1 != 0:
            return False
        return (y - self.k * (x // self.d1)) % self.d2 == 0

    def coords(self, x: int, y: int) -> tuple[int, int]:
        """Coordinates (s, t) with (x, y) = s*(d1, k) + t*(0, d2)."""
        if not self.contains(x, y):
            raise ValueError(f"({x},{y}) not in lattice")
        s = x // self.d1
        t = (y - self.k * s) // self.d2
        return (s, t)

    def point(self, s: int, t: int) -> tuple[int, int]:
        return (self.d1 * s, self.k * s + self.d2 * t)

    def is_sublattice_of(self, other: "SubLattice") -> bool:
        return all(other.contains(*v) for v in self.basis())

    @staticmethod
    def full() -> "SubLattice":
        return SubLattice(1, 0, 1)

    @staticmethod
    def from_congruences(congs: list[tuple[int, int, int]]) -> "SubLattice":
        """Lattice {(x, y): u x + v y = 0 (mod N) for every (u, v, N)}.

        Solved by iterating: keep an HNF lattice, restrict it by each
        congruence expressed in the current basis coordinates.
        """
        cur = SubLattice.full()
        kept: list[tuple[int, int, int]] = []
        for (u, v, N) in congs:
            N = abs(N)
            if N <= 1:
                continue
            kept.append((u, v, N))
            b1, b2 = cur.basis()
            c1 = u * b1[0] + v * b1[1]
            c2 = u * b2[0] + v * b2[1]
            e1, kk, e2 = _solve_kernel(c1, c2, N)
            # new basis in (x,y): e1*b1 + kk*b2  and  e2*b2
            v1 = (e1 * b1[0], e1 * b1[1] + kk * b2[1])
            v2 = (0, e2 * b2[1])
            cur = SubLattice(v1[0], v1[1] % v2[1], v2[1])
        return SubLattice(cur.d1, cur.k, cur.d2, tuple(kept))

    def intersect(self, other: "SubLattice") -> "SubLattice":
        congs = list(self.as_congruences()) + list(other.as_congruences())
        return SubLattice.from_congruences(congs)

    def as_congruences(self) -> tuple[tuple[int, int, int], ...]:
        """Two congruences cutting out exactly this lattice."""
        # x = 0 (mod d1) and d1*y - k*x = 0 (mod d1*d2)
        return ((1, 0, self.d1), (-self.k, self.d1, self.d1 * self.d2))

    def __str__(self) -> str:
        return f"[({self.d1},{self.k}),(0,{self.d2})] index {self.index}"
