"""Continued fractions for cyclic quotient points and sheaf-transform degrees.

A cyclic quotient point of type (1/n)(1,q) resolves into a string of rational
curves whose self-intersections -b_1, ..., -b_r come from the expansion

    n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)),   b_j >= 2.

The degrees of the torsion-free pull-backs of the reflexive eigensheaves
against the string curves are the greedy digits of i in the mixed radix
s_1 > s_2 > ... > s_r = 1, where s_0 = n, s_1 = q and
s_j = b_{j-1} s_{j-1} - s_{j-2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ValidationError
from .lattice import Curve, DualGraph, IntersectionProfile


@dataclass(frozen=True)
class CyclicType:
    """Type (1/n)(1,q): n >= 2, 1 <= q < n, gcd(n, q) = 1."""

    n: int
    q: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.q, int):
            raise ValidationError("n and q must be integers")
        if self.n < 2:
            raise ValidationError("n must be >= 2")
        if not 1 <= self.q < self.n:
            raise ValidationError("q must satisfy 1 <= q < n")
        if gcd(self.n, self.q) != 1:
            raise ValidationError("gcd(n,q) must be 1")


@dataclass(frozen=True)
class HJExpansion:
    """Entries b_1, ..., b_r, every one >= 2."""

    entries: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def self_intersections(self) -> tuple[int, ...]:
        return tuple(-b for b in self.entries)

    def evaluate(self) -> Fraction:
        """Collapse b_1 - 1/(b_2 - ...) back to a single fraction."""
        value = Fraction(self.entries[-1])
        for b in reversed(self.entries[:-1]):
            value = b - 1 / value
        return value


@dataclass(frozen=True)
class WunramDegrees:
    """Radix data for one eigensheaf index i.

    ``s`` is (s_0, ..., s_r) with s_0 = n, s_1 = q, s_r = 1; ``d`` the digits
    (the degrees against the string curves) and ``remainders`` the trace
    (t_1, ..., t_r) with 0 <= t_j < s_j.
    """

    s: tuple[int, ...]
    d: tuple[int, ...]
    remainders: tuple[int, ...]


def hj_expansion(t: CyclicType) -> HJExpansion:
    """Expand n/q with every entry the ceiling of the running quotient."""
    entries = []
    a, b = t.n, t.q
    while b:
        k = -(-a // b)  # ceiling division forces k >= 2 while 0 < b < a
        entries.append(k)
        a, b = b, k * b - a
    return HJExpansion(tuple(entries))


def hj_string_graph(t: CyclicType, prefix: str = "C") -> DualGraph:
    """The resolution string: curves C1..Cr, consecutive ones meeting once."""
    entries = hj_expansion(t).entries
    curves = [Curve(f"{prefix}{j + 1}", -b) for j, b in enumerate(entries)]
    edges = [(f"{prefix}{j}", f"{prefix}{j + 1}", 1) for j in range(1, len(entries))]
    return DualGraph(curves, edges)


def wunram_degrees(t: CyclicType, i: int, reduce_mod_n: bool = False) -> WunramDegrees:
    """Greedy digits of i in the radix s_1, ..., s_r.

    The index must lie in [0, n-1]; pass ``reduce_mod_n=True`` to reduce on
    entry instead of range-checking.
    """
    if not isinstance(i, int) or isinstance(i, bool):
        raise ValidationError("i must be an integer")
    if reduce_mod_n:
        i %= t.n
    if not 0 <= i < t.n:
        raise ValidationError(f"i out of range: need 0 <= i <= {t.n - 1}")
    entries = hj_expansion(t).entries
    s = [t.n, t.q]
    for j in range(2, len(entries) + 1):
        s.append(entries[j - 2] * s[j - 1] - s[j - 2])
    if s[-1] != 1:
        raise AssertionError("radix recursion must terminate at 1")
    digits = []
    remainders = []
    rem = i
    for sj in s[1:]:
        dj, rem = divmod(rem, sj)
        digits.append(dj)
        remainders.append(rem)
    return WunramDegrees(tuple(s), tuple(digits), tuple(remainders))


def fchain_profile(t: CyclicType, prefix: str = "C") -> IntersectionProfile:
    """Degrees (-1, 0, ..., 0) on the resolution string of t.

    Solving the pull-back system for this profile produces the numerical
    class of the foliation canonical divisor on the string.
    """
    graph = hj_string_graph(t, prefix=prefix)
    return IntersectionProfile(graph, {f"{prefix}1": Fraction(-1)})
