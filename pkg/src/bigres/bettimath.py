"""Closed-form Betti sequences and Betti-polynomial algebra.

These are the independent oracles the computed resolutions are checked
against, plus the (1+T)-divisibility invariant of germs of complex spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import NotDivisibleError
from .resolution import BettiTable


@dataclass(frozen=True)
class BettiPolynomial:
    """Integer polynomial in T whose i-th coefficient is the i-th Betti number."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coefficients):
            raise ValueError("Betti numbers are nonnegative")

    @staticmethod
    def of(seq) -> "BettiPolynomial":
        seq = list(seq)
        while seq and seq[-1] == 0:
            seq.pop()
        return BettiPolynomial(tuple(int(c) for c in seq))

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def as_list(self) -> list[int]:
        return list(self.coefficients)

    def evaluate(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def dominates(self, other: "BettiPolynomial") -> bool:
        return all(self[i] >= other[i] for i in range(max(len(self), len(other))))

    def __repr__(self) -> str:
        return f"BettiPolynomial({list(self.coefficients)})"


def thm3_closed_form(n: int) -> BettiPolynomial:
    """Betti numbers of the bigraded module of a quasi-homogeneous isolated f.

    beta_0 = 1, beta_1 = 2 + n(n+1)/2, beta_2 = 1 + n + 2*C(n+1, n-2), and
    beta_i = (i-2)*C(n+2, i+1) + 2*C(n+1, i+1) for i >= 3, up to i = n+1.
    The printed beta_2 uses C(n+1, n-2); it equals C(n+1, 3) (asserted here).
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    if comb(n + 1, n - 2) != comb(n + 1, 3):
        raise AssertionError("binomial symmetry failure")
    out = [1, 2 + n * (n + 1) // 2, 1 + n + 2 * comb(n + 1, n - 2)]
    for i in range(3, n + 2):
        out.append((i - 2) * comb(n + 2, i + 1) + 2 * comb(n + 1, i + 1))
    return BettiPolynomial.of(out)


def dsfs_closed_form(n: int) -> BettiPolynomial:
    """Betti numbers of the filtered module D[s] f^s: 1, C(n,2)+1, then
    i*C(n, i+1) + (i-1)*C(n, i) for i >= 2, up to i = n."""
    if n < 1:
        raise ValueError("n >= 1 required")
    out = [1]
    if n >= 1:
        out.append(comb(n, 2) + 1)
    for i in range(2, n + 1):
        out.append(i * comb(n, i + 1) + (i - 1) * comb(n, i))
    return BettiPolynomial.of(out)


def M_closed_form(n: int) -> BettiPolynomial:
    """Betti numbers of D[s]f^s / D[s]f^(s+1): 1, 2 + C(n,2), 2*C(n+1,3) + 1,
    then (i-2)*C(n+2, i+1) + 2*C(n+1, i+1) for i >= 3, up to i = n+1."""
    if n < 2:
        raise ValueError("n >= 2 required")
    out = [1, 2 + comb(n, 2), 2 * comb(n + 1, 3) + 1]
    for i in range(3, n + 2):
        out.append((i - 2) * comb(n + 2, i + 1) + 2 * comb(n + 1, i + 1))
    return BettiPolynomial.of(out)


def smooth_closed_form(n: int, p: int) -> BettiPolynomial:
    """The binomial sequence (1+T)^(n+p) of the smooth case (and lower bound)."""
    if n < 1 or p < 1:
        raise ValueError("n, p >= 1 required")
    return BettiPolynomial.of([comb(n + p, i) for i in range(n + p + 1)])


def en_closed_form(n: int) -> BettiPolynomial:
    """Betti numbers of O[xi]/(S_ij): 1, C(n,2), 2*C(n,3), ..., (n-1)*C(n,n)."""
    if n < 2:
        raise ValueError("n >= 2 required")
    out = [1]
    for i in range(1, n):
        out.append(i * comb(n, i + 1))
    return BettiPolynomial.of(out)


def multiply_one_plus_T(b: BettiPolynomial, power: int) -> BettiPolynomial:
    """Coefficientwise convolution with (1+T)^power."""
    if power < 0:
        raise ValueError("power must be nonnegative")
    out = list(b.coefficients)
    for _ in range(power):
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c
            nxt[i + 1] += c
        out = nxt
    return BettiPolynomial.of(out)


def space_invariant(b: BettiPolynomial, n: int, p: int, c0: int) -> BettiPolynomial:
    """beta_V(T) = beta_f(T) / (1+T)^(n+p-c0), which must divide exactly.

    A NotDivisibleError flags Betti data inconsistent with the invariance
    statement; it is diagnostic and not expected on valid inputs.
    """
    power = n + p - c0
    if power < 0:
        raise ValueError("need n + p >= c0")
    coeffs = list(b.coefficients)
    for _ in range(power):
        # synthetic division by (1 + T)
        out = []
        rem = 0
        for c in coeffs:
            cur = c - rem
            out.append(cur)
            rem = cur
        if out and out[-1] != 0:
            raise NotDivisibleError("Betti polynomial is not divisible by (1+T)")
        if out:
            out.pop()
        coeffs = out
    return BettiPolynomial.of(coeffs)


def shift_extension_rule(table: BettiTable, kind: str) -> BettiTable:
    """Shift bookkeeping under a redundant generator or a smooth extra variable.

    ``redundant_generator``: level i gains the level i-1 shifts.
    ``smooth_variable``: level i gains the level i-1 shifts, the level i-1
    shifts raised by (1,1), and the level i-2 shifts raised by (1,1).
    """
    if kind not in ("redundant_generator", "smooth_variable"):
        raise ValueError(f"unknown kind {kind!r}")
    old = [list(level) for level in table.shifts]
    depth = len(old)
    extra = 1 if kind == "redundant_generator" else 2
    new_shifts = []
    for i in range(depth + extra):
        level: list[tuple[int, int]] = []
        if i < depth:
            level += old[i]
        if i - 1 >= 0 and i - 1 < depth:
            level += old[i - 1]
            if kind == "smooth_variable":
                level += [(n + 1, m + 1) for (n, m) in old[i - 1]]
        if kind == "smooth_variable" and 0 <= i - 2 < depth:
            level += [(n + 1, m + 1) for (n, m) in old[i - 2]]
        new_shifts.append(tuple(sorted(level)))
    while new_shifts and not new_shifts[-1]:
        new_shifts.pop()
    return BettiTable(
        tuple(len(level) for level in new_shifts),
        tuple(new_shifts),
    )
