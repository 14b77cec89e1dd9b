"""Exact weight enumerators, the MacWilliams transform, and distances.

Enumeration walks the 4**k codewords of an [n, k] code in binary Gray
order over 2k GF(2)-generators (each generator row and its omega multiple),
so each step is two XORs and a popcount on the bitplanes.  The message
range may be split into contiguous partitions whose histograms are summed;
the result is bit-identical for any partition count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import TYPE_CHECKING, Iterator

from .errors import BudgetExceededError, ConsistencyError, FormatError
from .gf4 import OMEGA

if TYPE_CHECKING:
    from .codes import LinearCode

# 4**16 = 2**32 codewords, the default enumeration budget.
DEFAULT_MAX_DIM = 16


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact coefficients A_0..A_n counting codewords by weight."""

    coefficients: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> int:
        return self.coefficients[j]

    def total(self) -> int:
        return sum(self.coefficients)

    def nonzero(self) -> tuple[tuple[int, int], ...]:
        """(j, A_j) pairs for nonzero coefficients, ascending j."""
        return tuple((j, a) for j, a in enumerate(self.coefficients) if a)


def _check_budget(k: int, max_dim: int) -> None:
    if k > max_dim:
        raise BudgetExceededError(
            f"dimension {k} exceeds the enumeration budget of 4^{max_dim} "
            f"codewords; raise max_dim to allow 4^{k}")


def _binary_generators(code: "LinearCode") -> list[tuple[int, int]]:
    # GF(2)-generators as (lo, hi) bitplane pairs: each row and its omega
    # multiple.  The 2**(2k) subset sums are exactly the 4**k codewords.
    bg: list[tuple[int, int]] = []
    for row in code.rows:
        bg.append((row.lo, row.hi))
        om = row.scale(OMEGA)
        bg.append((om.lo, om.hi))
    return bg


def weight_enumerator(code: "LinearCode", *, max_dim: int = DEFAULT_MAX_DIM,
                      partitions: int = 1) -> WeightEnumerator:
    """Exact weight enumerator by enumerating all 4**k codewords."""
    if partitions < 1:
        raise ValueError("partitions must be >= 1")
    _check_budget(code.k, max_dim)
    counts = [0] * (code.n + 1)
    k = code.k
    if k == 0:
        counts[0] = 1
        return WeightEnumerator(tuple(counts))
    bg = _binary_generators(code)
    total = 1 << (2 * k)
    bounds = [total * p // partitions for p in range(partitions + 1)]
    for a, b in zip(bounds, bounds[1:]):
        if a == b:
            continue
        # Start this partition at the codeword for Gray code of index a.
        g = a ^ (a >> 1)
        lo = hi = 0
        for t in range(2 * k):
            if (g >> t) & 1:
                glo, ghi = bg[t]
                lo ^= glo
                hi ^= ghi
        counts[(lo | hi).bit_count()] += 1
        for j in range(a + 1, b):
            glo, ghi = bg[(j & -j).bit_length() - 1]
            lo ^= glo
            hi ^= ghi
            counts[(lo | hi).bit_count()] += 1
    return WeightEnumerator(tuple(counts))


def iter_codeword_weights(code: "LinearCode", *,
                          max_dim: int = DEFAULT_MAX_DIM) -> Iterator[int]:
    """Yield the weights of all 4**k codewords in Gray order."""
    _check_budget(code.k, max_dim)
    yield 0
    if code.k == 0:
        return
    bg = _binary_generators(code)
    lo = hi = 0
    for j in range(1, 1 << (2 * code.k)):
        glo, ghi = bg[(j & -j).bit_length() - 1]
        lo ^= glo
        hi ^= ghi
        yield (lo | hi).bit_count()


@lru_cache(maxsize=None)
def _krawtchouk(n: int, j: int, i: int) -> int:
    # Coefficient of y**j in (x + 3y)**(n-i) * (x - y)**i at x = 1.
    return sum(
        comb(n - i, j - s) * 3 ** (j - s) * comb(i, s) * (-1) ** s
        for s in range(max(0, j - (n - i)), min(i, j) + 1)
    )


def macwilliams(w: WeightEnumerator, k: int) -> WeightEnumerator:
    """Enumerator of the dual of a linear [n, k] code with enumerator w.

    Evaluates A_j-dual = 4**(-k) * sum_i A_i * K_j(i) over exact integers.
    The scaling is 4**(-k) because a linear [n, k] code over GF(4) is an
    additive (n, 2**(2k)) code; the 2**(-k) form seen for additive (n, 2**k)
    codes reconciles as 2**(-2k).  Every division must be exact and every
    output coefficient nonnegative, else the input enumerator or dimension
    is wrong.
    """
    if k < 0:
        raise ValueError("dimension must be nonnegative")
    n = w.n
    denom = 1 << (2 * k)
    out = []
    for j in range(n + 1):
        acc = 0
        for i, ai in enumerate(w.coefficients):
            if ai:
                acc += ai * _krawtchouk(n, j, i)
        q, r = divmod(acc, denom)
        if r:
            raise ConsistencyError(
                f"MacWilliams coefficient A{j} is not divisible by 4^{k}; "
                "input enumerator and dimension are inconsistent")
        if q < 0:
            raise ConsistencyError(
                f"MacWilliams coefficient A{j} is negative; "
                "input enumerator and dimension are inconsistent")
        out.append(q)
    return WeightEnumerator(tuple(out))


def min_distance(w: WeightEnumerator) -> int:
    """Smallest j >= 1 with A_j > 0; the zero code yields sentinel n + 1."""
    for j in range(1, w.n + 1):
        if w.coefficients[j]:
            return j
    return w.n + 1


def dual_distance(code: "LinearCode", *, max_dim: int = DEFAULT_MAX_DIM) -> int:
    """Minimum distance of the hermitian dual, via MacWilliams.

    The dual itself is never enumerated, so this stays exact far past the
    enumeration budget of the dual dimension.
    """
    return min_distance(macwilliams(weight_enumerator(code, max_dim=max_dim), code.k))


def format_enumerator(w: WeightEnumerator, *, csv: bool = False) -> str:
    """Text form: one `j A_j` line per nonzero coefficient, ascending j."""
    sep = "," if csv else " "
    return "".join(f"{j}{sep}{a}\n" for j, a in w.nonzero())


def parse_enumerator(text: str, n: int) -> WeightEnumerator:
    """Parse `j A_j` lines (comma or whitespace separated) for a length-n code.

    Missing weights are zero.  Lines starting with ``#`` and blank lines
    are skipped.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    coeffs = [0] * (n + 1)
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.replace(",", " ").split()
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected 'j A_j'")
        try:
            j, a = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers 'j A_j'") from None
        if not 0 <= j <= n:
            raise FormatError(f"line {lineno}: weight {j} outside 0..{n}")
        if j in seen:
            raise FormatError(f"line {lineno}: duplicate weight {j}")
        if a < 0:
            raise FormatError(f"line {lineno}: negative count {a}")
        seen.add(j)
        coeffs[j] = a
    return WeightEnumerator(tuple(coeffs))
