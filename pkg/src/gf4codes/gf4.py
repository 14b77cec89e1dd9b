"""GF(4) arithmetic and bitsliced vectors.

Field elements are the integers 0..3 encoding b + a*omega as (a << 1) | b:
0 = 0, 1 = 1, 2 = omega, 3 = omega**2 = omega + 1.  The field has
characteristic 2, so addition is XOR of encodings.

Vectors are stored as two bitplanes: bit i of ``lo`` holds the constant
coefficient of coordinate i and bit i of ``hi`` holds the omega
coefficient.  Vector addition is then two integer XORs and Hamming weight
is one popcount, which is what makes exhaustive codeword enumeration fast
enough for dimensions up to 16.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

OMEGA = 2
OMEGA_SQ = 3
ELEMENTS = (0, 1, 2, 3)

# omega * omega = omega + 1
MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

# Frobenius x -> x**2; the only nontrivial automorphism.  On nonzero
# elements it coincides with inversion since x**3 = 1.
CONJ = (0, 1, 3, 2)


def add(a: int, b: int) -> int:
    return a ^ b


def mul(a: int, b: int) -> int:
    return MUL[a][b]


def conj(a: int) -> int:
    return CONJ[a]


def inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return CONJ[a]


def trace(a: int) -> int:
    """Absolute trace Tr(x) = x + x**2, with values in {0, 1}."""
    # Tr kills {0, 1} and sends both omega and omega**2 to 1, which is
    # exactly the omega coefficient of x.
    return a >> 1


def _parity(v: int) -> int:
    return v.bit_count() & 1


class GF4Vector:
    """A GF(4) vector of fixed length, held as two bitplanes.

    Instances are treated as immutable; all operations return new vectors.
    """

    __slots__ = ("n", "lo", "hi")

    def __init__(self, n: int, lo: int = 0, hi: int = 0) -> None:
        if n < 0:
            raise ValueError("vector length must be nonnegative")
        mask = (1 << n) - 1
        self.n = n
        self.lo = lo & mask
        self.hi = hi & mask

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "GF4Vector":
        lo = hi = 0
        n = 0
        for c in coords:
            if not 0 <= c <= 3:
                raise ValueError(f"not a GF(4) element: {c!r}")
            lo |= (c & 1) << n
            hi |= (c >> 1) << n
            n += 1
        return cls(n, lo, hi)

    @classmethod
    def from_digits(cls, digits: str) -> "GF4Vector":
        """Build a vector from a string of digits 0123, e.g. "10122"."""
        try:
            return cls.from_coords(int(ch) for ch in digits)
        except ValueError:
            raise ValueError(f"not a GF(4) digit string: {digits!r}") from None

    def coords(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(self.n))

    def to_digits(self) -> str:
        return "".join(str(self[i]) for i in range(self.n))

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError("coordinate out of range")
        return ((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF4Vector):
            return NotImplemented
        return (self.n, self.lo, self.hi) == (other.n, other.lo, other.hi)

    def __hash__(self) -> int:
        return hash((self.n, self.lo, self.hi))

    def __repr__(self) -> str:
        return f"GF4Vector({self.to_digits()!r})"

    def __add__(self, other: "GF4Vector") -> "GF4Vector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return GF4Vector(self.n, self.lo ^ other.lo, self.hi ^ other.hi)

    def is_zero(self) -> bool:
        return self.lo == 0 and self.hi == 0

    def weight(self) -> int:
        return (self.lo | self.hi).bit_count()

    def scale(self, c: int) -> "GF4Vector":
        """Multiply every coordinate by the scalar c."""
        lo, hi = self.lo, self.hi
        if c == 0:
            return GF4Vector(self.n)
        if c == 1:
            return self
        # omega * (a*omega + b) = (a + b)*omega + a
        if c == OMEGA:
            return GF4Vector(self.n, hi, hi ^ lo)
        if c == OMEGA_SQ:
            return GF4Vector(self.n, hi ^ lo, lo)
        raise ValueError(f"not a GF(4) element: {c!r}")

    def conjugate(self) -> "GF4Vector":
        """Apply x -> x**2 coordinatewise (swaps omega and omega**2)."""
        return GF4Vector(self.n, self.lo ^ self.hi, self.hi)

    def pointwise(self, other: "GF4Vector") -> "GF4Vector":
        """Coordinatewise product."""
        if self.n != other.n:
            raise ValueError("length mismatch")
        a1, b1 = self.hi, self.lo
        a2, b2 = other.hi, other.lo
        aa = a1 & a2
        return GF4Vector(self.n, aa ^ (b1 & b2), aa ^ (a1 & b2) ^ (a2 & b1))


def hermitian_inner(x: GF4Vector, y: GF4Vector) -> int:
    """Hermitian inner product sum_i x_i * y_i**2, a GF(4) element."""
    z = x.pointwise(y.conjugate())
    # Summing field elements adds each bitplane mod 2.
    return (_parity(z.hi) << 1) | _parity(z.lo)


def trace_inner(x: GF4Vector, y: GF4Vector) -> int:
    """Trace inner product Tr(sum_i x_i * y_i**2), a GF(2) element."""
    z = x.pointwise(y.conjugate())
    return _parity(z.hi)


def concat(x: GF4Vector, y: GF4Vector) -> GF4Vector:
    return GF4Vector(x.n + y.n, x.lo | (y.lo << x.n), x.hi | (y.hi << x.n))


def append(x: GF4Vector, c: int) -> GF4Vector:
    """Append one coordinate with value c."""
    if not 0 <= c <= 3:
        raise ValueError(f"not a GF(4) element: {c!r}")
    return GF4Vector(x.n + 1, x.lo | ((c & 1) << x.n), x.hi | ((c >> 1) << x.n))


def coordinate_sum(x: GF4Vector) -> int:
    """Sum of all coordinates, a GF(4) element."""
    return (_parity(x.hi) << 1) | _parity(x.lo)


def cyclic_shift(x: GF4Vector) -> GF4Vector:
    """Shift right by one position: coordinate i moves to i + 1 mod n."""
    n = x.n
    if n == 0:
        return x
    lo = ((x.lo << 1) | (x.lo >> (n - 1))) & ((1 << n) - 1)
    hi = ((x.hi << 1) | (x.hi >> (n - 1))) & ((1 << n) - 1)
    return GF4Vector(n, lo, hi)


def delete_coordinate(x: GF4Vector, i: int) -> GF4Vector:
    """Remove coordinate i, shortening the vector by one."""
    if not 0 <= i < x.n:
        raise IndexError("coordinate out of range")
    keep = (1 << i) - 1
    lo = (x.lo & keep) | ((x.lo >> (i + 1)) << i)
    hi = (x.hi & keep) | ((x.hi >> (i + 1)) << i)
    return GF4Vector(x.n - 1, lo, hi)


def vector_sum(vectors: Sequence[GF4Vector], n: int) -> GF4Vector:
    """Sum of a sequence of vectors of common length n."""
    lo = hi = 0
    for v in vectors:
        if v.n != n:
            raise ValueError("length mismatch")
        lo ^= v.lo
        hi ^= v.hi
    return GF4Vector(n, lo, hi)
