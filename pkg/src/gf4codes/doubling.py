"""Doubling constructions for hermitian self-orthogonal codes.

From two self-orthogonal [n, k] codes C1, C2 and odd-weight vectors in
their hermitian duals, build:

* a self-orthogonal [2n+1, k+1] code with rows (g1 | g2 | 0) over the
  paired generators plus a bottom row (x1 | 0..0 | 1);
* a self-orthogonal [2n+2, k+2] code that appends one more column and a
  row (0..0 | x2 | 0 1);
* the auxiliary [n+1, k+1] codes spanned by (G | 0-column) plus (x | 1),
  whose dual distances bound the dual distances of the results.

The bottom rows are self-orthogonal exactly because wt(x) is odd:
the hermitian square of (x | 0..0 | 1) is wt(x) + 1 over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .codes import LinearCode
from .enumerator import DEFAULT_MAX_DIM, dual_distance
from .errors import PreconditionError
from .gf4 import GF4Vector, append, concat, hermitian_inner


@dataclass(frozen=True)
class OddDualVector:
    """An odd-weight vector in the hermitian dual of some code."""

    vector: GF4Vector
    weight: int

    @classmethod
    def for_code(cls, code: LinearCode, vector: GF4Vector) -> "OddDualVector":
        """Validate `vector` against `code` and wrap it."""
        if vector.n != code.n:
            raise PreconditionError(
                f"vector length {vector.n} does not match code length {code.n}")
        weight = vector.weight()
        if weight % 2 == 0:
            raise PreconditionError(
                f"vector has even weight {weight}; an odd weight is required")
        for g in code.rows:
            if hermitian_inner(vector, g) != 0:
                raise PreconditionError(
                    "vector is not in the hermitian dual of the code")
        return cls(vector, weight)


def _as_odd_dual(code: LinearCode, x: GF4Vector | OddDualVector) -> OddDualVector:
    vec = x.vector if isinstance(x, OddDualVector) else x
    return OddDualVector.for_code(code, vec)


def _check_pair(c1: LinearCode, c2: LinearCode) -> None:
    if (c1.n, c1.k) != (c2.n, c2.k):
        raise PreconditionError(
            f"input codes have different parameters [{c1.n},{c1.k}] and [{c2.n},{c2.k}]")
    for name, c in (("first", c1), ("second", c2)):
        if not c.is_hermitian_self_orthogonal():
            raise PreconditionError(f"{name} input code is not hermitian self-orthogonal")


def _build(rows: list[GF4Vector], n: int, k: int) -> LinearCode:
    # Post-construction verification: dimension and self-orthogonality are
    # guaranteed by the preconditions, so a failure here means the caller
    # slipped past them.
    try:
        code = LinearCode(rows, n=n)
    except ValueError:
        raise PreconditionError("constructed generator matrix is rank-deficient") from None
    if code.k != k:
        raise PreconditionError(f"constructed code has dimension {code.k}, expected {k}")
    if not code.is_hermitian_self_orthogonal():
        raise PreconditionError("constructed code failed the self-orthogonality check")
    return code


def double_odd(c1: LinearCode, c2: LinearCode,
               x1: GF4Vector | OddDualVector) -> LinearCode:
    """The [2n+1, k+1] doubled code from (C1, C2) and x1."""
    x = _as_odd_dual(c1, x1)
    _check_pair(c1, c2)
    zeros = GF4Vector(c1.n)
    rows = [append(concat(a, b), 0) for a, b in zip(c1.rows, c2.rows)]
    rows.append(append(concat(x.vector, zeros), 1))
    return _build(rows, 2 * c1.n + 1, c1.k + 1)


def double_even(c1: LinearCode, c2: LinearCode,
                x1: GF4Vector | OddDualVector,
                x2: GF4Vector | OddDualVector) -> LinearCode:
    """The [2n+2, k+2] doubled code from (C1, C2) and (x1, x2)."""
    xo1 = _as_odd_dual(c1, x1)
    xo2 = _as_odd_dual(c2, x2)
    _check_pair(c1, c2)
    zeros = GF4Vector(c1.n)
    rows = [append(append(concat(a, b), 0), 0) for a, b in zip(c1.rows, c2.rows)]
    rows.append(append(append(concat(xo1.vector, zeros), 1), 0))
    rows.append(append(append(concat(zeros, xo2.vector), 0), 1))
    return _build(rows, 2 * c1.n + 2, c1.k + 2)


def auxiliary_code(c: LinearCode, x: GF4Vector | OddDualVector) -> LinearCode:
    """The [n+1, k+1] code spanned by (G | 0-column) plus the row (x | 1)."""
    xo = _as_odd_dual(c, x)
    if not c.is_hermitian_self_orthogonal():
        raise PreconditionError("input code is not hermitian self-orthogonal")
    rows = [append(g, 0) for g in c.rows]
    rows.append(append(xo.vector, 1))
    return _build(rows, c.n + 1, c.k + 1)


def dual_distance_bounds(c1: LinearCode, c2: LinearCode,
                         x1: GF4Vector | OddDualVector,
                         x2: GF4Vector | OddDualVector,
                         *, max_dim: int = DEFAULT_MAX_DIM) -> tuple[int, int]:
    """Upper bounds on the dual distances of the two doubled codes.

    Returns (min(d(C11-dual), d(C2-dual)), min(d(C11-dual), d(C22-dual)))
    where C11, C22 are the auxiliary codes for (c1, x1) and (c2, x2).
    """
    c11 = auxiliary_code(c1, x1)
    c22 = auxiliary_code(c2, x2)
    d11 = dual_distance(c11, max_dim=max_dim)
    d2 = dual_distance(c2, max_dim=max_dim)
    d22 = dual_distance(c22, max_dim=max_dim)
    return (min(d11, d2), min(d11, d22))


def find_odd_dual_vector(code: LinearCode, budget: int = 3) -> OddDualVector | None:
    """Search the hermitian dual for an odd-weight vector.

    The all-one vector is preferred when it qualifies; otherwise
    combinations of up to `budget` dual basis rows are scanned with all
    nonzero scalars in lexicographic order, so the witness is
    deterministic.  Returns None if the scan finds nothing.
    """
    n = code.n
    ones = GF4Vector(n, lo=(1 << n) - 1)
    if n % 2 == 1 and all(hermitian_inner(ones, g) == 0 for g in code.rows):
        return OddDualVector(ones, n)
    dual_rows = code.dual().rows
    for size in range(1, min(budget, len(dual_rows)) + 1):
        for idxs in combinations(range(len(dual_rows)), size):
            for coeffs in product((1, 2, 3), repeat=size):
                v = GF4Vector(n)
                for t, c in zip(idxs, coeffs):
                    v = v + dual_rows[t].scale(c)
                w = v.weight()
                if w % 2 == 1:
                    return OddDualVector(v, w)
    return None


@dataclass(frozen=True)
class DoublingResult:
    """Both doubled codes, the auxiliary codes, and the dual-distance bounds."""

    code_prime: LinearCode
    code_double_prime: LinearCode
    c11: LinearCode
    c22: LinearCode
    bound_prime: int
    bound_double_prime: int


def double_pair(c1: LinearCode, c2: LinearCode,
                x1: GF4Vector | OddDualVector,
                x2: GF4Vector | OddDualVector,
                *, max_dim: int = DEFAULT_MAX_DIM) -> DoublingResult:
    """Run both constructions and compute the bounds in one pass."""
    xo1 = _as_odd_dual(c1, x1)
    xo2 = _as_odd_dual(c2, x2)
    code_prime = double_odd(c1, c2, xo1)
    code_double_prime = double_even(c1, c2, xo1, xo2)
    c11 = auxiliary_code(c1, xo1)
    c22 = auxiliary_code(c2, xo2)
    d11 = dual_distance(c11, max_dim=max_dim)
    d2 = dual_distance(c2, max_dim=max_dim)
    d22 = dual_distance(c22, max_dim=max_dim)
    return DoublingResult(code_prime, code_double_prime, c11, c22,
                          min(d11, d2), min(d11, d22))
