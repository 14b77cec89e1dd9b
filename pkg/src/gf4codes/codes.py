"""Linear codes over GF(4).

Generator matrices, reduced row echelon form, hermitian duals, shortening,
the circulant construction, the self-orthogonality and evenness predicates,
and the matrix text format shared with the CLI.
"""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Sequence

from .errors import MatrixFormatError
from .gf4 import GF4Vector, delete_coordinate, hermitian_inner, inv, trace_inner, OMEGA, cyclic_shift


def rref(rows: Sequence[GF4Vector], n: int) -> tuple[tuple[int, ...], tuple[GF4Vector, ...]]:
    """Reduced row echelon form with deterministic leftmost pivots.

    Returns (pivot columns, reduced nonzero rows).  Pivot entries are 1 and
    are the only nonzero entries in their columns.
    """
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        row = work[r].scale(inv(work[r][col]))
        work[r] = row
        for i in range(len(work)):
            if i != r:
                c = work[i][col]
                if c:
                    work[i] = work[i] + row.scale(c)
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return tuple(pivots), tuple(work[:r])


class LinearCode:
    """An [n, k] linear code over GF(4), held as a generator matrix.

    Rows are kept exactly as given; construction helpers and the catalog
    rely on the row layout surviving round trips.  Reduced row echelon form
    is computed once and used internally for rank, membership and dual
    computations.  Instances are immutable.

    The zero code (k = 0) is representable by passing no rows and an
    explicit length; `from_rows` itself requires at least one row.
    """

    __slots__ = ("n", "rows", "dropped_rows", "_pivots", "_rref", "_dual")

    def __init__(self, rows: Sequence[GF4Vector], n: int | None = None,
                 dropped_rows: tuple[int, ...] = ()) -> None:
        rows = tuple(rows)
        if n is None:
            if not rows:
                raise ValueError("length required for a code with no rows")
            n = rows[0].n
        if n < 0:
            raise ValueError("code length must be nonnegative")
        for row in rows:
            if row.n != n:
                raise ValueError("rows have mixed lengths")
        self.n = n
        self.rows = rows
        self.dropped_rows = dropped_rows
        self._pivots, self._rref = rref(rows, n)
        if len(self._pivots) != len(rows):
            raise ValueError("generator rows are linearly dependent")
        self._dual: LinearCode | None = None

    @property
    def k(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    @classmethod
    def from_rows(cls, rows: Iterable[GF4Vector]) -> "LinearCode":
        """Build a code from generator rows, dropping dependent ones.

        Dependent rows are dropped with a warning; their input indices are
        recorded in `dropped_rows` on the result.
        """
        given = list(rows)
        if not given:
            raise MatrixFormatError("no generator rows given")
        n = given[0].n
        for row in given:
            if row.n != n:
                raise MatrixFormatError("ragged rows: lengths differ")
        kept: list[GF4Vector] = []
        dropped: list[int] = []
        for idx, row in enumerate(given):
            if len(rref(kept + [row], n)[0]) > len(kept):
                kept.append(row)
            else:
                dropped.append(idx)
        if dropped:
            warnings.warn(
                f"dropped {len(dropped)} dependent generator row(s) at indices {dropped}",
                stacklevel=2,
            )
        return cls(kept, n=n, dropped_rows=tuple(dropped))

    def _residual(self, v: GF4Vector) -> GF4Vector:
        # Reduce v against the cached RREF; zero residual means membership.
        for p, row in zip(self._pivots, self._rref):
            c = v[p]
            if c:
                v = v + row.scale(c)
        return v

    def contains(self, v: GF4Vector) -> bool:
        """Membership of v in the row span."""
        if v.n != self.n:
            raise ValueError("length mismatch")
        return self._residual(v).is_zero()

    def same_row_space(self, other: "LinearCode") -> bool:
        """Equality as codes, decided on canonical reduced forms."""
        return (self.n == other.n and self._pivots == other._pivots
                and self._rref == other._rref)

    def dual(self) -> "LinearCode":
        """The hermitian dual, an [n, n-k] code.

        v is orthogonal to every codeword iff the conjugated generator
        matrix sends v to zero, so the dual is the kernel of that matrix,
        extracted from its reduced form with free columns in ascending
        order.
        """
        if self._dual is None:
            pivots, rrows = rref([r.conjugate() for r in self.rows], self.n)
            pivot_set = set(pivots)
            basis = []
            for f in range(self.n):
                if f in pivot_set:
                    continue
                coords = [0] * self.n
                coords[f] = 1
                # Characteristic 2: the pivot entries copy over without sign.
                for p, rr in zip(pivots, rrows):
                    coords[p] = rr[f]
                basis.append(GF4Vector.from_coords(coords))
            self._dual = LinearCode(basis, n=self.n)
        return self._dual

    def is_hermitian_self_orthogonal(self) -> bool:
        """True iff every pair of generator rows has hermitian product 0."""
        rows = self.rows
        for i, x in enumerate(rows):
            for y in rows[i:]:
                if hermitian_inner(x, y) != 0:
                    return False
        return True

    def is_trace_self_orthogonal(self) -> bool:
        """True iff the trace product vanishes on all codeword pairs.

        The trace form is only GF(2)-bilinear, so vanishing on generator
        rows alone does not suffice: the span of (1) has trace product 0 on
        its single generator yet contains the pair (1, omega) with product
        1.  Checking all pairs from the GF(2)-generating set {g, omega*g}
        decides the whole code.
        """
        gens = []
        for row in self.rows:
            gens.append(row)
            gens.append(row.scale(OMEGA))
        for i, x in enumerate(gens):
            for y in gens[i:]:
                if trace_inner(x, y) != 0:
                    return False
        return True

    def is_even(self, *, max_dim: int | None = None) -> bool:
        """True iff every codeword has even weight.

        Self-orthogonality settles it for linear codes; otherwise the
        codewords are scanned with early exit on the first odd weight.
        """
        if self.is_hermitian_self_orthogonal():
            return True
        from .enumerator import DEFAULT_MAX_DIM, iter_codeword_weights

        limit = DEFAULT_MAX_DIM if max_dim is None else max_dim
        return not any(w & 1 for w in iter_codeword_weights(self, max_dim=limit))

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.is_hermitian_self_orthogonal()

    def shorten(self, position: int) -> "LinearCode":
        """Codewords that vanish at `position`, with that coordinate deleted.

        Implemented by row reduction on the target column: one pivot row is
        eliminated and discarded, never by codeword enumeration.
        """
        if not 0 <= position < self.n:
            raise IndexError("coordinate out of range")
        rows = list(self.rows)
        piv = next((i for i, row in enumerate(rows) if row[position] != 0), None)
        if piv is not None:
            pivot_row = rows.pop(piv)
            pivot_row = pivot_row.scale(inv(pivot_row[position]))
            rows = [r + pivot_row.scale(r[position]) if r[position] else r for r in rows]
        return LinearCode([delete_coordinate(r, position) for r in rows], n=self.n - 1)


def circulant(first_row: GF4Vector, k: int) -> LinearCode:
    """Code generated by k successive right cyclic shifts of first_row.

    Row i is first_row shifted right by i positions.  Dependent shift rows
    are dropped with a warning, as in `from_rows`.
    """
    if not 1 <= k <= first_row.n:
        raise ValueError(f"k must be in 1..{first_row.n}, got {k}")
    rows = [first_row]
    for _ in range(k - 1):
        rows.append(cyclic_shift(rows[-1]))
    return LinearCode.from_rows(rows)


def parse_matrix(text: str) -> LinearCode:
    """Parse the matrix text format.

    First line: ``n k``.  Then k rows, each of n whitespace-separated
    digits from {0,1,2,3} with 2 = omega and 3 = omega**2.  Lines starting
    with ``#`` and blank lines are skipped.
    """
    header: tuple[int, int] | None = None
    rows: list[GF4Vector] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise MatrixFormatError(f"line {lineno}: expected header 'n k'")
            try:
                n, k = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise MatrixFormatError(f"line {lineno}: expected header 'n k'") from None
            if not 1 <= k <= n:
                raise MatrixFormatError(f"line {lineno}: header requires 1 <= k <= n")
            header = (n, k)
            continue
        n, k = header
        if len(rows) == k:
            raise MatrixFormatError(f"line {lineno}: more than {k} rows")
        if len(tokens) != n:
            raise MatrixFormatError(
                f"line {lineno}: expected {n} entries, found {len(tokens)}")
        coords = []
        for tok in tokens:
            if tok not in ("0", "1", "2", "3"):
                raise MatrixFormatError(f"line {lineno}: invalid digit {tok!r}")
            coords.append(int(tok))
        rows.append(GF4Vector.from_coords(coords))
    if header is None:
        raise MatrixFormatError("empty input: missing header line")
    if len(rows) != header[1]:
        raise MatrixFormatError(
            f"expected {header[1]} rows, found only {len(rows)}")
    return LinearCode.from_rows(rows)


def emit_matrix(code: LinearCode) -> str:
    """Matrix text for a code; parse_matrix(emit_matrix(c)) returns c for k >= 1."""
    lines = [f"{code.n} {code.k}"]
    for row in code.rows:
        lines.append(" ".join(str(row[i]) for i in range(code.n)))
    return "\n".join(lines) + "\n"
