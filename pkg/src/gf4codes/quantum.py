"""Quantum code parameters from self-orthogonal quaternary codes.

A hermitian (equivalently trace) self-orthogonal linear [n, k] code yields
a quantum [[n, n-2k, d]] code, where d is the smallest weight at which the
dual holds more words than the code itself, i.e. the minimum weight over
the dual words outside the code.  The quantum code is pure when d equals
the dual distance.  Both enumerators come from the classical side: the
code's by direct enumeration, the dual's by MacWilliams, so the dual is
never enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode
from .enumerator import DEFAULT_MAX_DIM, macwilliams, min_distance, weight_enumerator
from .errors import ConsistencyError, FormatError, PreconditionError


@dataclass(frozen=True)
class QuantumParams:
    """Derived [[n, k, d]] parameters plus the purity flag.

    `degenerate` marks the self-dual input case C = C-dual, where the set
    difference defining d is empty; d is then reported as the minimum
    distance of C itself.
    """

    n: int
    k: int
    d: int
    pure: bool
    degenerate: bool = False


@dataclass(frozen=True)
class PurityReport:
    """The derived distance, the dual distance, and their comparison."""

    d: int
    d_dual: int
    pure: bool
    degenerate: bool = False


def _analyze(code: LinearCode, max_dim: int) -> PurityReport:
    if not code.is_hermitian_self_orthogonal():
        raise PreconditionError("code is not hermitian self-orthogonal")
    w = weight_enumerator(code, max_dim=max_dim)
    wd = macwilliams(w, code.k)
    surplus = [d - c for c, d in zip(w.coefficients, wd.coefficients)]
    if any(s < 0 for s in surplus):
        raise ConsistencyError(
            "dual enumerator is smaller than the code's somewhere; "
            "containment in the dual is violated")
    d_dual = min_distance(wd)
    degenerate = 2 * code.k == code.n
    if degenerate:
        d = min_distance(w)
    else:
        d = next((j for j in range(1, code.n + 1) if surplus[j] > 0), None)
        if d is None:
            raise ConsistencyError("dual equals the code but n != 2k")
    return PurityReport(d=d, d_dual=d_dual, pure=d == d_dual, degenerate=degenerate)


def purity_report(code: LinearCode, *, max_dim: int = DEFAULT_MAX_DIM) -> PurityReport:
    """Distance and purity details for a self-orthogonal code."""
    return _analyze(code, max_dim)


def quantum_params(code: LinearCode, *, max_dim: int = DEFAULT_MAX_DIM) -> QuantumParams:
    """Quantum [[n, n-2k, d]] parameters for a self-orthogonal [n, k] code."""
    report = _analyze(code, max_dim)
    return QuantumParams(n=code.n, k=code.n - 2 * code.k, d=report.d,
                         pure=report.pure, degenerate=report.degenerate)


def parse_bounds_table(text: str) -> dict[tuple[int, int], tuple[int, int]]:
    """Parse a bounds table: CSV rows `n,k,d_lower,d_upper`.

    Used only to annotate derived parameters; nothing is recomputed from
    it.  Lines starting with ``#`` and blank lines are skipped.
    """
    table: dict[tuple[int, int], tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t.strip() for t in line.split(",")]
        if len(tokens) != 4:
            raise FormatError(f"line {lineno}: expected 'n,k,d_lower,d_upper'")
        try:
            n, k, lo, hi = (int(t) for t in tokens)
        except ValueError:
            raise FormatError(f"line {lineno}: expected four integers") from None
        if lo > hi:
            raise FormatError(f"line {lineno}: d_lower exceeds d_upper")
        table[(n, k)] = (lo, hi)
    return table
