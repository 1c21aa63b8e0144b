"""Non-increasing vectors, Hoffman matrices and their partition decomposition.

A Hoffman matrix is a symmetric doubly-stochastic matrix that maps
non-increasing probability vectors to non-increasing probability vectors.
The set of ``d x d`` Hoffman matrices is the convex hull of the ``2**(d-1)``
block-averaging matrices built from partitions of ``{0, ..., d-1}`` into
runs of consecutive indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.optimize import linprog, nnls

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_MAX_DIM",
    "DimensionCapError",
    "InfeasibleError",
    "NotMajorizedError",
    "Partition",
    "HoffmanDecomposition",
    "is_nonincreasing_prob",
    "majorizes",
    "hoffman_majorizes",
    "is_hoffman_matrix",
    "enumerate_partitions",
    "partition_matrix",
    "decompose_hoffman",
    "hoffman_weights",
    "find_hoffman_matrix",
    "asymmetric_hoffman_majorizes",
    "is_asymmetric_hoffman_matrix",
    "project_simplex",
]

DEFAULT_TOL = 1e-9
DEFAULT_MAX_DIM = 12


class DimensionCapError(ValueError):
    """Raised when a partition enumeration would exceed the dimension cap."""


class InfeasibleError(ValueError):
    """Raised when no convex combination of partition matrices fits the data."""


class NotMajorizedError(ValueError):
    """Raised when ``p`` is not Hoffman-majorized by ``q``."""


def _vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {v.shape}")
    return v


def is_nonincreasing_prob(v, tol: float = DEFAULT_TOL) -> bool:
    """Return True if ``v`` is a non-increasing probability vector."""
    v = _vector(v)
    if v.size == 0 or not np.all(np.isfinite(v)):
        return False
    if np.any(v < -tol) or abs(v.sum() - 1.0) > tol:
        return False
    return bool(np.all(v[1:] <= v[:-1] + tol))


def _require_nonincreasing(v, name: str, tol: float) -> np.ndarray:
    v = _vector(v)
    if not is_nonincreasing_prob(v, tol):
        raise ValueError(f"{name} is not a non-increasing probability vector: {v.tolist()}")
    return v


def majorizes(y, x, tol: float = DEFAULT_TOL) -> bool:
    """Return True if ``y`` majorizes ``x`` (``x`` is majorized by ``y``).

    Both vectors are sorted in non-increasing order before the partial sums
    are compared, so this is the permutation-invariant relation.
    """
    y = _vector(y)
    x = _vector(x)
    if y.shape != x.shape:
        raise ValueError(f"length mismatch: {y.size} vs {x.size}")
    ys = np.cumsum(np.sort(y)[::-1])
    xs = np.cumsum(np.sort(x)[::-1])
    if abs(ys[-1] - xs[-1]) > tol:
        return False
    return bool(np.all(xs[:-1] <= ys[:-1] + tol))


def hoffman_majorizes(q, p, tol: float = DEFAULT_TOL) -> bool:
    """Return True if ``p`` is Hoffman-majorized by ``q``.

    Partial sums are compared in the given (non-increasing) order, without
    any rearrangement.

    Raises
    ------
    ValueError
        If either input is not a non-increasing probability vector.
    """
    q = _require_nonincreasing(q, "q", tol)
    p = _require_nonincreasing(p, "p", tol)
    if q.shape != p.shape:
        raise ValueError(f"length mismatch: {q.size} vs {p.size}")
    return bool(np.all(np.cumsum(p) <= np.cumsum(q) + tol))


def is_hoffman_matrix(R, tol: float = DEFAULT_TOL) -> bool:
    """Check the defining inequalities of a Hoffman matrix.

    The corner, row-sum and symmetry conditions are checked directly. The
    "cross" inequality ``R[i,j] + R[i-1,j+1] >= R[i-1,j] + R[i,j+1]`` is
    checked for every ``i <= j`` with entries outside the matrix read as 0;
    this boundary convention is what makes the ``d = 2`` case reduce to a
    t-transform with ``t >= 1/2``.
    """
    R = np.asarray(R, dtype=float)
    if R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {R.shape}")
    d = R.shape[0]
    if R[0, d - 1] < -tol:
        return False
    if np.any(np.abs(R.sum(axis=1) - 1.0) > tol):
        return False
    if np.any(np.abs(R - R.T) > tol):
        return False
    padded = np.zeros((d + 1, d + 1))
    padded[1:, :d] = R  # padded[i + 1, j] == R[i, j]; row 0 and column d are zero
    for i in range(d):
        for j in range(i, d):
            lhs = padded[i + 1, j] + padded[i, j + 1]
            rhs = padded[i, j] + padded[i + 1, j + 1]
            if lhs < rhs - tol:
                return False
    return True


@dataclass(frozen=True)
class Partition:
    """Partition of ``{0, ..., d-1}`` into runs of consecutive integers."""

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(int(i) for i in part) for part in self.parts)
        flat = [i for part in parts for i in part]
        if not parts or any(len(part) == 0 for part in parts):
            raise ValueError("partition parts must be non-empty")
        if flat != list(range(len(flat))):
            raise ValueError(f"parts must cover 0..d-1 consecutively, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def dim(self) -> int:
        return self.parts[-1][-1] + 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(part) for part in self.parts)

    @property
    def offsets(self) -> tuple[int, ...]:
        """First index of every part."""
        return tuple(part[0] for part in self.parts)

    @property
    def cuts(self) -> tuple[bool, ...]:
        """``cuts[k]`` is True when a part boundary lies between ``k`` and ``k+1``."""
        starts = set(self.offsets)
        return tuple((k + 1) in starts for k in range(self.dim - 1))

    @classmethod
    def from_cuts(cls, cuts: Sequence[bool]) -> "Partition":
        parts, current = [], [0]
        for k, cut in enumerate(cuts):
            if cut:
                parts.append(tuple(current))
                current = []
            current.append(k + 1)
        parts.append(tuple(current))
        return cls(tuple(parts))

    def __str__(self) -> str:
        return "(" + ",".join("".join(str(i) for i in part) for part in self.parts) + ")"


def enumerate_partitions(d: int, max_dim: int = DEFAULT_MAX_DIM) -> list[Partition]:
    """All ``2**(d-1)`` partitions of ``{0..d-1}`` into consecutive parts.

    Partition number ``m`` joins indices ``k`` and ``k+1`` when bit ``k`` of
    ``m`` is set, so the list starts with the all-singleton partition and
    ends with the single block.
    """
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    if d > max_dim:
        raise DimensionCapError(f"d={d} exceeds the dimension cap {max_dim}")
    out = []
    for m in range(2 ** (d - 1)):
        out.append(Partition.from_cuts([not (m >> k) & 1 for k in range(d - 1)]))
    return out


def partition_matrix(tau: Partition) -> np.ndarray:
    """Block-diagonal averaging matrix with an ``n x n`` block of ``1/n`` per part."""
    d = tau.dim
    M = np.zeros((d, d))
    for part in tau.parts:
        lo, hi = part[0], part[-1] + 1
        M[lo:hi, lo:hi] = 1.0 / len(part)
    return M


@dataclass(frozen=True)
class HoffmanDecomposition:
    """Convex weights over partition matrices."""

    weights: Mapping[Partition, float] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return next(iter(self.weights)).dim

    def matrix(self) -> np.ndarray:
        d = self.dim
        R = np.zeros((d, d))
        for tau, w in self.weights.items():
            R += w * partition_matrix(tau)
        return R

    def total(self) -> float:
        return float(sum(self.weights.values()))

    def to_records(self) -> list[dict]:
        return [{"cuts": list(tau.cuts), "weight": float(w)} for tau, w in self.weights.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "HoffmanDecomposition":
        return cls({Partition.from_cuts(r["cuts"]): float(r["weight"]) for r in records})


def project_simplex(v) -> np.ndarray:
    """Euclidean projection of ``v`` onto the probability simplex."""
    v = _vector(v)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / ind > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def _simplex_lstsq(A: np.ndarray, b: np.ndarray, maxiter: int = 5000) -> np.ndarray:
    # accelerated projected gradient for min ||A x - b||^2 over the simplex
    n = A.shape[1]
    step = 1.0 / max(np.linalg.norm(A, 2) ** 2, 1e-300)
    x = np.full(n, 1.0 / n)
    y, t = x.copy(), 1.0
    for _ in range(maxiter):
        x_new = project_simplex(y - step * (A.T @ (A @ y - b)))
        t_new = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t * t))
        y = x_new + ((t - 1.0) / t_new) * (x_new - x)
        if np.max(np.abs(x_new - x)) < 1e-15:
            x = x_new
            break
        x, t = x_new, t_new
    return x


def _convex_fit(A: np.ndarray, b: np.ndarray, tol: float) -> tuple[np.ndarray, float]:
    """Nonnegative weights ``x`` with ``A x ~ b`` and ``sum(x) = 1``."""
    scale = max(1.0, float(np.abs(A).max()))
    A_aug = np.vstack([A, scale * np.ones(A.shape[1])])
    b_aug = np.append(b, scale)
    x, _ = nnls(A_aug, b_aug, maxiter=50 * A.shape[1])
    x = x / x.sum() if x.sum() > 0 else x
    err = float(np.max(np.abs(A @ x - b))) if x.sum() > 0 else np.inf
    if tol < err < 1e3 * tol:
        # near-feasible: NNLS may have stalled on a degenerate active set
        x2 = _simplex_lstsq(A, b)
        err2 = float(np.max(np.abs(A @ x2 - b)))
        if err2 < err:
            x, err = x2, err2
    return x, err


def _clean(weights: np.ndarray, partitions: list[Partition]) -> HoffmanDecomposition:
    # weights at rounding level carry no information; drop them and renormalize
    keep = weights > 1e-14
    w = weights[keep] / weights[keep].sum()
    kept = [tau for tau, k in zip(partitions, keep) if k]
    return HoffmanDecomposition({tau: float(x) for tau, x in zip(kept, w)})


def decompose_hoffman(R, tol: float = DEFAULT_TOL, max_dim: int = DEFAULT_MAX_DIM) -> HoffmanDecomposition:
    """Write a Hoffman matrix as a convex combination of partition matrices.

    The weights solve the linear feasibility problem
    ``sum_tau w_tau M^tau = R, w >= 0, sum w = 1`` by nonnegative least
    squares, falling back to projected gradient on the simplex. The
    representation is generally not unique; only the reconstruction error
    ``max |sum w M - R| <= tol`` is guaranteed.

    Raises
    ------
    InfeasibleError
        If no convex combination reproduces ``R`` within ``tol``.
    DimensionCapError
        If ``R`` is larger than ``max_dim``.
    """
    R = np.asarray(R, dtype=float)
    if R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {R.shape}")
    partitions = enumerate_partitions(R.shape[0], max_dim)
    A = np.column_stack([partition_matrix(tau).ravel() for tau in partitions])
    w, err = _convex_fit(A, R.ravel(), tol)
    if err > tol:
        raise InfeasibleError(f"not a Hoffman matrix to working precision (residual {err:.3e})")
    return _clean(w, partitions)


def hoffman_weights(p, q, tol: float = DEFAULT_TOL, max_dim: int = DEFAULT_MAX_DIM) -> HoffmanDecomposition:
    """Convex weights ``w`` with ``sum_tau w_tau M^tau q = p``.

    Raises
    ------
    NotMajorizedError
        If ``p`` is not Hoffman-majorized by ``q``.
    """
    if not hoffman_majorizes(q, p, tol):
        raise NotMajorizedError("p is not Hoffman-majorized by q")
    p, q = _vector(p), _vector(q)
    partitions = enumerate_partitions(p.size, max_dim)
    A = np.column_stack([partition_matrix(tau) @ q for tau in partitions])
    w, err = _convex_fit(A, p, tol)
    if err > tol:
        raise InfeasibleError(f"no Hoffman matrix found within tolerance (residual {err:.3e})")
    return _clean(w, partitions)


def find_hoffman_matrix(p, q, tol: float = DEFAULT_TOL, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Return a Hoffman matrix ``R`` with ``R q = p``.

    Raises
    ------
    NotMajorizedError
        If ``p`` is not Hoffman-majorized by ``q``.
    """
    return hoffman_weights(p, q, tol, max_dim).matrix()


def is_asymmetric_hoffman_matrix(D, tol: float = DEFAULT_TOL) -> bool:
    """Doubly stochastic, nonnegative, with row-ordered partial row sums.

    Equivalently ``D`` maps every non-increasing probability vector to a
    non-increasing probability vector.
    """
    D = np.asarray(D, dtype=float)
    if D.ndim != 2 or D.shape[0] != D.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {D.shape}")
    if np.any(D < -tol):
        return False
    if np.any(np.abs(D.sum(axis=0) - 1) > tol) or np.any(np.abs(D.sum(axis=1) - 1) > tol):
        return False
    S = np.cumsum(D, axis=1)
    return bool(np.all(S[1:] <= S[:-1] + tol))


def asymmetric_hoffman_majorizes(q, p, tol: float = DEFAULT_TOL) -> np.ndarray | None:
    """Find a doubly stochastic ``D`` with ``p = D q`` that preserves ordering.

    Solved as an LP feasibility problem; returns None when infeasible.
    """
    q = _require_nonincreasing(q, "q", tol)
    p = _require_nonincreasing(p, "p", tol)
    if q.shape != p.shape:
        raise ValueError(f"length mismatch: {q.size} vs {p.size}")
    n = q.size
    idx = np.arange(n * n).reshape(n, n)  # variable idx[k, l] is D[k, l]

    A_eq, b_eq = [], []
    for k in range(n):
        row = np.zeros(n * n)
        row[idx[k]] = 1
        A_eq.append(row)
        b_eq.append(1.0)
        col = np.zeros(n * n)
        col[idx[:, k]] = 1
        A_eq.append(col)
        b_eq.append(1.0)
        act = np.zeros(n * n)
        act[idx[k]] = q
        A_eq.append(act)
        b_eq.append(p[k])

    A_ub = []
    for k in range(n - 1):
        for j in range(n - 1):
            # sum_{i<=j} D[k+1, i] - sum_{i<=j} D[k, i] <= 0
            row = np.zeros(n * n)
            row[idx[k + 1, : j + 1]] = 1
            row[idx[k, : j + 1]] -= 1
            A_ub.append(row)

    res = linprog(
        np.zeros(n * n),
        A_ub=np.array(A_ub) if A_ub else None,
        b_ub=np.zeros(len(A_ub)) if A_ub else None,
        A_eq=np.array(A_eq),
        b_eq=np.array(b_eq),
        bounds=(0, None),
        method="highs",
    )
    if res.status != 0:
        return None
    D = res.x.reshape(n, n)
    if np.max(np.abs(D @ q - p)) > tol or not is_asymmetric_hoffman_matrix(D, tol):
        return None
    return D
