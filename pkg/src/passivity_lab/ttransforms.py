"""Passive t-transforms on adjacent levels and their ordered products."""

from __future__ import annotations

import numpy as np

from .majorization import DEFAULT_TOL

__all__ = ["t_transform", "is_passive_stochastic", "ordered_product_passive", "product_passive_region"]


def t_transform(t: float, i: int, d: int) -> np.ndarray:
    """Identity with ``[[t, 1-t], [1-t, t]]`` placed on levels ``(i, i+1)``.

    Examples
    --------
    >>> t_transform(0.5, 0, 2)
    array([[0.5, 0.5],
           [0.5, 0.5]])
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if d < 2 or not 0 <= i <= d - 2:
        raise ValueError(f"position {i} out of range for dimension {d}")
    T = np.eye(d)
    T[i, i] = T[i + 1, i + 1] = t
    T[i, i + 1] = T[i + 1, i] = 1.0 - t
    return T


def is_passive_stochastic(M, tol: float = DEFAULT_TOL) -> bool:
    """True if ``M`` maps every non-increasing probability vector to one.

    Only the extremal vectors ``e_k`` (uniform on levels ``0..k``) are
    tested; they span the set by convexity.
    """
    M = np.asarray(M, dtype=float)
    d = M.shape[1]
    for k in range(d):
        e = np.zeros(d)
        e[: k + 1] = 1.0 / (k + 1)
        if np.any(np.diff(M @ e) > tol):
            return False
    return True


def ordered_product_passive(t: float, s: float, tol: float = DEFAULT_TOL) -> tuple[bool, bool]:
    """Passivity of ``T1 @ T2`` and of ``T2 @ T1`` for qutrit t-transforms.

    ``T1`` acts on levels (0, 1) with parameter ``t`` and ``T2`` on levels
    (1, 2) with parameter ``s``.
    """
    T1 = t_transform(t, 0, 3)
    T2 = t_transform(s, 1, 3)
    return is_passive_stochastic(T1 @ T2, tol), is_passive_stochastic(T2 @ T1, tol)


def product_passive_region(t: float, s: float) -> tuple[bool, bool]:
    """Closed-form passivity region of the two ordered products.

    Working out the extremal conditions gives ``T1 @ T2`` passive iff
    ``t >= 1/2`` and ``s >= t / (1 + t)``, and ``T2 @ T1`` passive iff
    ``s >= 1/2`` and ``t >= s / (1 + s)``. Both are passive together
    exactly when ``t >= 1/2`` and ``s >= 1/2``.
    """
    return (t >= 0.5 and s * (1 + t) >= t, s >= 0.5 and t * (1 + s) >= s)
