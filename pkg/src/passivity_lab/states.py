"""Passive states, the virtually-cooler order, ergotropy and pure states in D.

States are plain numpy arrays: a density matrix is a ``(d, d)`` complex
array and a passive state is represented by its population vector (the
diagonal in the energy eigenbasis). Functions that take a state accept
either form where that makes sense.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .majorization import DEFAULT_TOL, is_nonincreasing_prob

__all__ = [
    "Hamiltonian",
    "PureStateD",
    "as_density",
    "as_energies",
    "passive_state",
    "thermal_populations",
    "is_passive",
    "extremal_passive",
    "virtual_temperatures",
    "is_virtually_cooler",
    "relative_passivity_witness",
    "vc_extreme_points",
    "energy",
    "ergotropy",
    "monotone_A",
    "monotone_B",
    "in_set_D",
    "strip_phases",
]


@dataclass(frozen=True)
class Hamiltonian:
    """Diagonal Hamiltonian with energies sorted in non-decreasing order."""

    energies: tuple[float, ...]

    def __post_init__(self):
        e = tuple(float(x) for x in np.asarray(self.energies, dtype=float).ravel())
        if not e:
            raise ValueError("a Hamiltonian needs at least one level")
        if any(b < a for a, b in zip(e, e[1:])):
            raise ValueError(f"energies must be non-decreasing, got {e}")
        object.__setattr__(self, "energies", e)

    @property
    def dim(self) -> int:
        return len(self.energies)

    def matrix(self) -> np.ndarray:
        return np.diag(np.array(self.energies, dtype=float))


def as_energies(H) -> np.ndarray:
    """Energy vector from a Hamiltonian, a diagonal matrix or a sequence."""
    if isinstance(H, Hamiltonian):
        return np.array(H.energies)
    H = np.asarray(H)
    if H.ndim == 2:
        if np.any(np.abs(H - np.diag(np.diag(H))) > 0):
            raise ValueError("Hamiltonian must be diagonal in the reference basis")
        H = np.diag(H)
    e = np.real(H).astype(float)
    if np.any(np.diff(e) < 0):
        raise ValueError(f"energies must be non-decreasing, got {e.tolist()}")
    return e


def as_density(rho) -> np.ndarray:
    """Density matrix from a matrix, or from populations (a 1-d vector)."""
    rho = np.asarray(rho)
    if rho.ndim == 1:
        return np.diag(rho.astype(complex))
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    return rho.astype(complex)


def _populations(state) -> np.ndarray:
    state = np.asarray(state)
    if state.ndim == 1:
        return state.astype(float)
    return np.real(np.diag(state)).astype(float)


def passive_state(populations) -> np.ndarray:
    """Diagonal density matrix with the given non-increasing populations."""
    p = np.asarray(populations, dtype=float)
    if not is_nonincreasing_prob(p):
        raise ValueError(f"populations are not non-increasing: {p.tolist()}")
    return np.diag(p).astype(complex)


def thermal_populations(H, beta: float) -> np.ndarray:
    """Gibbs populations ``exp(-beta E_i) / Z``."""
    e = as_energies(H)
    w = np.exp(-beta * (e - e[0]))
    return w / w.sum()


def _check_dim(rho: np.ndarray, H) -> None:
    if H is not None and as_energies(H).size != rho.shape[0]:
        raise ValueError(f"dimension mismatch: state {rho.shape[0]} vs Hamiltonian {as_energies(H).size}")


def is_passive(rho, H=None, tol: float = DEFAULT_TOL) -> bool:
    """True if ``rho`` is diagonal with non-increasing populations.

    Passivity is judged in the labelled energy basis: levels with equal
    energies are still required to carry non-increasing populations. ``H``
    only serves the dimension check.
    """
    rho = as_density(rho)
    _check_dim(rho, H)
    off = rho - np.diag(np.diag(rho))
    if np.any(np.abs(off) > tol):
        return False
    diag = np.diag(rho)
    if np.any(np.abs(diag.imag) > tol):
        return False
    return bool(np.all(diag.real[1:] <= diag.real[:-1] + tol))


def extremal_passive(k: int, d: int) -> np.ndarray:
    """Populations of the extremal passive state: uniform on levels ``0..k``."""
    if not 0 <= k < d:
        raise ValueError(f"k must lie in [0, {d - 1}], got {k}")
    p = np.zeros(d)
    p[: k + 1] = 1.0 / (k + 1)
    return p


def virtual_temperatures(r, H) -> dict[tuple[int, int], float]:
    """Inverse virtual temperatures ``beta[i, j]`` for every pair ``i < j``.

    ``beta[i, j] = ln(r_i / r_j) / (E_j - E_i)``. A vanishing ``r_j`` with
    positive ``r_i`` gives ``inf``; pairs where both populations vanish are
    omitted. For degenerate levels the value is ``inf`` when ``r_i > r_j``
    and ``0`` when they are equal.
    """
    r = _populations(r)
    e = as_energies(H)
    if r.size != e.size:
        raise ValueError(f"dimension mismatch: {r.size} vs {e.size}")
    out = {}
    for i in range(r.size):
        for j in range(i + 1, r.size):
            if r[i] <= 0 and r[j] <= 0:
                continue
            gap = e[j] - e[i]
            if r[j] <= 0:
                out[(i, j)] = np.inf
            elif gap == 0:
                out[(i, j)] = np.inf if r[i] > r[j] else 0.0
            else:
                out[(i, j)] = float(np.log(r[i] / r[j]) / gap)
    return out


def is_virtually_cooler(r, p, tol: float = DEFAULT_TOL) -> bool:
    """True if the passive state ``r`` is virtually cooler than ``p``.

    Uses the division-free form ``r_i p_j >= r_j p_i`` for all ``i < j``,
    together with ``r_i = 0`` wherever ``p_i = 0``.

    Raises
    ------
    ValueError
        If either argument is not passive or the dimensions differ.
    """
    r = _populations(r)
    p = _populations(p)
    if r.shape != p.shape:
        raise ValueError(f"dimension mismatch: {r.size} vs {p.size}")
    for name, v in (("r", r), ("p", p)):
        if not is_nonincreasing_prob(v, tol):
            raise ValueError(f"{name} is not passive: {v.tolist()}")
    if np.any(r[p <= tol] > tol):
        return False
    cross = np.outer(r, p) - np.outer(p, r)  # cross[i, j] = r_i p_j - p_i r_j
    return bool(np.all(cross[np.triu_indices(r.size, 1)] >= -tol))


def relative_passivity_witness(rho, sigma, tol: float = DEFAULT_TOL) -> np.ndarray:
    """``sigma^(-1/2) rho sigma^(-1/2) / Tr[rho sigma^-1]`` on the support of ``sigma``.

    ``rho`` is passive relative to ``sigma`` exactly when the returned
    matrix is passive.

    Raises
    ------
    ValueError
        If ``rho`` has weight outside the support of ``sigma``, or the
        normalisation vanishes.
    """
    rho = as_density(rho)
    p = _populations(sigma)
    if rho.shape[0] != p.size:
        raise ValueError(f"dimension mismatch: {rho.shape[0]} vs {p.size}")
    support = p > tol
    if np.any(np.abs(rho[~support, :]) > tol) or np.any(np.abs(rho[:, ~support]) > tol):
        raise ValueError("rho is not supported inside the support of sigma")
    s = np.zeros(p.size)
    s[support] = 1.0 / np.sqrt(p[support])
    W = s[:, None] * rho * s[None, :]
    norm = np.real(np.trace(W))
    if norm <= tol:
        raise ValueError("Tr[rho sigma^-1] vanishes")
    return W / norm


def vc_extreme_points(p) -> list[np.ndarray]:
    """Extreme points of the set of passive states virtually cooler than ``p``.

    These are ``p`` truncated to its first ``k + 1`` levels and renormalised,
    one per level ``k`` with ``p_k > 0``.
    """
    p = _populations(p)
    out = []
    for k in range(p.size):
        if p[k] <= 0:
            continue
        r = np.zeros(p.size)
        r[: k + 1] = p[: k + 1] / p[: k + 1].sum()
        out.append(r)
    return out


def energy(rho, H) -> float:
    """Mean energy ``Tr[rho H]``."""
    e = as_energies(H)
    rho = np.asarray(rho)
    if rho.shape[0] != e.size:
        raise ValueError(f"dimension mismatch: {rho.shape[0]} vs {e.size}")
    return float(np.dot(_populations(rho), e))


def ergotropy(rho, H) -> float:
    """Maximal energy extractable from ``rho`` by a unitary.

    The mean energy minus the energy of the passive state with the same
    spectrum (largest eigenvalue on the lowest level).
    """
    rho = as_density(rho)
    e = as_energies(H)
    _check_dim(rho, H)
    pop = np.ascontiguousarray(np.real(np.diag(rho)))
    if np.count_nonzero(rho - np.diag(np.diag(rho))) == 0:
        evals = pop.copy()  # exact spectrum of a diagonal state
    else:
        evals = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    q = np.sort(evals)[::-1]
    work = np.dot(e, pop) - np.dot(e, np.ascontiguousarray(q))
    return max(float(work), 0.0)  # clamp rounding noise; the exact value is >= 0


@dataclass(frozen=True)
class PureStateD:
    """Pure state ``sum_i exp(i theta_i) sqrt(p_i) |i>`` with non-increasing ``p``.

    The ground state (``p_0 = 1``) is admitted.
    """

    probs: tuple[float, ...]
    phases: tuple[float, ...] | None = None

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float).ravel()
        if not is_nonincreasing_prob(p):
            raise ValueError(f"probabilities must be non-increasing: {p.tolist()}")
        th = np.zeros(p.size) if self.phases is None else np.asarray(self.phases, dtype=float).ravel()
        if th.size != p.size:
            raise ValueError("probs and phases must have equal length")
        object.__setattr__(self, "probs", tuple(np.clip(p, 0.0, None).tolist()))
        object.__setattr__(self, "phases", tuple(th.tolist()))

    @property
    def dim(self) -> int:
        return len(self.probs)

    @property
    def p(self) -> np.ndarray:
        return np.array(self.probs)

    def vector(self) -> np.ndarray:
        return np.sqrt(self.p) * np.exp(1j * np.array(self.phases))

    def density(self) -> np.ndarray:
        v = self.vector()
        return np.outer(v, v.conj())


def in_set_D(psi, tol: float = DEFAULT_TOL) -> PureStateD | None:
    """Canonical ``(probs, phases)`` form of ``psi`` if it lies in D, else None.

    Raises
    ------
    ValueError
        If ``psi`` is not normalised.
    """
    psi = np.asarray(psi, dtype=complex).ravel()
    if abs(np.vdot(psi, psi).real - 1.0) > tol:
        raise ValueError("state vector is not normalised")
    p = np.abs(psi) ** 2
    if np.any(p[1:] > p[:-1] + tol):
        return None
    phases = np.where(np.abs(psi) > 0, np.angle(psi), 0.0)
    return PureStateD(tuple((p / p.sum()).tolist()), tuple(phases.tolist()))


def strip_phases(psi: PureStateD) -> tuple[PureStateD, np.ndarray]:
    """Phase-free representative of ``psi`` and the diagonal unitary restoring it.

    ``U @ stripped.vector() == psi.vector()``.
    """
    U = np.diag(np.exp(1j * np.array(psi.phases)))
    return PureStateD(psi.probs), U


def _check_monotone_input(psi, H):
    p = psi.p if isinstance(psi, PureStateD) else _populations(psi)
    e = as_energies(H)
    if p.size != e.size:
        raise ValueError(f"dimension mismatch: {p.size} vs {e.size}")
    return p, e


def monotone_A(psi, H, alpha: float) -> float:
    """``E_0^-alpha - sum_i p_i^2 E_i^-alpha``; needs strictly positive energies."""
    p, e = _check_monotone_input(psi, H)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if np.any(e <= 0):
        raise ValueError("monotone_A needs all energies > 0")
    return float(e[0] ** -alpha - np.sum(p**2 * e**-alpha))


def monotone_B(psi, H, alpha: float) -> float:
    """``exp(-alpha E_0) - sum_i p_i^2 exp(-alpha E_i)``."""
    p, e = _check_monotone_input(psi, H)
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    return float(np.exp(-alpha * e[0]) - np.sum(p**2 * np.exp(-alpha * e)))
