"""Random instances for property tests, fuzzing and sweeps.

Every sampler takes a ``numpy.random.Generator`` (or a seed) so that runs
are reproducible.
"""

from __future__ import annotations

import numpy as np

from .majorization import enumerate_partitions, hoffman_majorizes, partition_matrix
from .states import PureStateD

__all__ = [
    "random_passive",
    "random_energies",
    "random_hoffman_pair",
    "random_non_hoffman_pair",
    "random_hoffman_matrix",
    "random_vc_pair",
    "random_density",
    "random_pure_D",
    "random_kraus",
    "random_ordered_povm",
    "random_canonical_params",
]


def _rng(rng) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def random_passive(d: int, rng=None, concentration: float = 1.0) -> np.ndarray:
    """Dirichlet sample sorted into non-increasing order."""
    return np.sort(_rng(rng).dirichlet(np.full(d, concentration)))[::-1]


def random_energies(d: int, rng=None, positive: bool = False) -> np.ndarray:
    """Non-decreasing spectrum; starts at 0, or strictly above 0 if ``positive``."""
    rng = _rng(rng)
    e = np.concatenate([[0.0], np.cumsum(rng.exponential(size=d - 1))])
    return e + rng.uniform(0.1, 1.0) if positive else e


def random_hoffman_matrix(d: int, rng=None, concentration: float = 0.5) -> np.ndarray:
    """Random convex combination of all partition matrices of size ``d``."""
    rng = _rng(rng)
    parts = enumerate_partitions(d)
    w = rng.dirichlet(np.full(len(parts), concentration))
    return sum(wi * partition_matrix(tau) for wi, tau in zip(w, parts))


def random_hoffman_pair(d: int, rng=None) -> tuple[np.ndarray, np.ndarray]:
    """``(p, q)`` with ``p = R q`` for a random Hoffman matrix ``R``."""
    rng = _rng(rng)
    q = random_passive(d, rng)
    p = random_hoffman_matrix(d, rng) @ q
    return p, q


def random_non_hoffman_pair(d: int, rng=None, max_tries: int = 10_000) -> tuple[np.ndarray, np.ndarray]:
    """Passive ``(p, q)`` such that ``q`` does not Hoffman-majorize ``p``."""
    rng = _rng(rng)
    for _ in range(max_tries):
        p, q = random_passive(d, rng), random_passive(d, rng)
        if not hoffman_majorizes(q, p, 1e-9):
            return p, q
    raise RuntimeError("no non-majorized pair found")


def random_vc_pair(d: int, rng=None) -> tuple[np.ndarray, np.ndarray]:
    """``(r, p)`` with ``r`` virtually cooler than ``p``.

    ``r`` is ``p`` reweighted by a random non-increasing positive profile,
    so the ratios ``r_i / p_i`` are non-increasing.
    """
    rng = _rng(rng)
    p = random_passive(d, rng)
    w = np.sort(rng.exponential(size=d))[::-1]
    r = w * p
    return r / r.sum(), p


def random_density(d: int, rng=None, rank: int | None = None) -> np.ndarray:
    """Ginibre-distributed density matrix."""
    rng = _rng(rng)
    G = rng.normal(size=(d, rank or d)) + 1j * rng.normal(size=(d, rank or d))
    rho = G @ G.conj().T
    return rho / np.trace(rho).real


def random_pure_D(d: int, rng=None, phases: bool = True) -> PureStateD:
    """Pure state with non-increasing squared amplitudes."""
    rng = _rng(rng)
    theta = rng.uniform(0, 2 * np.pi, size=d) if phases else None
    return PureStateD(random_passive(d, rng), theta)


def random_kraus(d: int, n: int, rng=None) -> list[np.ndarray]:
    """``n`` Kraus operators of a random trace-preserving channel on ``d`` levels."""
    rng = _rng(rng)
    V = rng.normal(size=(n * d, d)) + 1j * rng.normal(size=(n * d, d))
    Q, _ = np.linalg.qr(V)
    return [Q[k * d:(k + 1) * d] for k in range(n)]


def random_ordered_povm(d: int, n: int | None = None, rng=None) -> list[np.ndarray]:
    """Random POVM ``Gamma_0 >= Gamma_1 >= ... >= 0`` summing to the identity."""
    rng = _rng(rng)
    n = n or d
    B = []
    for _ in range(n):
        G = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        B.append(G @ G.conj().T)
    gammas = [sum(B[k:]) for k in range(n)]
    lam, V = np.linalg.eigh(sum(gammas))
    S = V @ np.diag(lam**-0.5) @ V.conj().T
    return [S @ G @ S for G in gammas]


def _canonical_candidate(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    a = rng.normal(size=5)
    a /= np.linalg.norm(a)
    b = rng.normal(size=4) + 1j * rng.normal(size=4)
    # enforce a1 b1 + a2 b2 = 0 by putting (b1, b2) along (a2, -a1)
    if abs(a[0]) + abs(a[1]) > 0:
        c = b[0]
        b[0], b[1] = c * a[1], -c * a[0]
    b /= np.linalg.norm(b)
    return a, b


def random_canonical_params(
    rng=None, satisfying: bool = True, margin: float = 1e-8, max_tries: int = 100_000
) -> tuple[np.ndarray, np.ndarray]:
    """Canonical qubit parameters ``(a, b)`` obeying the equality constraints.

    With ``satisfying=True`` both passivity inequalities hold; otherwise at
    least one fails by more than ``margin``.
    """
    from .channels import qubit_ppo_constraints

    rng = _rng(rng)
    for _ in range(max_tries):
        a, b = _canonical_candidate(rng)
        slack = qubit_ppo_constraints(a, b)
        worst = min(slack["passive_ground"], slack["passive_mixed"])
        if satisfying and worst >= 0:
            return a, b
        if not satisfying and worst < -margin:
            return a, b
    raise RuntimeError("rejection sampling did not succeed")
