"""Kraus channels, property certificates and the passivity-preserving builders.

Channels are compared through their Choi matrices, never through Kraus
lists, since Kraus representations are only unique up to an isometric
remixing.

Certification of passivity preservation uses the extremal passive states:
a channel is linear and the target sets are convex, so checking the
vertices is complete.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .majorization import (
    DEFAULT_TOL,
    HoffmanDecomposition,
    NotMajorizedError,
    hoffman_majorizes,
    hoffman_weights,
)
from .states import (
    PureStateD,
    as_density,
    as_energies,
    extremal_passive,
    is_passive,
    is_virtually_cooler,
    thermal_populations,
    vc_extreme_points,
)

__all__ = [
    "KrausChannel",
    "PovmSet",
    "Certificate",
    "apply",
    "choi",
    "channels_equal",
    "is_trace_preserving",
    "is_incoherent",
    "is_strictly_incoherent",
    "certify_ppo",
    "is_ppo",
    "certify_rppo",
    "is_rppo",
    "is_abo",
    "certify_abo",
    "build_abo",
    "build_athermal",
    "build_rppo_pure",
    "rppo_from_decomposition",
    "transform_pure_state",
    "build_qubit_ppo_pure",
    "qubit_canonical_kraus",
    "qubit_ppo_constraints",
    "qubit_ppo_canonical",
    "dilation_channel",
    "qubit_stinespring_ppo",
    "qutrit_stinespring_counterexample",
    "qutrit_example_channel",
    "qutrit_appendix_channel",
]


class KrausChannel:
    """Completely positive map ``rho -> sum_k K_k rho K_k^dagger``.

    Trace preservation is not enforced on construction; use
    :func:`is_trace_preserving` to check it.
    """

    def __init__(self, kraus: Sequence, in_dim: int | None = None, out_dim: int | None = None):
        ops = [np.array(K, dtype=complex) for K in kraus]
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        shape = ops[0].shape
        if len(shape) != 2 or any(K.shape != shape for K in ops):
            raise ValueError("Kraus operators must be 2-d and share one shape")
        if in_dim is not None and in_dim != shape[1]:
            raise ValueError(f"in_dim={in_dim} does not match Kraus shape {shape}")
        if out_dim is not None and out_dim != shape[0]:
            raise ValueError(f"out_dim={out_dim} does not match Kraus shape {shape}")
        for K in ops:
            K.flags.writeable = False
        self._kraus = tuple(ops)
        self.out_dim, self.in_dim = shape

    @property
    def kraus(self) -> tuple[np.ndarray, ...]:
        return self._kraus

    def __len__(self) -> int:
        return len(self._kraus)

    def __repr__(self) -> str:
        return f"KrausChannel(n_kraus={len(self)}, in_dim={self.in_dim}, out_dim={self.out_dim})"

    @classmethod
    def identity(cls, d: int) -> "KrausChannel":
        return cls([np.eye(d)])

    @classmethod
    def unitary(cls, U) -> "KrausChannel":
        return cls([U])

    def __call__(self, rho) -> np.ndarray:
        return apply(self, rho)

    def kraus_sum(self) -> np.ndarray:
        """``sum_k K_k^dagger K_k``."""
        return sum(K.conj().T @ K for K in self._kraus)

    def compose(self, first: "KrausChannel") -> "KrausChannel":
        """The channel ``self o first`` (apply ``first``, then ``self``)."""
        if first.out_dim != self.in_dim:
            raise ValueError("dimension mismatch in composition")
        return KrausChannel([A @ B for A in self._kraus for B in first.kraus])

    def mix(self, other: "KrausChannel", weight: float) -> "KrausChannel":
        """Convex mixture ``weight * self + (1 - weight) * other``."""
        if not 0.0 <= weight <= 1.0:
            raise ValueError("mixing weight must lie in [0, 1]")
        if (self.in_dim, self.out_dim) != (other.in_dim, other.out_dim):
            raise ValueError("dimension mismatch in mixture")
        ops = [np.sqrt(weight) * K for K in self._kraus]
        ops += [np.sqrt(1.0 - weight) * K for K in other.kraus]
        return KrausChannel(ops)

    def conjugated(self, U_out=None, U_in=None) -> "KrausChannel":
        """Channel ``rho -> U_out Phi(U_in^dagger rho U_in) U_out^dagger``."""
        ops = []
        for K in self._kraus:
            if U_in is not None:
                K = K @ np.asarray(U_in).conj().T
            if U_out is not None:
                K = np.asarray(U_out) @ K
            ops.append(K)
        return KrausChannel(ops)


def apply(channel: KrausChannel, rho) -> np.ndarray:
    """``sum_k K_k rho K_k^dagger``. A 1-d ``rho`` is read as populations."""
    rho = as_density(rho)
    if rho.shape[0] != channel.in_dim:
        raise ValueError(f"dimension mismatch: state {rho.shape[0]} vs channel input {channel.in_dim}")
    return sum(K @ rho @ K.conj().T for K in channel.kraus)


def choi(channel: KrausChannel) -> np.ndarray:
    """Choi matrix ``sum_ij |i><j| (x) Phi(|i><j|)``, input factor first."""
    d_in, d_out = channel.in_dim, channel.out_dim
    C = np.zeros((d_in * d_out, d_in * d_out), dtype=complex)
    for K in channel.kraus:
        v = K.T.reshape(-1)  # v[i * d_out + a] = K[a, i]
        C += np.outer(v, v.conj())
    return C


def channels_equal(a: KrausChannel, b: KrausChannel, tol: float = DEFAULT_TOL) -> bool:
    if (a.in_dim, a.out_dim) != (b.in_dim, b.out_dim):
        raise ValueError("channels act between different dimensions")
    return bool(np.max(np.abs(choi(a) - choi(b))) <= tol)


def is_trace_preserving(channel: KrausChannel, tol: float = DEFAULT_TOL) -> bool:
    return bool(np.max(np.abs(channel.kraus_sum() - np.eye(channel.in_dim))) <= tol)


def _is_diagonal(M: np.ndarray, tol: float) -> bool:
    return bool(np.max(np.abs(M - np.diag(np.diag(M))), initial=0.0) <= tol)


def is_incoherent(channel: KrausChannel, tol: float = DEFAULT_TOL) -> bool:
    """True if every energy eigenstate is mapped to a diagonal state."""
    for i in range(channel.in_dim):
        e = np.zeros(channel.in_dim)
        e[i] = 1.0
        if not _is_diagonal(apply(channel, e), tol):
            return False
    return True


def is_strictly_incoherent(channel: KrausChannel, tol: float = DEFAULT_TOL) -> bool:
    """True if each Kraus operator has at most one nonzero entry per column."""
    return all(np.all(np.sum(np.abs(K) > tol, axis=0) <= 1) for K in channel.kraus)


@dataclass
class Certificate:
    """Outcome of a channel property check, with failing inputs as witnesses."""

    property: str
    verdict: bool
    witnesses: list[dict] = field(default_factory=list)
    checked: int = 0

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict,
            "checked": self.checked,
            "witnesses": [
                {k: _jsonable(v) for k, v in w.items()} for w in self.witnesses
            ],
        }


def _jsonable(v):
    if isinstance(v, np.ndarray):
        if np.iscomplexobj(v):
            if v.ndim == 2 and np.max(np.abs(v - np.diag(np.diag(v))), initial=0.0) == 0 and np.all(np.diag(v).imag == 0):
                return {"diag": np.diag(v).real.tolist()}
            return {"re": v.real.tolist(), "im": v.imag.tolist()}
        return v.tolist()
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


def _random_passive(d: int, rng: np.random.Generator) -> np.ndarray:
    w = rng.dirichlet(np.ones(d))
    return sum(wk * extremal_passive(k, d) for k, wk in enumerate(w))


def certify_ppo(
    channel: KrausChannel,
    tol: float = DEFAULT_TOL,
    samples: int = 0,
    rng: np.random.Generator | None = None,
) -> Certificate:
    """Check that every extremal passive state is mapped to a passive state.

    With ``samples > 0`` the verdict is cross-checked on that many random
    passive inputs; any disagreement is reported as a ``"sample"`` witness.
    """
    cert = Certificate("ppo", True)
    d = channel.in_dim
    for k in range(d):
        out = apply(channel, extremal_passive(k, d))
        cert.checked += 1
        if not is_passive(out, tol=tol):
            cert.verdict = False
            cert.witnesses.append({"kind": "extremal", "k": k, "input": extremal_passive(k, d), "output": out})
    if samples:
        rng = np.random.default_rng(rng)
        for _ in range(samples):
            r = _random_passive(d, rng)
            out = apply(channel, r)
            cert.checked += 1
            if not is_passive(out, tol=tol) and cert.verdict:
                cert.verdict = False
                cert.witnesses.append({"kind": "sample", "input": r, "output": out})
    return cert


def is_ppo(channel: KrausChannel, tol: float = DEFAULT_TOL) -> bool:
    """True if the channel maps passive states to passive states."""
    return certify_ppo(channel, tol).verdict


def certify_rppo(
    channel: KrausChannel,
    p,
    q,
    tol: float = DEFAULT_TOL,
    samples: int = 0,
    rng: np.random.Generator | None = None,
) -> Certificate:
    """Check that states virtually cooler than ``p`` go to states cooler than ``q``.

    The extreme points of the input set are tested; with ``samples > 0`` the
    verdict is also checked on random virtually-cooler inputs.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.size != channel.in_dim or q.size != channel.out_dim:
        raise ValueError("reference states do not match the channel dimensions")
    cert = Certificate("rppo", True)

    def check(r, kind):
        out = apply(channel, r)
        cert.checked += 1
        ok = is_passive(out, tol=tol) and is_virtually_cooler(np.real(np.diag(out)), q, tol)
        if not ok:
            cert.verdict = False
            cert.witnesses.append({"kind": kind, "input": r, "output": out})

    for r in vc_extreme_points(p):
        check(r, "extremal")
    if samples:
        rng = np.random.default_rng(rng)
        points = vc_extreme_points(p)
        for _ in range(samples):
            w = rng.dirichlet(np.ones(len(points)))
            r = sum(wk * pt for wk, pt in zip(w, points))
            if cert.verdict:
                check(r, "sample")
    return cert


def is_rppo(channel: KrausChannel, p, q, tol: float = DEFAULT_TOL) -> bool:
    """True if the channel maps ``T_p`` (states cooler than ``p``) into ``T_q``."""
    return certify_rppo(channel, p, q, tol).verdict


@dataclass(frozen=True)
class PovmSet:
    """Positive operators ``Gamma_k`` summing to the identity."""

    elements: tuple[np.ndarray, ...]

    def __post_init__(self):
        els = tuple(np.array(G, dtype=complex) for G in self.elements)
        if not els:
            raise ValueError("a POVM needs at least one element")
        if any(G.shape != els[0].shape or G.shape[0] != G.shape[1] for G in els):
            raise ValueError("POVM elements must be square and share one shape")
        object.__setattr__(self, "elements", els)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def is_valid(self, tol: float = DEFAULT_TOL) -> bool:
        if np.max(np.abs(sum(self.elements) - np.eye(self.dim))) > tol:
            return False
        return all(
            np.max(np.abs(G - G.conj().T)) <= tol and np.linalg.eigvalsh(G).min() >= -tol
            for G in self.elements
        )

    def is_ordered(self, tol: float = DEFAULT_TOL) -> bool:
        """True if ``Gamma_j - Gamma_k`` is positive semidefinite for all ``k > j``."""
        n = len(self.elements)
        for j in range(n):
            for k in range(j + 1, n):
                diff = self.elements[j] - self.elements[k]
                if np.linalg.eigvalsh(0.5 * (diff + diff.conj().T)).min() < -tol:
                    return False
        return True


def _matrix_unit(d: int, i: int, j: int) -> np.ndarray:
    X = np.zeros((d, d), dtype=complex)
    X[i, j] = 1.0
    return X


def is_abo(channel: KrausChannel, tol: float = DEFAULT_TOL) -> PovmSet | None:
    """Return the measurement POVM if the channel is activity breaking.

    The channel must send every matrix unit ``|i><j|`` to a diagonal
    operator (so it measures and prepares energy eigenstates) and the POVM
    ``Gamma_k = sum K^dagger |k><k| K`` must be ordered. Returns None
    otherwise.
    """
    d = channel.in_dim
    for i in range(d):
        for j in range(d):
            if not _is_diagonal(apply(channel, _matrix_unit(d, i, j)), tol):
                return None
    povm = PovmSet(tuple(
        sum(np.outer(K[k].conj(), K[k]) for K in channel.kraus) for k in range(channel.out_dim)
    ))
    return povm if povm.is_ordered(tol) else None


def certify_abo(channel: KrausChannel, tol: float = DEFAULT_TOL) -> Certificate:
    povm = is_abo(channel, tol)
    cert = Certificate("abo", povm is not None, checked=channel.in_dim**2)
    if povm is not None:
        cert.witnesses.append({"kind": "povm", "elements": [G for G in povm.elements]})
    return cert


def build_abo(povm: PovmSet, tol: float = DEFAULT_TOL) -> KrausChannel:
    """Measure-and-prepare channel ``rho -> sum_k Tr[rho Gamma_k] |k><k|``.

    Raises
    ------
    ValueError
        If the POVM is invalid or not ordered.
    """
    if not povm.is_valid(tol):
        raise ValueError("POVM elements must be positive and sum to the identity")
    if not povm.is_ordered(tol):
        raise ValueError("POVM must satisfy Gamma_j >= Gamma_k for all k > j")
    n, d = len(povm.elements), povm.dim
    ops = []
    for k, G in enumerate(povm.elements):
        lam, V = np.linalg.eigh(0.5 * (G + G.conj().T))
        for val, v in zip(lam, V.T):
            if val > 1e-15:
                K = np.zeros((n, d), dtype=complex)
                K[k] = np.sqrt(val) * v.conj()
                ops.append(K)
    return KrausChannel(ops)


def build_athermal(H, beta: float) -> KrausChannel:
    """Channel that outputs the Gibbs state at inverse temperature ``beta``."""
    g = thermal_populations(H, beta)
    d = g.size
    return build_abo(PovmSet(tuple(gk * np.eye(d) for gk in g)))


def _rppo_kraus_full_support(p: np.ndarray, q: np.ndarray, dec: HoffmanDecomposition) -> list[np.ndarray]:
    d = p.size
    ops = []
    for tau, alpha in dec.weights.items():
        sizes, offsets = tau.sizes, tau.offsets
        scale = np.sqrt(alpha / np.prod(sizes))
        # one Kraus operator per choice of cyclic shift in every part
        for shifts in itertools.product(*(range(n) for n in sizes)):
            K = np.zeros((d, d))
            for n, mu, a in zip(sizes, offsets, shifts):
                for j in range(n):
                    dst = mu + (j + a) % n
                    K[dst, mu + j] = np.sqrt(q[dst] / p[mu + j])
            ops.append(scale * K)
    return ops


def build_rppo_pure(p, q, tol: float = DEFAULT_TOL) -> KrausChannel:
    """Strictly incoherent RPPO taking ``sum sqrt(p_i)|i>`` to ``sum sqrt(q_i)|i>``.

    The Hoffman matrix with ``R q = p`` is written as a convex combination of
    partition matrices; each partition ``tau`` with weight ``alpha`` then
    contributes ``prod |tau_i|`` Kraus operators, one for each choice of a
    cyclic shift inside every part. Trailing zeros of ``p`` are handled by
    building the channel on the support and padding with a multiple of the
    identity on the remaining levels.

    Raises
    ------
    NotMajorizedError
        If ``p`` is not Hoffman-majorized by ``q``.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if not hoffman_majorizes(q, p, tol):
        raise NotMajorizedError("p is not Hoffman-majorized by q; no strictly incoherent RPPO exists")
    d = p.size
    m = int(np.count_nonzero(p > tol))
    if m == d:
        return KrausChannel(_rppo_kraus_full_support(p, q, hoffman_weights(p, q, tol)))
    ps, qs = p[:m] / p[:m].sum(), q[:m] / q[:m].sum()
    inner = _rppo_kraus_full_support(ps, qs, hoffman_weights(ps, qs, tol)) if m > 1 else [np.ones((1, 1))]
    pad = np.eye(d - m) / np.sqrt(len(inner))
    ops = []
    for L in inner:
        K = np.zeros((d, d))
        K[:m, :m] = L
        K[m:, m:] = pad
        ops.append(K)
    return KrausChannel(ops)


def rppo_from_decomposition(p, q, dec: HoffmanDecomposition, tol: float = DEFAULT_TOL) -> KrausChannel:
    """The Kraus construction of :func:`build_rppo_pure` for given partition weights.

    ``p`` must have full support and equal ``dec.matrix() @ q``.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if np.any(p <= tol):
        raise ValueError("p must have full support")
    if np.max(np.abs(dec.matrix() @ q - p)) > tol:
        raise ValueError("the decomposition does not map q to p")
    return KrausChannel(_rppo_kraus_full_support(p, q, dec))


def transform_pure_state(psi: PureStateD, phi: PureStateD, tol: float = DEFAULT_TOL) -> KrausChannel:
    """RPPO mapping ``psi`` to ``phi`` including their phases.

    Phases are undone on the input and restored on the output by diagonal
    unitaries around :func:`build_rppo_pure`.
    """
    inner = build_rppo_pure(psi.p, phi.p, tol)
    return inner.conjugated(
        U_out=np.diag(np.exp(1j * np.array(phi.phases))),
        U_in=np.diag(np.exp(1j * np.array(psi.phases))),
    )


def build_qubit_ppo_pure(p, q, tol: float = DEFAULT_TOL) -> KrausChannel:
    """Two-Kraus qubit PPO mapping ``sqrt(p0)|0> + sqrt(p1)|1>`` to the ``q`` state.

    ``a`` is the parameter of the t-transform with ``p = R q``.

    Raises
    ------
    NotMajorizedError
        If ``p`` is not Hoffman-majorized by ``q``.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.size != 2 or q.size != 2:
        raise ValueError("qubit vectors must have length 2")
    if not hoffman_majorizes(q, p, tol):
        raise NotMajorizedError("p is not Hoffman-majorized by q")
    if p[1] <= tol:
        if q[1] > tol:
            raise NotMajorizedError("p1 = 0 requires q1 = 0")
        return KrausChannel.identity(2)
    a = 1.0 if q[0] - q[1] <= tol else (p[0] - q[1]) / (q[0] - q[1])
    a = float(np.clip(a, 0.5, 1.0))
    b = 1.0 - a
    L1 = np.diag([np.sqrt(a * q[0] / p[0]), np.sqrt(a * q[1] / p[1])])
    L2 = np.array([[0.0, np.sqrt(b * q[0] / p[1])], [np.sqrt(b * q[1] / p[0]), 0.0]])
    return KrausChannel([L1, L2])


def qubit_canonical_kraus(a, b) -> KrausChannel:
    """The five incoherent qubit Kraus operators built from ``a`` (5 real) and ``b`` (4 complex).

    No constraint is checked here; see :func:`qubit_ppo_canonical`.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=complex)
    if a.shape != (5,) or b.shape != (4,):
        raise ValueError("need 5 real a-parameters and 4 complex b-parameters")
    a1, a2, a3, a4, a5 = a
    b1, b2, b3, b4 = b
    return KrausChannel([
        [[a1, b1], [0, 0]],
        [[0, 0], [a2, b2]],
        [[a3, 0], [0, b3]],
        [[0, b4], [a4, 0]],
        [[a5, 0], [0, 0]],
    ])


def qubit_ppo_constraints(a, b) -> dict[str, float]:
    """Slack of every constraint on the canonical parameters (>= 0 when satisfied).

    Equality constraints report minus their absolute violation.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=complex)
    a2, b2 = a**2, np.abs(b) ** 2
    ground = a2[0] + a2[2] + a2[4]
    return {
        "a_normalized": -abs(a2.sum() - 1.0),
        "b_normalized": -abs(b2.sum() - 1.0),
        "orthogonality": -abs(a[0] * b[0] + a[1] * b[1]),
        "passive_ground": ground - (a2[1] + a2[3]),
        "passive_mixed": ground + b2[0] + b2[3] - (a2[1] + a2[3] + b2[1] + b2[2]),
    }


def qubit_ppo_canonical(a, b, tol: float = DEFAULT_TOL) -> KrausChannel:
    """Qubit PPO in the canonical five-Kraus form.

    Raises
    ------
    ValueError
        Naming every violated constraint.
    """
    bad = [name for name, slack in qubit_ppo_constraints(a, b).items() if slack < -tol]
    if bad:
        raise ValueError(f"constraints violated: {', '.join(bad)}")
    return qubit_canonical_kraus(a, b)


def dilation_channel(U, env_populations, d_sys: int) -> KrausChannel:
    """Reduced channel ``Tr_E[U (rho (x) sigma_E) U^dagger]`` for a diagonal ``sigma_E``.

    ``U`` acts on system (x) environment with the system index first.
    """
    env = np.asarray(env_populations, dtype=float)
    d_env = env.size
    U = np.asarray(U, dtype=complex)
    if U.shape != (d_sys * d_env, d_sys * d_env):
        raise ValueError(f"unitary shape {U.shape} does not match {d_sys} x {d_env}")
    U4 = U.reshape(d_sys, d_env, d_sys, d_env)
    ops = [np.sqrt(env[e]) * U4[:, f, :, e] for e in range(d_env) if env[e] > 0 for f in range(d_env)]
    return KrausChannel(ops)


def qubit_stinespring_ppo(alpha: complex, q_env: float) -> KrausChannel:
    """Qubit channel from an energy-preserving two-qubit unitary and a passive qubit bath.

    The unitary mixes ``|01>`` and ``|10>`` with amplitude ``alpha`` and
    ``beta = sqrt(1 - |alpha|^2)``; the environment is ``diag(q_env, 1 - q_env)``.
    """
    alpha = complex(alpha)
    if abs(alpha) > 1 + 1e-12:
        raise ValueError("|alpha| must not exceed 1")
    if not 0.5 <= q_env <= 1.0:
        raise ValueError("q_env must lie in [1/2, 1] for a passive environment")
    beta = np.sqrt(max(0.0, 1.0 - abs(alpha) ** 2))
    U = np.zeros((4, 4), dtype=complex)  # columns are images of |00>, |01>, |10>, |11>
    U[0, 0] = 1.0
    U[1, 1], U[2, 1] = alpha, beta
    U[1, 2], U[2, 2] = -np.conj(beta), np.conj(alpha)
    U[3, 3] = 1.0
    return dilation_channel(U, [q_env, 1.0 - q_env], 2)


def qutrit_stinespring_counterexample(q) -> tuple[KrausChannel, np.ndarray]:
    """Energy-preserving swap ``|02> <-> |20>`` with a passive qutrit environment.

    Returns the reduced channel and its output on the ground state, which
    is ``diag(q0 + q1, 0, q2)`` and hence active whenever ``q2 > 0``.
    """
    q = np.asarray(q, dtype=float)
    if q.size != 3:
        raise ValueError("q must have three entries")
    perm = np.arange(9)
    perm[0 * 3 + 2], perm[2 * 3 + 0] = 2 * 3 + 0, 0 * 3 + 2
    U = np.eye(9)[:, perm]
    channel = dilation_channel(U, q, 3)
    return channel, apply(channel, np.array([1.0, 0.0, 0.0]))


def qutrit_example_channel(p, q) -> KrausChannel:
    """Two-Kraus qutrit RPPO for ``p = ((q0 + q1)/2, (q0 + q1)/2, q2)``, written out by hand."""
    p0, p1, p2 = np.asarray(p, dtype=float)
    q0, q1, q2 = np.asarray(q, dtype=float)
    s = np.sqrt
    K1 = np.diag([s(q0 / (2 * p0)), s(q1 / (2 * p1)), s(q2 / (2 * p2))])
    K2 = np.array([
        [0, s(q0 / (2 * p1)), 0],
        [s(q1 / (2 * p0)), 0, 0],
        [0, 0, s(q2 / (2 * p2))],
    ])
    return KrausChannel([K1, K2])


def qutrit_appendix_channel(p, q, weights) -> KrausChannel:
    """Eight-Kraus qutrit RPPO written out explicitly for given partition weights.

    ``weights`` are the convex weights of the partitions
    ``(0,1,2), (01,2), (0,12), (012)`` in that order.
    """
    p0, p1, p2 = np.asarray(p, dtype=float)
    q0, q1, q2 = np.asarray(q, dtype=float)
    w1, w2, w3, w4 = (np.sqrt(max(float(w), 0.0)) for w in weights)
    s = np.sqrt
    ops = [
        w1 * np.diag([s(q0 / p0), s(q1 / p1), s(q2 / p2)]),
        w2 * np.diag([s(q0 / (2 * p0)), s(q1 / (2 * p1)), s(q2 / (2 * p2))]),
        w2 * np.array([[0, s(q0 / (2 * p1)), 0], [s(q1 / (2 * p0)), 0, 0], [0, 0, s(q2 / (2 * p2))]]),
        w3 * np.diag([s(q0 / (2 * p0)), s(q1 / (2 * p1)), s(q2 / (2 * p2))]),
        w3 * np.array([[s(q0 / (2 * p0)), 0, 0], [0, 0, s(q1 / (2 * p2))], [0, s(q2 / (2 * p1)), 0]]),
        w4 * np.diag([s(q0 / (3 * p0)), s(q1 / (3 * p1)), s(q2 / (3 * p2))]),
        w4 * np.array([[0, s(q0 / (3 * p1)), 0], [0, 0, s(q1 / (3 * p2))], [s(q2 / (3 * p0)), 0, 0]]),
        w4 * np.array([[0, 0, s(q0 / (3 * p2))], [s(q1 / (3 * p0)), 0, 0], [0, s(q2 / (3 * p1)), 0]]),
    ]
    return KrausChannel(ops)
