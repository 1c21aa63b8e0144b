"""Refrigerating an external qubit through the virtual qubit of a machine state.

A machine in passive state ``r`` offers the level pair ``(0, d-1)`` as a
virtual qubit. Swapping it with a resonant external qubit leaves the latter
with bias ``P_v B_v + (1 - P_v) B_ext``. :func:`swap_simulate` performs the
swap on the full joint state and serves as an independent check of that
formula.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Sequence

import numpy as np

from .majorization import DEFAULT_TOL
from .states import as_energies, is_passive, is_virtually_cooler, virtual_temperatures

__all__ = [
    "VirtualQubit",
    "ExternalQubit",
    "RefrigerationReport",
    "virtual_qubit",
    "final_bias",
    "swap_simulate",
    "compare_refrigeration",
    "sweep",
    "write_sweep_csv",
]


@dataclass(frozen=True)
class VirtualQubit:
    """Normalization ``P_v``, bias ``B_v``, gap ``E_v`` and inverse temperature ``beta_v``."""

    P_v: float
    B_v: float
    E_v: float
    beta_v: float = np.nan
    levels: tuple[int, int] = (0, -1)


@dataclass(frozen=True)
class ExternalQubit:
    """Qubit with energies ``f0 <= f1`` and populations ``(u0, u1)``."""

    f0: float
    f1: float
    u0: float
    u1: float

    def __post_init__(self):
        if self.u0 < -1e-12 or self.u1 < -1e-12 or abs(self.u0 + self.u1 - 1.0) > 1e-9:
            raise ValueError("populations must be non-negative and sum to 1")

    @classmethod
    def from_bias(cls, bias: float, gap: float, f0: float = 0.0) -> "ExternalQubit":
        return cls(f0, f0 + gap, 0.5 * (1 + bias), 0.5 * (1 - bias))

    @property
    def gap(self) -> float:
        return self.f1 - self.f0

    @property
    def bias(self) -> float:
        return self.u0 - self.u1

    @property
    def energy(self) -> float:
        return self.u0 * self.f0 + self.u1 * self.f1


def virtual_qubit(r, H, levels: tuple[int, int] | None = None, tol: float = DEFAULT_TOL) -> VirtualQubit:
    """Virtual qubit on ``levels`` (default ground and top level) of passive ``r``.

    ``beta_v`` is the gap-weighted sum of adjacent virtual temperatures and
    reduces to ``ln(r_i / r_j) / E_v``; it is ``nan`` when undefined.

    Raises
    ------
    ValueError
        If ``r`` is not passive or the pair carries no population.
    """
    r = np.asarray(r, dtype=float)
    e = as_energies(H)
    if r.size < 2 or r.size != e.size:
        raise ValueError("need a passive state and spectrum of equal dimension >= 2")
    if not is_passive(r, tol=tol):
        raise ValueError("machine state must be passive")
    i, j = levels if levels is not None else (0, r.size - 1)
    j %= r.size
    if not 0 <= i < j < r.size:
        raise ValueError("levels must be an increasing pair of valid indices")
    P = r[i] + r[j]
    if P <= 0:
        raise ValueError("P_v = 0: the virtual qubit is unpopulated and its bias undefined")
    E_v = float(e[j] - e[i])
    betas = virtual_temperatures(r, e)
    steps = [(betas.get((k, k + 1)), e[k + 1] - e[k]) for k in range(i, j)]
    if E_v > 0 and all(b is not None and np.isfinite(b) for b, _ in steps):
        beta_v = float(sum(b * g for b, g in steps) / E_v)
    elif E_v > 0 and r[j] == 0:
        beta_v = np.inf
    else:
        beta_v = np.nan
    return VirtualQubit(float(P), float((r[i] - r[j]) / P), E_v, beta_v, (i, j))


def _check_gap(vq: VirtualQubit, ext: ExternalQubit, tol: float) -> None:
    if abs(vq.E_v - ext.gap) > tol:
        raise ValueError(f"external gap {ext.gap} does not match virtual gap {vq.E_v}")


def final_bias(vq: VirtualQubit, ext: ExternalQubit, tol: float = DEFAULT_TOL) -> float:
    """Bias of the external qubit after one swap with the virtual qubit."""
    _check_gap(vq, ext, tol)
    return vq.P_v * vq.B_v + (1.0 - vq.P_v) * ext.bias


def swap_simulate(r, H, ext: ExternalQubit, levels: tuple[int, int] | None = None,
                  tol: float = DEFAULT_TOL) -> ExternalQubit:
    """Explicit swap ``|i>|1> <-> |j>|0>`` on the joint machine-qubit state.

    Builds ``diag(r) (x) diag(u)``, conjugates by the exchange unitary and
    traces out the machine.
    """
    r = np.asarray(r, dtype=float)
    e = as_energies(H)
    d = r.size
    i, j = levels if levels is not None else (0, d - 1)
    j %= d
    if abs((e[j] - e[i]) - ext.gap) > tol:
        raise ValueError(f"external gap {ext.gap} does not match virtual gap {e[j] - e[i]}")
    rho = np.kron(np.diag(r), np.diag([ext.u0, ext.u1]))
    perm = np.arange(2 * d)
    a, b = 2 * i + 1, 2 * j + 0
    perm[a], perm[b] = b, a
    U = np.eye(2 * d)[perm]
    out = U @ rho @ U.T
    ext_state = np.einsum("iaib->ab", out.reshape(d, 2, d, 2))
    u = np.clip(np.diag(ext_state), 0.0, None)
    return ExternalQubit(ext.f0, ext.f1, float(u[0]), float(u[1]))


@dataclass(frozen=True)
class RefrigerationReport:
    vc_holds: bool
    B_fin_r: float
    B_fin_p: float
    F_r: float
    F_p: float
    tol: float = DEFAULT_TOL

    @property
    def bias_ordered(self) -> bool:
        return self.B_fin_r >= self.B_fin_p - self.tol

    @property
    def energy_ordered(self) -> bool:
        return self.F_r <= self.F_p + self.tol


def compare_refrigeration(r, p, H, ext: ExternalQubit, tol: float = DEFAULT_TOL) -> RefrigerationReport:
    """Final bias and energy of the external qubit for machines ``r`` and ``p``.

    A virtually cooler ``r`` should give a larger bias and lower energy. If
    ``r`` is not virtually cooler than ``p`` a ``UserWarning`` is issued and
    the comparison is still returned.
    """
    vc = is_virtually_cooler(r, p, tol)
    if not vc:
        warnings.warn("r is not virtually cooler than p; the ordering is not guaranteed", UserWarning, stacklevel=2)
    out = []
    for m in (r, p):
        vq = virtual_qubit(m, H, tol=tol)
        B = final_bias(vq, ext, tol)
        fin = ExternalQubit.from_bias(B, ext.gap, ext.f0)
        out.append((B, fin.energy))
    return RefrigerationReport(vc, out[0][0], out[1][0], out[0][1], out[1][1], tol)


def sweep(dims: Iterable[int], n_pairs: int, seed=0, tol: float = DEFAULT_TOL) -> Iterator[dict]:
    """Random vc-ordered machine pairs, one result row per pair.

    Each row holds ``d``, ``r``, ``p``, ``B_ext``, both final biases and
    energies, and ``vc_holds``.
    """
    from .sampling import random_energies, random_vc_pair

    rng = np.random.default_rng(seed)
    for d in dims:
        for _ in range(n_pairs):
            r, p = random_vc_pair(d, rng)
            e = random_energies(d, rng)
            ext = ExternalQubit.from_bias(rng.uniform(-1, 1), e[-1] - e[0])
            rep = compare_refrigeration(r, p, e, ext, tol)
            yield {
                "d": d, "r": r, "p": p, "B_ext": ext.bias,
                "B_fin_r": rep.B_fin_r, "B_fin_p": rep.B_fin_p,
                "F_r": rep.F_r, "F_p": rep.F_p, "vc_holds": rep.vc_holds,
            }


def write_sweep_csv(rows: Sequence[dict], fh: IO[str]) -> None:
    """CSV with columns ``d, r0.., p0.., B_ext, B_fin_r, B_fin_p, F_r, F_p, vc_holds``.

    Population columns run up to the largest ``d``; shorter rows are left
    blank there.
    """
    rows = list(rows)
    D = max((row["d"] for row in rows), default=0)
    header = ["d", *(f"r{k}" for k in range(D)), *(f"p{k}" for k in range(D)),
              "B_ext", "B_fin_r", "B_fin_p", "F_r", "F_p", "vc_holds"]
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        pad = [""] * (D - row["d"])
        w.writerow([
            row["d"],
            *(repr(float(x)) for x in row["r"]), *pad,
            *(repr(float(x)) for x in row["p"]), *pad,
            *(repr(float(row[k])) for k in ("B_ext", "B_fin_r", "B_fin_p", "F_r", "F_p")),
            str(bool(row["vc_holds"])).lower(),
        ])
