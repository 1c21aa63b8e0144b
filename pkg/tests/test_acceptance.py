"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the summary lines appear at the
end of the session) or ``python tests/test_acceptance.py``.
"""

import functools
import itertools
import time

import numpy as np
import pytest

from passivity_lab import channels as ch
from passivity_lab import majorization as mj
from passivity_lab import refrigeration as fr
from passivity_lab import sampling as sm
from passivity_lab import states as st
from passivity_lab import ttransforms as tt

RESULTS = {}


def report(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    return ok


@functools.lru_cache(maxsize=None)
def theorem3_pairs():
    rng = np.random.default_rng(2)
    return tuple((d, *sm.random_hoffman_pair(d, rng)) for d in range(2, 7) for _ in range(200))


def criterion_1():
    t0 = time.perf_counter()
    q = np.array([0.5, 0.3, 0.2])
    p = np.array([(q[0] + q[1]) / 2, (q[0] + q[1]) / 2, q[2]])
    built = ch.build_rppo_pure(p, q)
    fixture = ch.qutrit_example_channel(p, q)
    err = np.abs(ch.choi(built) - ch.choi(fixture)).max()
    ok = (err <= 1e-10 and ch.is_trace_preserving(built) and ch.is_strictly_incoherent(built)
          and ch.is_rppo(built, p, q))
    dt = time.perf_counter() - t0
    return report(1, ok and dt < 1, f"choi err {err:.1e}, TP/SIO/RPPO certified, {dt:.3f}s")


def criterion_2():
    t0 = time.perf_counter()
    worst_psi = worst_sigma = 0.0
    bad = 0
    for d, p, q in theorem3_pairs():
        chan = ch.build_rppo_pure(p, q)
        psi, phi = np.sqrt(p), np.sqrt(q)
        worst_psi = max(worst_psi, np.abs(ch.apply(chan, np.outer(psi, psi)) - np.outer(phi, phi)).max())
        worst_sigma = max(worst_sigma, np.abs(ch.apply(chan, p) - np.diag(q)).max())
        if not (ch.is_rppo(chan, p, q) and ch.is_strictly_incoherent(chan)):
            bad += 1
    dt = time.perf_counter() - t0
    ok = worst_psi <= 1e-9 and worst_sigma <= 1e-9 and bad == 0 and dt < 60
    return report(2, ok, f"1000 pairs, psi err {worst_psi:.1e}, sigma err {worst_sigma:.1e}, "
                         f"{bad} certification failures, {dt:.1f}s")


def criterion_3():
    t0 = time.perf_counter()
    rng = np.random.default_rng(3)
    worst, not_hoffman = 0.0, 0
    for d in range(3, 9):
        for _ in range(200):
            R = sm.random_hoffman_matrix(d, rng)
            not_hoffman += not mj.is_hoffman_matrix(R)
            worst = max(worst, np.abs(mj.decompose_hoffman(R).matrix() - R).max())
    dt = time.perf_counter() - t0
    ok = worst <= 1e-8 and not_hoffman == 0 and dt < 30
    return report(3, ok, f"1200 matrices, recombine err {worst:.1e}, {not_hoffman} rejected, {dt:.1f}s")


def criterion_4():
    rng = np.random.default_rng(4)
    violations = 0
    for d in range(2, 7):
        for _ in range(1000):
            r, p = sm.random_vc_pair(d, rng)
            e = sm.random_energies(d, rng)
            if not mj.majorizes(r, p, 1e-12) or st.energy(r, e) > st.energy(p, e) + 1e-12:
                violations += 1
    r, p = np.array([0.5, 0.5, 0.0]), np.array([0.4, 0.3, 0.3])
    witness = mj.hoffman_majorizes(r, p) and not st.is_virtually_cooler(r, p)
    return report(4, violations == 0 and witness,
                  f"5000 vc pairs, {violations} violations; witness r={r.tolist()} p={p.tolist()}: {witness}")


def criterion_5():
    rng = np.random.default_rng(5)
    good = sum(ch.is_ppo(ch.qubit_ppo_canonical(*sm.random_canonical_params(rng))) for _ in range(500))
    caught = 0
    for _ in range(500):
        a, b = sm.random_canonical_params(rng, satisfying=False)
        cert = ch.certify_ppo(ch.qubit_canonical_kraus(a, b))
        if not cert.verdict and cert.witnesses and cert.witnesses[0]["kind"] == "extremal":
            caught += 1
    worst, ppo = 0.0, 0
    for _ in range(200):
        p, q = sm.random_hoffman_pair(2, rng)
        chan = ch.build_qubit_ppo_pure(p, q)
        worst = max(worst, np.abs(ch.apply(chan, np.outer(np.sqrt(p), np.sqrt(p)))
                                  - np.outer(np.sqrt(q), np.sqrt(q))).max())
        ppo += ch.is_ppo(chan)
    ok = good == 500 and caught == 500 and worst <= 1e-10 and ppo == 200
    return report(5, ok, f"{good}/500 valid certified, {caught}/500 invalid caught, "
                         f"pure map err {worst:.1e}, {ppo}/200 PPO")


def criterion_6():
    rng = np.random.default_rng(6)
    dil = 0
    for _ in range(200):
        alpha = rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
        dil += ch.is_ppo(ch.qubit_stinespring_ppo(alpha, rng.uniform(0.5, 1)))
    exact = fails = 0
    n = 200
    for _ in range(n):
        q = sm.random_passive(3, rng)
        chan, out = ch.qutrit_stinespring_counterexample(q)
        exact += np.abs(out - np.diag([q[0] + q[1], 0, q[2]])).max() <= 4 * np.finfo(float).eps
        cert = ch.certify_ppo(chan)
        w = cert.witnesses[0]["output"] if cert.witnesses else None
        if not cert.verdict and w is not None and w[1, 1].real < w[2, 2].real:
            fails += 1
    ok = dil == 200 and exact == n and fails == n
    return report(6, ok, f"{dil}/200 dilations PPO, {exact}/{n} outputs exact, {fails}/{n} fail at level 1")


def criterion_7():
    grid = np.round(np.linspace(0, 1, 21), 12)
    exceptions = []
    for t in grid:
        for s in grid:
            predicted = t >= 0.5 and s >= 0.5
            got = tt.ordered_product_passive(t, s)
            if got != (predicted, predicted):
                exceptions.append((float(t), float(s), got))
    detail = f"{len(exceptions)} exceptions on 441 grid points"
    if exceptions:
        detail += f", e.g. (t, s)={exceptions[0][:2]} gives {exceptions[0][2]}"
    return report(7, not exceptions, detail)


def criterion_8():
    rng = np.random.default_rng(8)
    worst = 0.0
    for _ in range(1000):
        d = int(rng.integers(2, 7))
        r, e = sm.random_passive(d, rng), sm.random_energies(d, rng)
        ext = fr.ExternalQubit.from_bias(rng.uniform(-1, 1), e[-1] - e[0])
        worst = max(worst, abs(fr.final_bias(fr.virtual_qubit(r, e), ext) - fr.swap_simulate(r, e, ext).bias))
    bad = 0
    for d in range(2, 7):
        for _ in range(500):
            r, p = sm.random_vc_pair(d, rng)
            e = sm.random_energies(d, rng)
            ext = fr.ExternalQubit.from_bias(rng.uniform(-1, 1), e[-1] - e[0])
            rep = fr.compare_refrigeration(r, p, e, ext)
            bad += not (rep.bias_ordered and rep.energy_ordered)
    return report(8, worst <= 1e-12 and bad == 0,
                  f"formula vs swap err {worst:.1e}, {bad}/2500 ordering violations")


def criterion_9():
    rng = np.random.default_rng(9)
    w_pure = 0.0
    for _ in range(200):
        d = int(rng.integers(2, 7))
        psi, e = sm.random_pure_D(d, rng), sm.random_energies(d, rng)
        rho = psi.density()
        w_pure = max(w_pure, abs(st.ergotropy(rho, e) - (st.energy(rho, e) - e[0])))
    w_passive = max(st.ergotropy(sm.random_passive(d, rng), sm.random_energies(d, rng))
                    for d in rng.integers(2, 7, size=200))
    w_brute = 0.0
    for _ in range(100):
        d = int(rng.integers(2, 4))
        rho, e = sm.random_density(d, rng), sm.random_energies(d, rng)
        lam = np.linalg.eigvalsh(rho)
        best = min(np.dot(lam[list(perm)], e) for perm in itertools.permutations(range(d)))
        w_brute = max(w_brute, abs(st.ergotropy(rho, e) - (st.energy(rho, e) - best)))
    ok = w_pure <= 1e-12 and w_passive <= 1e-12 and w_brute <= 1e-9
    return report(9, ok, f"pure err {w_pure:.1e}, passive max {w_passive:.1e}, brute-force err {w_brute:.1e}")


def criterion_10():
    rng = np.random.default_rng(10)
    worst = -np.inf
    for d, p, q in theorem3_pairs():
        e_pos = sm.random_energies(d, rng, positive=True)
        e_any = sm.random_energies(d, rng)
        before, after = st.PureStateD(tuple(p)), st.PureStateD(tuple(q))
        for a in (0.5, 1, 2):
            worst = max(worst,
                        st.monotone_A(after, e_pos, a) - st.monotone_A(before, e_pos, a),
                        st.monotone_B(after, e_any, a) - st.monotone_B(before, e_any, a))
    return report(10, worst <= 1e-10, f"largest increase {worst:.1e} over 1000 transformations x 3 alphas")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    for c in CRITERIA:
        c()
