"""Qubit passivity-preserving channels: canonical form, dilations, a qutrit failure."""
import numpy as np

from passivity_lab.channels import (
    apply, build_qubit_ppo_pure, certify_ppo, is_ppo, qubit_canonical_kraus,
    qubit_ppo_constraints, qubit_stinespring_ppo, qutrit_stinespring_counterexample,
)
from passivity_lab.sampling import random_canonical_params

rng = np.random.default_rng(1)

# two Kraus operators map sqrt(0.6)|0> + sqrt(0.4)|1> to the 0.8/0.2 state
chan = build_qubit_ppo_pure([0.6, 0.4], [0.8, 0.2])
for K in chan.kraus:
    print(K.real.round(6))
print("PPO:", is_ppo(chan))

# canonical five-Kraus parameters, one good and one bad draw
for ok in (True, False):
    a, b = random_canonical_params(rng, satisfying=ok)
    slack = qubit_ppo_constraints(a, b)
    cert = certify_ppo(qubit_canonical_kraus(a, b))
    print({k: round(v, 4) for k, v in slack.items()}, "->", cert.verdict)
    if cert.witnesses:
        print("  failing input", cert.witnesses[0]["input"], "output", np.diag(cert.witnesses[0]["output"]).real.round(4))

# energy-preserving unitary with a passive qubit bath
for alpha, q_env in ((1, 0.7), (0.3 + 0.4j, 0.9), (0, 1)):
    chan = qubit_stinespring_ppo(alpha, q_env)
    print(f"alpha={alpha}, q_env={q_env}: PPO={is_ppo(chan)}, I/2 -> {np.diag(apply(chan, np.eye(2) / 2)).real.round(4)}")

# the same recipe fails for a qutrit: the ground state comes out active
chan, out = qutrit_stinespring_counterexample([0.5, 0.3, 0.2])
print("qutrit output:", np.diag(out).real, " PPO:", is_ppo(chan))
