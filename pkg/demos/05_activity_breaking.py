"""Measure-and-prepare channels whose output is always passive."""
import numpy as np

from passivity_lab.channels import PovmSet, apply, build_abo, build_athermal, is_abo
from passivity_lab.sampling import random_density, random_ordered_povm
from passivity_lab.states import is_passive, thermal_populations

rng = np.random.default_rng(3)

povm = PovmSet(tuple(random_ordered_povm(3, rng=rng)))
print("ordered:", povm.is_ordered(1e-9), " eigenvalues of each element:")
for G in povm.elements:
    print("  ", np.linalg.eigvalsh(G).round(4))

chan = build_abo(povm)
outs = [apply(chan, random_density(3, rng)) for _ in range(5)]
print("outputs passive:", [is_passive(o) for o in outs])

# recovering the POVM from the channel alone
back = is_abo(chan)
print("POVM recovered:", max(np.abs(a - b).max() for a, b in zip(back.elements, povm.elements)) < 1e-10)

# a thermalising channel is the special case Gamma_k = g_k * I
E, beta = np.array([0.0, 0.5, 1.7]), 1.1
chan = build_athermal(E, beta)
print("Gibbs:", thermal_populations(E, beta).round(6))
print("output:", np.diag(apply(chan, random_density(3, rng))).real.round(6))
