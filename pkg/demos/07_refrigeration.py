"""Cooling an external qubit with the virtual qubit of a machine state."""
import numpy as np

from passivity_lab.refrigeration import (
    ExternalQubit, compare_refrigeration, final_bias, swap_simulate, sweep, virtual_qubit,
)

E = np.array([0.0, 1.0, 2.0])
ext = ExternalQubit(0.0, 2.0, 0.5, 0.5)

vq = virtual_qubit([0.7, 0.2, 0.1], E)
print(vq)
print("formula:", final_bias(vq, ext), " explicit swap:", swap_simulate([0.7, 0.2, 0.1], E, ext).bias)

rep = compare_refrigeration([0.8, 0.15, 0.05], [0.5, 0.3, 0.2], E, ext)
print(rep)

rows = list(sweep([2, 3, 4, 5, 6], 200, seed=0))
gain = np.array([r["B_fin_r"] - r["B_fin_p"] for r in rows])
print(f"{len(rows)} cooler/warmer machine pairs, smallest bias gain {gain.min():.2e}")
