"""Virtual temperatures and the virtually-cooler order on passive states."""
import numpy as np

from passivity_lab.majorization import hoffman_majorizes
from passivity_lab.states import (
    energy, is_virtually_cooler, relative_passivity_witness,
    thermal_populations, vc_extreme_points, virtual_temperatures,
)

E = np.array([0.0, 1.0, 2.0])
r = np.array([0.7, 0.2, 0.1])
p = np.array([0.5, 0.3, 0.2])

# every level pair gets its own inverse temperature
for (i, j), beta in virtual_temperatures(r, E).items():
    print(f"beta[{i},{j}] r: {beta:.4f}   p: {virtual_temperatures(p, E)[i, j]:.4f}")

print("r cooler than p:", is_virtually_cooler(r, p))
print("witness diag:", np.diag(relative_passivity_witness(r, p)).real.round(4))

# a Gibbs state has one temperature for all pairs
g = thermal_populations(E, 1.3)
print("thermal betas:", np.round(list(virtual_temperatures(g, E).values()), 12))

# cooler implies lower energy...
print("energies:", energy(r, E), energy(p, E))

# ...but reachability alone does not imply cooler
r2, p2 = np.array([0.5, 0.5, 0.0]), np.array([0.4, 0.3, 0.3])
print("r2 majorizes p2:", hoffman_majorizes(r2, p2), " r2 cooler:", is_virtually_cooler(r2, p2))

# the cooler-than-p set is a polytope with these vertices
for v in vc_extreme_points(p):
    print("vertex", v)
