"""Hoffman matrices and their partition decompositions."""
import numpy as np

from passivity_lab.majorization import (
    decompose_hoffman, enumerate_partitions, find_hoffman_matrix,
    hoffman_majorizes, is_hoffman_matrix, partition_matrix,
)

# the extreme points for three levels: one averaging matrix per consecutive partition
for tau in enumerate_partitions(3):
    print(tau)
    print(partition_matrix(tau))

# a 2x2 mixing matrix is Hoffman only when the diagonal weight is at least 1/2
for t in (0.7, 0.5, 0.3):
    R = np.array([[t, 1 - t], [1 - t, t]])
    print(f"t={t}: Hoffman={is_hoffman_matrix(R)}")

# a sorted vector reachable from another one, and the matrix that does it
q = np.array([0.5, 0.3, 0.2])
p = np.array([0.4, 0.4, 0.2])
print("p reachable from q:", hoffman_majorizes(q, p))
R = find_hoffman_matrix(p, q)
print("R =\n", R.round(6))
print("R q =", R @ q)

# write R back as a convex combination of the partition matrices
dec = decompose_hoffman(R)
for tau, w in dec.weights.items():
    print(f"  {str(tau):10s} weight {w:.6f}")
print("reconstruction error:", np.abs(dec.matrix() - R).max())
