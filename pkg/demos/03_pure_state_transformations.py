"""Moving between coherent pure states with strictly incoherent channels."""
import numpy as np

from passivity_lab.channels import (
    apply, build_rppo_pure, channels_equal, is_rppo, is_strictly_incoherent,
    is_trace_preserving, qutrit_example_channel, transform_pure_state,
)
from passivity_lab.states import PureStateD, ergotropy, monotone_B

q = np.array([0.5, 0.3, 0.2])
p = np.array([(q[0] + q[1]) / 2, (q[0] + q[1]) / 2, q[2]])
chan = build_rppo_pure(p, q)
print(chan)
print("TP:", is_trace_preserving(chan), " strict:", is_strictly_incoherent(chan), " RPPO:", is_rppo(chan, p, q))

# same channel as the hand-written two-Kraus example
print("matches example:", channels_equal(chan, qutrit_example_channel(p, q), 1e-10))

psi = np.sqrt(p)
out = apply(chan, np.outer(psi, psi))
print("output amplitudes^2:", np.diag(out).real, " purity:", np.trace(out @ out).real)

# phases are carried by diagonal unitaries around the phase-free channel
src = PureStateD(tuple(p), (0.0, 0.4, 2.0))
dst = PureStateD(tuple(q), (1.0, 0.0, -0.5))
chan = transform_pure_state(src, dst)
print("phase error:", np.abs(apply(chan, src.density()) - dst.density()).max())

# the uniform superposition reaches every state in the set, even the ground state
u = np.full(4, 0.25)
chan = build_rppo_pure(u, [1, 0, 0, 0])
print("to ground:", np.diag(apply(chan, np.outer(np.sqrt(u), np.sqrt(u)))).real)

# ergotropy and the B monotone both go down along the way
E = np.array([0.0, 1.0, 2.0])
for name, v in (("before", p), ("after", q)):
    s = PureStateD(tuple(v))
    print(name, "W =", round(ergotropy(s.density(), E), 6), " B_1 =", round(monotone_B(s, E, 1.0), 6))
