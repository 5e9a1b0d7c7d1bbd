"""[psi_free](t1, t2) along free solutions.

Plane waves are sampled on the demo grid; Gaussian packets are propagated
exactly in momentum space on a fine one-particle grid, where the bracket
factorizes into one-particle brackets. The spread max/min - 1 measures
the finite-difference error in the derivative parts, the exact bracket
being constant.
"""
import numpy as np

from multitime.freedirac import (
    PlaneWaveSpec,
    eigenspinor,
    gaussian_spinor_packet,
    plane_wave_field,
    product_bracket_sq,
    propagate_one_particle,
)
from multitime.spinorfield import GridSpec, bracket_sq

DEMO = GridSpec(1.0, 6, 2.5, 6)
FINE = GridSpec(1.0, 11, 5.0, 21, memory_budget=1e15)


def spread(bsq):
    b = np.sqrt(bsq)
    return b.max() / b.min() - 1.0


def main():
    for masses in ((0.0, 0.0), (0.5, 1.0)):
        f = plane_wave_field(PlaneWaveSpec((0.5, 0, 0), 1, masses[0]), PlaneWaveSpec((0, 0.3, -0.3), 2, masses[1]), DEMO)
        print(f"plane waves on the demo grid, masses {masses}: spread {spread(bracket_sq(f)):.2e}")
        phis = []
        for m, p, c in zip(masses, ((0.4, 0, 0), (0, -0.3, 0.2)), ((0.3, 0, 0), (-0.3, 0.2, 0))):
            u, _ = eigenspinor(p, 1, m)
            phis.append(propagate_one_particle(gaussian_spinor_packet(FINE, c, 1.2, p, u, m), FINE, m))
        print(f"Gaussian packets on the fine grid, masses {masses}: spread {spread(product_bracket_sq(*phis, FINE, masses)):.2e}")


if __name__ == "__main__":
    main()
