"""Endomorphism semirings of semilattices: the chain/diamond dichotomy.

A finite semilattice M yields the semiring E_M of its join-endomorphisms
(pointwise join as +, composition as *).  E_M is always congruence-simple,
but it is ideal-simple exactly when M is a distributive lattice.  The
smallest failure is the diamond: the step maps e_{a,b} generate a proper
ideal F_M strictly inside E_M.

Run:  python demos/02_endomorphism_semirings.py
"""

import numpy as np

from hemirings import (
    FiniteSemilattice,
    build_E_M,
    build_F_M,
    is_congruence_simple,
    is_distributive,
    is_ideal_simple,
    try_lattice,
)

chain = FiniteSemilattice(np.maximum.outer(np.arange(3), np.arange(3)), name="C3")
diamond = FiniteSemilattice([
    [0, 1, 2, 3, 4],
    [1, 1, 4, 4, 4],
    [2, 4, 2, 4, 4],
    [3, 4, 4, 3, 4],
    [4, 4, 4, 4, 4]], name="M3")

for M in (chain, diamond):
    E = build_E_M(M)
    F = build_F_M(M)
    lat = try_lattice(M)
    H = E.hemiring
    print(f"{M.name}: |M| = {M.order}")
    print(f"  distributive lattice:    {is_distributive(lat)}")
    print(f"  |E_M| = {E.order}, |F_M| = {F.order}, F_M = E_M: {E.order == F.order}")
    print(f"  congruence-simple:       {is_congruence_simple(H)}")
    print(f"  ideal-simple:            {is_ideal_simple(H)}")
    print()

print("On the diamond the generated submonoid is the unique obstruction:")
E = build_E_M(diamond)
F = build_F_M(diamond)
print(f"  F_M is a proper two-sided ideal with {F.order} of {E.order} maps;")
print("  any congruence collapsing two endomorphisms collapses everything.")
