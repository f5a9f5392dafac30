"""Cross-checks of the vectorized engines against naive reference code."""

import random

import numpy as np
import pytest

from hemirings import PartialOrder, check_hemiring_axioms, principal_congruence
from hemirings.simpleness import Congruence


def naive_axiom_check(add, mul, zero, one=None):
    """Triple-loop reference for the hemiring axioms."""
    n = len(add)
    rng = range(n)
    if any(add[a][b] != add[b][a] for a in rng for b in rng):
        return False
    if any(add[add[a][b]][c] != add[a][add[b][c]] for a in rng for b in rng for c in rng):
        return False
    if any(add[zero][a] != a for a in rng):
        return False
    if any(mul[mul[a][b]][c] != mul[a][mul[b][c]] for a in rng for b in rng for c in rng):
        return False
    if any(mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]
           for a in rng for b in rng for c in rng):
        return False
    if any(mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]
           for a in rng for b in rng for c in rng):
        return False
    if any(mul[zero][a] != zero or mul[a][zero] != zero for a in rng):
        return False
    if one is not None and any(mul[one][a] != a or mul[a][one] != a for a in rng):
        return False
    return True


def naive_principal_congruence(R, a, b):
    """Worklist closure over explicit pairs, no numpy."""
    n = R.order
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = [(a, b)]
    while work:
        x, y = work.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[max(rx, ry)] = min(rx, ry)
        for c in range(n):
            work.append((int(R.add[x, c]), int(R.add[y, c])))
            work.append((int(R.mul[c, x]), int(R.mul[c, y])))
            work.append((int(R.mul[x, c]), int(R.mul[y, c])))
    return Congruence([find(x) for x in range(n)])


def test_axiom_checker_against_naive_on_random_tables():
    rng = random.Random(2024)
    agreements = 0
    for _ in range(300):
        n = rng.randint(1, 4)
        add = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        mul = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        zero = rng.randrange(n)
        report = check_hemiring_axioms(add, mul, zero)
        assert report.ok == naive_axiom_check(add, mul, zero)
        agreements += 1
        # every reported witness is a genuine violation of its axiom
        for c in report.failures():
            assert c.witness is not None
    assert agreements == 300


def test_axiom_checker_accepts_catalog(plain_hemirings_upto3):
    for R in plain_hemirings_upto3:
        assert naive_axiom_check(R.add.tolist(), R.mul.tolist(), R.zero, R.one)


def test_principal_congruence_against_naive(plain_hemirings_upto3,
                                            idem_hemirings_upto4, z4):
    pool = list(plain_hemirings_upto3) + list(idem_hemirings_upto4) + [z4]
    for R in pool:
        for a in range(R.order):
            for b in range(a + 1, R.order):
                assert principal_congruence(R, a, b) == \
                    naive_principal_congruence(R, a, b)


def test_principal_congruence_against_naive_on_endos(e_c3):
    H = e_c3.hemiring
    for a in range(H.order):
        for b in range(a + 1, H.order):
            assert principal_congruence(H, a, b) == \
                naive_principal_congruence(H, a, b)


def test_partial_order_meet_absent():
    # N-shaped poset: 0 < a, b < c, d with c, d incomparable: c ^ d fails
    leq = np.zeros((5, 5), dtype=bool)
    for i in range(5):
        leq[i, i] = True
    for i in (1, 2, 3, 4):
        leq[0, i] = True
    for i in (1, 2):
        leq[i, 3] = leq[i, 4] = True
    po = PartialOrder(leq)
    assert po.meet(3, 4) is None
    assert po.meet_table() is None


def test_partial_order_validation():
    with pytest.raises(ValueError):
        PartialOrder(np.array([[True, True], [True, True]]))   # not antisymmetric
    with pytest.raises(ValueError):
        PartialOrder(np.array([[False]]))                      # not reflexive
    bad = np.eye(3, dtype=bool)
    bad[0, 1] = bad[1, 2] = True                               # not transitive
    with pytest.raises(ValueError):
        PartialOrder(bad)
