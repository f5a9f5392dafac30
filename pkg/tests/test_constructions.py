import itertools

import numpy as np
import pytest

from hemirings import (
    all_congruences,
    all_ideals,
    boolean_B,
    corner,
    enumerate_hemirings,
    enumerate_semilattices,
    finite_field,
    generated_ideal,
    integers_mod,
    is_congruence_simple,
    is_full_idempotent,
    is_ideal_simple,
    is_isomorphic,
    is_simple,
    matrix_semiring,
)
from hemirings.core import SizeGuardExceeded, check_hemiring_axioms
from hemirings.constructions import (
    corner_congruence_to_ring,
    corner_ideal_to_ring,
)


def test_boolean_and_two_tables(B, two):
    assert B.add[1, 1] == 1 and B.mul[1, 1] == 1 and B.one == 1
    assert two.add[1, 1] == 1 and two.mul[1, 1] == 0 and two.one is None
    assert is_isomorphic(B, two) is None


def test_matrix_n1_is_the_base(B, z3):
    for R in (B, z3):
        M1 = matrix_semiring(R, 1)
        assert (M1.hemiring.add == R.add).all()
        assert (M1.hemiring.mul == R.mul).all()
        assert M1.hemiring.zero == R.zero and M1.hemiring.one == R.one


def test_matrix_boolean_order_and_simpleness(m2b):
    assert m2b.order == 16
    assert is_simple(m2b.hemiring)
    assert check_hemiring_axioms(m2b.hemiring.add, m2b.hemiring.mul,
                                 m2b.hemiring.zero, m2b.hemiring.one).ok


def test_matrix_z2_is_simple(z2):
    M = matrix_semiring(z2, 2)
    assert M.order == 16
    assert is_simple(M.hemiring)


def test_matrix_units_multiply_like_matrix_units(m2b):
    B = boolean_B()
    for i, j, k, l in itertools.product(range(2), repeat=4):
        prod = m2b.hemiring.mul[m2b.unit(i, j), m2b.unit(k, l)]
        want = m2b.unit(i, l) if j == k else m2b.hemiring.zero
        assert prod == want
    # encode/decode round-trip
    for idx in range(m2b.order):
        assert m2b.encode(m2b.decode(idx)) == idx


def test_matrix_entrywise_agreement(z3):
    M = matrix_semiring(z3, 2)
    rng = np.random.default_rng(3)
    for _ in range(50):
        x, y = rng.integers(0, M.order, 2)
        a, b = M.decode(int(x)), M.decode(int(y))
        s = (a + b) % 3
        p = (a @ b) % 3
        assert M.hemiring.add[x, y] == M.encode(s)
        assert M.hemiring.mul[x, y] == M.encode(p)


def test_matrix_size_guard(B):
    with pytest.raises(SizeGuardExceeded):
        matrix_semiring(B, 5)


def test_corner_at_identity_and_zero(m2b):
    R = m2b.hemiring
    c1 = corner(R, R.one)
    assert c1.order == R.order and is_full_idempotent(R, R.one)
    c0 = corner(R, R.zero)
    assert c0.order == 1
    assert not is_full_idempotent(R, R.zero)


def test_corner_at_matrix_unit(m2b):
    R = m2b.hemiring
    e11 = m2b.unit(0, 0)
    assert is_full_idempotent(R, e11)
    c = corner(R, e11)
    assert c.order == 2
    assert is_isomorphic(c.hemiring, boolean_B()) is not None


def test_corner_rejects_non_idempotent(m2b):
    nilp = m2b.unit(0, 1)     # E_12 squares to zero
    with pytest.raises(ValueError):
        corner(m2b.hemiring, nilp)


def test_corner_ideal_map_zero(m2b):
    R = m2b.hemiring
    e11 = m2b.unit(0, 0)
    c = corner(R, e11)
    zero = all_ideals(c.hemiring)[0]
    assert zero.is_zero
    lifted = corner_ideal_to_ring(R, c, zero)
    assert lifted.is_zero


def test_corner_lattices_biject_for_full_idempotent(m2b):
    R = m2b.hemiring
    e11 = m2b.unit(0, 0)
    c = corner(R, e11)
    ideals_c = all_ideals(c.hemiring)
    congs_c = all_congruences(c.hemiring)
    assert len(ideals_c) == 2 and len(congs_c) == 2
    lifted_i = {corner_ideal_to_ring(R, c, I) for I in ideals_c}
    lifted_g = {corner_congruence_to_ring(R, c, g) for g in congs_c}
    assert lifted_i == set(all_ideals(R))
    assert lifted_g == set(all_congruences(R))


def test_corner_diagonal_lifts_to_diagonal(m2b):
    from hemirings.simpleness import Congruence
    R = m2b.hemiring
    e11 = m2b.unit(0, 0)
    c = corner(R, e11)
    diag = Congruence(range(c.order))
    assert corner_congruence_to_ring(R, c, diag).is_diagonal


def _ideal_product(R, I, J):
    prods = {int(R.mul[x, y]) for x in I.members for y in J.members}
    return generated_ideal(R, prods, "two-sided")


def test_corner_ideal_map_respects_multiplication(z2):
    for base in (boolean_B(), z2):
        M = matrix_semiring(base, 2)
        R = M.hemiring
        for e in R.idempotents():
            c = corner(R, e)
            ideals = all_ideals(c.hemiring)
            for I, J in itertools.product(ideals, repeat=2):
                lift_prod = corner_ideal_to_ring(R, c, _ideal_product(c.hemiring, I, J))
                prod_lift = _ideal_product(R, corner_ideal_to_ring(R, c, I),
                                           corner_ideal_to_ring(R, c, J))
                assert lift_prod == prod_lift


def test_full_idempotent_corners_preserve_simpleness(m2b, z2):
    for M in (m2b, matrix_semiring(z2, 2)):
        R = M.hemiring
        for e in R.idempotents():
            if not is_full_idempotent(R, e):
                continue
            c = corner(R, e)
            assert is_congruence_simple(R) == is_congruence_simple(c.hemiring)
            assert is_ideal_simple(R) == is_ideal_simple(c.hemiring)
            assert is_simple(R) == is_simple(c.hemiring)


def test_finite_fields_validate():
    for q in (2, 3, 4, 5, 7, 8, 9):
        F = finite_field(q)
        assert F.order == q
        assert F.is_commutative()
        report = check_hemiring_axioms(F.add, F.mul, F.zero, F.one)
        assert report.ok
        for x in range(1, q):
            assert any(F.mul[x, y] == F.one and F.mul[y, x] == F.one
                       for y in range(q))


def test_gf2_gf3_match_integers_mod():
    assert (finite_field(2).add == integers_mod(2).add).all()
    assert (finite_field(3).mul == integers_mod(3).mul).all()


def test_gf4_multiplicative_group_cyclic_of_order_3():
    F = finite_field(4)
    orders = []
    for g in range(1, 4):
        k, acc = 1, g
        while acc != F.one:
            acc = int(F.mul[acc, g])
            k += 1
        orders.append(k)
    assert sorted(orders) == [1, 3, 3]


def test_unsupported_field_order():
    with pytest.raises(ValueError):
        finite_field(6)


def test_semilattice_counts_frozen():
    # bounded-lattice isomorphism counts at small order
    assert [len(enumerate_semilattices(n)) for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]


def test_semilattice_enumeration_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_semilattices(7)


def test_hemiring_order2_catalog(B, two, z2):
    rings = enumerate_hemirings(2)
    assert len(rings) == 4
    for target in (B, two, z2):
        assert sum(1 for R in rings if is_isomorphic(R, target) is not None) == 1


def test_idempotent_catalog_is_subset_of_plain_at_low_order():
    plain = {R.name: R for R in enumerate_hemirings(3)}
    idem = enumerate_hemirings(3, additively_idempotent=True)
    from hemirings import is_additively_idempotent
    for R in idem:
        assert is_additively_idempotent(R)
        assert any(is_isomorphic(R, S) is not None for S in plain.values())


def test_catalog_determinism():
    a = enumerate_hemirings(3)
    b = enumerate_hemirings(3)
    assert [(R.name, R.add.tobytes(), R.mul.tobytes(), R.one) for R in a] == \
           [(R.name, R.add.tobytes(), R.mul.tobytes(), R.one) for R in b]
    sa = enumerate_semilattices(5)
    sb = enumerate_semilattices(5)
    assert [(M.name, M.join.tobytes()) for M in sa] == \
           [(M.name, M.join.tobytes()) for M in sb]


def test_hemiring_enumeration_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_hemirings(4)
    with pytest.raises(SizeGuardExceeded):
        enumerate_hemirings(5, additively_idempotent=True)


def test_catalog_wrappers():
    from hemirings.constructions import hemiring_catalog, semilattice_catalog
    cat = semilattice_catalog(4)
    assert cat.kind == "semilattice" and len(cat.entries) == 5
    assert all(len(e.canonical_hash) == 12 for e in cat.entries)
    hcat = hemiring_catalog(2)
    assert len(hcat.entries) == 5          # order 1 plus the four order-2 classes
    assert {dict(e.properties)["semiring"] for e in hcat.entries} == {"true", "false"}
