"""Build the two-element workhorses and poke at their structure.

Run:  python demos/01_hemiring_basics.py
"""

from hemirings import (
    boolean_B,
    check_hemiring_axioms,
    infinite_element,
    integers_mod,
    is_additively_idempotent,
    is_division_semiring,
    is_lattice_ordered,
    natural_order,
    two_zero_mult,
)

B = boolean_B()
two = two_zero_mult()
Z2 = integers_mod(2)

print("The Boolean semifield B = {0, 1} with 1 + 1 = 1:")
print(check_hemiring_axioms(B.add, B.mul, B.zero, B.one).summary())
print()

print("B is additively idempotent:", is_additively_idempotent(B))
po = natural_order(B)
print("its natural order (x <= y iff x + y = y) is a chain:", po.is_total)
print("with top element", po.top(), "= the additively absorbing element",
      infinite_element(B))
print("B is a division semiring:", is_division_semiring(B),
      "and lattice-ordered:", is_lattice_ordered(B))
print()

print("The hemiring 2 has the same addition but xy = 0 everywhere;")
print("it satisfies every hemiring axiom yet has no multiplicative identity:")
report = check_hemiring_axioms(two.add, two.mul, two.zero)
print(report.summary())
print()

print("Z/2 is a ring, so its natural-order relation is not even reflexive:")
try:
    natural_order(Z2)
except ValueError as exc:
    print("  rejected:", exc)
