"""Matrix semirings, corners at idempotents and the double centralizer.

Run:  python demos/03_matrix_and_corner.py
"""

from hemirings import (
    boolean_B,
    corner,
    double_centralizer_check,
    generated_ideal,
    idempotent_generated,
    is_full_idempotent,
    is_isomorphic,
    is_simple,
    matrix_semiring,
    minimal_left_ideals,
)

B = boolean_B()
M2B = matrix_semiring(B, 2)
R = M2B.hemiring
print(f"M_2(B): order {R.order}, simple: {is_simple(R)}")

e11 = M2B.unit(0, 0)
print(f"\nThe matrix unit E_11 (packed index {e11}) is idempotent and full:",
      is_full_idempotent(R, e11))
c = corner(R, e11)
print(f"its corner e R e has order {c.order} and is the Boolean semifield:",
      is_isomorphic(c.hemiring, B) is not None)

print("\nMinimal left ideals of M_2(B) and their generating idempotents:")
for I in minimal_left_ideals(R):
    e = idempotent_generated(R, I)
    mat = None if e is None else M2B.decode(e).tolist()
    print(f"  {sorted(I.members)}  e = {e}  {mat}")

col = generated_ideal(R, [e11], "left")
rep = double_centralizer_check(R, col)
print(f"\nDouble centralizer on the first-column ideal: D = End(_R I) has "
      f"{rep.endo_count} elements,")
print(f"End(I_D) has {rep.bicommutant_count}, and the natural map "
      f"r -> (i -> r i) is an isomorphism: {rep.isomorphism}")
