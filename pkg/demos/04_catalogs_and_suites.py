"""Exhaustive small-order catalogs and the classification suites.

Each classification fact about small finite semirings has a suite that
replays it over all isomorphism classes within the desk-scale bounds.  Running two of them
here; the CLI exposes the rest (`hemirings verify <suite>`).

Run:  python demos/04_catalogs_and_suites.py
"""

from hemirings import enumerate_hemirings, enumerate_semilattices
from hemirings.verify import run_suite, suite_names

counts = [len(enumerate_semilattices(n)) for n in range(1, 6)]
print("semilattice isomorphism classes, orders 1..5:", counts)

rings = enumerate_hemirings(2)
print(f"hemirings of order 2: {len(rings)} classes "
      "(the Boolean semifield, Z/2, the zero-multiplication pair)")

print("\navailable suites:", ", ".join(suite_names()))

for name in ("thm3_3", "thm6_7"):
    rep = run_suite(name)
    print()
    print(rep.render("text").rstrip())
