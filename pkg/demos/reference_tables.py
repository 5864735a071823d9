"""Regenerate the embedded reference tables and check them.

Run with ``python demos/reference_tables.py``.
"""

from mathieu.tables import load_reference, regenerate_table, verify

rows = load_reference()
print(f"{len(rows)} reference values loaded")

print("\nFirst lines of the recomputed odd-even / odd-odd angular table:")
print("\n".join(regenerate_table("T4").splitlines()[:6]))

report = verify()
print("\ntable  rows  max abs deviation")
for rep in report.tables.values():
    print(f"{rep.table:>5} {rep.rows:5d}  {rep.max_abs:.2e}")
print("all within tolerance" if report.ok else f"{len(report.failures)} failures")
