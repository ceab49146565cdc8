"""
Comparison series for GF(16)
============================

Designed distance against dimension for two optimal polynomials, written as
(delta/n, k/n) rows ready for plotting.
"""

import sys
from pathlib import Path

from cabcodes import codes as C
from cabcodes.cli import figure_tables

out = Path(sys.argv[1]) if len(sys.argv) > 1 else None
tables = figure_tables("q16")
series = {f"(a,b)=({a},{b})": tab for (a, b), tab in tables.items()}
text = C.series_csv(series)
if out:
    out.write_text(text)
print("\n".join(text.splitlines()[:6]), "...")

for ab, (n, rows) in tables.items():
    best = C.best_codes(rows)
    print(ab, "distinct dimensions:", len(best), " largest distances:", best[:3])
