"""
Surveying a range of n
======================

The survey walks every valid c for each n in a range, writes one CSV row per
instance and re-verifies every cycle it reports. The same table comes from
``circham survey --n-min 6 --n-max 36 --no-timing``.
"""
import csv
import io
from collections import Counter

from circham.cli import survey_csv

text = survey_csv(6, 48, jobs=2, timing=False)
rows = list(csv.DictReader(io.StringIO(text)))
print(text.splitlines()[0])
print("\n".join(text.splitlines()[1:6]))

###############################################################################
# Which routes get used

print(Counter(r["method"] for r in rows if r["method"]))

###############################################################################
# The non-hamiltonian rows

for r in rows:
    if r["verdict"] == "non-hamiltonian":
        print(r["n"], r["c"])

###############################################################################
# Parallel runs give the same bytes

assert text == survey_csv(6, 48, timing=False)
