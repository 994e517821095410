"""Asymptotic classes of Bh(m,F) for small F, with the rules that fired.

Run with ``python3 demos/classify_small.py``.
"""
from collections import Counter

from bergekit import catalog, classify_bh, classify_corpus
from bergekit.containment import berge_contains

# %% every named matrix
for entry in catalog():
    if entry.matrix.rows > 5:
        continue
    c = classify_bh(entry.matrix)
    flag = " (conditional)" if c.conditional else ""
    print(f"{entry.name:5s} {c.label():18s} via {c.rules[0].name}{flag}")

# %% lower-bound witnesses really avoid F: check a few at m = 12
for entry in catalog()[:6]:
    c = classify_bh(entry.matrix)
    W = c.lower_witness.expand(12)
    ok = berge_contains(entry.matrix, W) is None
    print(f"{entry.name}: {c.lower_witness.describe()} has {W.ncols} columns at m=12, avoids: {ok}")

# %% the whole 4-row corpus with at most 3 columns
report = classify_corpus(4, 3, check_constant=False)
print(Counter(e.cls.label() for e in report.entries))
print("failures:", len(report.failures))
