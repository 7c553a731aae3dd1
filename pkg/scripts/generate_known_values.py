#!/usr/bin/env python3
"""Write src/fingerlab/data/known_values.json.

Facts the bounds engine may cite without recomputing: cover-free family
sizes from published code tables and published searches, family-pair
capacities, the catalog of (n, m) pairs where an equiangular tight frame is
known to exist, and the handful of exact packing overlaps used by the
quantum tables.  Every entry carries a provenance tag so reproduction
reports can distinguish computed results from cited ones.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fingerlab.io import dump_json  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "fingerlab" / "data"

cover_free = []
# code-table values: T(m,2) = m for m <= 8; T(m,k) = m for m <= 15, k in {3,4}
for m in range(2, 9):
    cover_free.append({"m": m, "q": "2", "value": m, "kind": "exact",
                       "provenance": "literature: superimposed-code tables"})
for k in (3, 4):
    for m in range(2, 16):
        cover_free.append({"m": m, "q": str(k), "value": m, "kind": "exact",
                           "provenance": "literature: superimposed-code tables"})
# published search results
cover_free.append({"m": 9, "q": "2", "value": 12, "kind": "exact",
                   "provenance": "published search"})
cover_free.append({"m": 10, "q": "2", "value": 13, "kind": "exact",
                   "provenance": "published search"})
for m in range(2, 8):
    val = {2: 2, 3: 3, 4: 6, 5: 10, 6: 15, 7: 21}[m]
    cover_free.append({"m": m, "q": "3/2", "value": val, "kind": "exact",
                       "provenance": "published search"})

pair_capacity = [
    {"m": 5, "k1": 2, "k2": 2, "j": 3, "value": 8, "kind": "exact",
     "provenance": "published search"},
    {"m": 6, "k1": 2, "k2": 2, "j": 3, "value": 12, "kind": "exact",
     "provenance": "published search"},
    {"m": 6, "k1": 2, "k2": 3, "j": 5, "value": 13, "kind": "exact",
     "provenance": "published search"},
    {"m": 7, "k1": 2, "k2": 2, "j": 3, "value": 21, "kind": "exact",
     "provenance": "published search"},
    {"m": 7, "k1": 3, "k2": 3, "j": 8, "value": 26, "kind": "lower",
     "provenance": "published search"},
]

# (n, m) pairs with a known equiangular tight frame, beyond the always-
# present n = m and n = m + 1 families; from the packing table's markers
etf_catalog = [
    [3, 2], [4, 2],
    [6, 3], [7, 3], [9, 3],
    [7, 4], [8, 4], [13, 4], [16, 4],
    [10, 5], [11, 5], [21, 5],
    [9, 6], [11, 6], [12, 6], [16, 6],
    [14, 7], [15, 7],
    [15, 8], [16, 8],
    [13, 9], [18, 9], [19, 9],
    [16, 10], [19, 10], [20, 10],
    [16, 12],
    [21, 16],
]

# maximal mutually unbiased bases known for every prime power dimension;
# listed per packing-table column so m = 4 is available without generation
mub_catalog = [2, 3, 4]

# exact qubit packings cited from the spherical-code literature (the two
# non-frame exact cells the SMP quantum table builds on)
packing_exact = [
    {"n": 5, "m": 2, "value": "1/2",
     "provenance": "literature: optimal spherical codes"},
    {"n": 9, "m": 2, "value": "2/3",
     "provenance": "literature: optimal spherical codes"},
]

dump_json(OUT / "known_values.json", {
    "cover_free": cover_free,
    "pair_capacity": pair_capacity,
    "etf_catalog": etf_catalog,
    "mub_catalog": mub_catalog,
    "packing_exact": packing_exact,
})
print("known values written")
