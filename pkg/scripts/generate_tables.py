#!/usr/bin/env python3
"""Write the bundled reference tables into src/fingerlab/data/tables.

Cell strings are kept exactly as published (fractions, ranges "lo -- hi",
4-digit decimals with a leading dot, lower bounds ">=N"); the packing and
SMP-quantum tables carry bold/marker flags.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fingerlab.io import dump_json  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "fingerlab" / "data" / "tables"


def split_row(text):
    return [c.strip() for c in text.split("|")]


# T(m, q): largest q-cover-free family sizes, m = 2..16
TABLE1 = {
    "1":   "2|3|6|10|20|35|70|126|252|462|924|1716|3432|6435|12870",
    "4/3": "2|3|6|10|20|35|>=56|>=84|>=120|>=165|>=220|>=286|>=364|>=455|>=560",
    "3/2": "2|3|6|10|15|21|>=28|>=36|>=45|>=55|>=66|>=78|>=91|>=105|>=120",
    "2":   "2|3|4|5|6|7|8|12|13|>=17|>=20|>=26|>=28|>=35|>=37",
    "3":   "2|3|4|5|6|7|8|9|10|11|12|13|14|15|>=20",
    "4":   "2|3|4|5|6|7|8|9|10|11|12|13|14|15|>=16",
}

# one-way minimum worst-case error, n = 2..40 (rows), m = 2..16 (columns)
TABLE2 = """
0|0|0|0|0|0|0|0|0|0|0|0|0|0|0
1|0|0|0|0|0|0|0|0|0|0|0|0|0|0
1|1|0|0|0|0|0|0|0|0|0|0|0|0|0
1|1|1/2|0|0|0|0|0|0|0|0|0|0|0|0
1|1|1/2|1/2|0|0|0|0|0|0|0|0|0|0|0
1|1|1|1/2|1/2|0|0|0|0|0|0|0|0|0|0
1|1|1|1/2|1/2|1/2|0|0|0|0|0|0|0|0|0
1|1|1|1/2|1/2|1/2|1/2|0|0|0|0|0|0|0|0
1|1|1|1/2|1/2|1/2|1/2|1/3|0|0|0|0|0|0|0
1|1|1|1|1/2|1/2|1/2|1/3|1/3|0|0|0|0|0|0
1|1|1|1|1/2|1/2|1/2|1/3|1/3|1/3|0|0|0|0|0
1|1|1|1|1/2|1/2|1/2|1/2|1/3|1/3|1/3|0|0|0|0
1|1|1|1|1/2|1/2|1/2|1/2|1/2|1/3|1/3|1/3|0|0|0
1|1|1|1|1/2|1/2|1/2|1/2|1/2|1/3|1/3|1/3|1/3|0|0
1|1|1|1|2/3|1/2|1/2|1/2|1/2|1/3|1/3|1/3|1/3|1/3|0
1|1|1|1|2/3|1/2|1/2|1/2|1/2|1/3|1/3|1/3|1/3|1/3|0 -- 1/4
1|1|1|1|2/3|1/2|1/2|1/2|1/2|1/3 -- 1/2|1/3|1/3|1/3|1/3|0 -- 1/4
1|1|1|1|2/3|1/2|1/2|1/2|1/2|1/3 -- 1/2|1/3|1/3|1/3|1/3|0 -- 1/4
1|1|1|1|2/3|1/2|1/2|1/2|1/2|1/3 -- 1/2|1/3|1/3|1/3|1/3|0 -- 1/4
1|1|1|1|1|1/2|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|0 -- 1/3
1|1|1|1|1|2/3|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3|0 -- 1/3
1|1|1|1|1|1|1/2 -- 2/3|1/2|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|0 -- 1/3
1|1|1|1|1|1|1/2 -- 2/3|1/2 -- 2/3|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|0 -- 1/3
1|1|1|1|1|1|1/2 -- 2/3|1/2 -- 2/3|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|0 -- 1/2
1|1|1|1|1|1|1/2 -- 2/3|1/2 -- 2/3|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|0 -- 1/2
1|1|1|1|1|1|1/2 -- 2/3|1/2 -- 2/3|1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|1/3 -- 1/2|0 -- 1/2
""".strip().splitlines()

# SMP minimum worst-case error, n = 2..22 (rows), m = 2..9 (columns)
TABLE_SMP = """
0|0|0|0|0|0|0|0
1|0|0|0|0|0|0|0
1|1|0|0|0|0|0|0
1|1|3/4|0|0|0|0|0
1|1|3/4|1/2 -- 3/4|0|0|0|0
1|1|1|1/2 -- 3/4|1/2 -- 3/4|0|0|0
1|1|1|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4|0|0
1|1|1|5/6|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4|0
1|1|1|5/6|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4|1/3 -- 1/2
1|1|1|1|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4|1/3 -- 3/4
1|1|1|1|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4|1/3 -- 3/4
1|1|1|1|1/2 -- 5/6|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|1/2 -- 8/9|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|1/2 -- 8/9|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|2/3 -- 8/9|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|2/3 -- 8/9|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|2/3 -- 8/9|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|2/3 -- 8/9|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|8/9|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|1|1/2 -- 3/4|1/2 -- 3/4|1/2 -- 3/4
1|1|1|1|1|2/3 -- 8/9|1/2 -- 3/4|1/2 -- 3/4
""".strip().splitlines()

# smallest known maximal pairwise overlap, n = 2..22, m = 2..16
# cell syntax: value[*][^e|^m]; * = bold (established optimal)
TABLE3 = """
0|0|0|0|0|0|0|0|0|0|0|0|0|0|0
1/4*^e|0|0|0|0|0|0|0|0|0|0|0|0|0|0
1/3*^e|1/9*^e|0|0|0|0|0|0|0|0|0|0|0|0|0
1/2*|.1886|1/16*^e|0|0|0|0|0|0|0|0|0|0|0|0
1/2*^m|1/5*^e|.1071|1/25*^e|0|0|0|0|0|0|0|0|0|0|0
.6051*|2/9*^e|1/8*^e|.0709|1/36*^e|0|0|0|0|0|0|0|0|0|0
.6306*|1/4|1/7*^e|.0871|.0502|1/49*^e|0|0|0|0|0|0|0|0|0
2/3*|1/4*^e|.1615|.1025|1/16*^e|.0384|1/64*^e|0|0|0|0|0|0|0|0
.7022*|1/3*|.1687|1/9*^e|.0741|.0491|.0299|1/81*^e|0|0|0|0|0|0|0
.7236*|1/3*|.1808|3/25*^e|1/12*^e|.0573|.0394|.0238|1/100*^e|0|0|0|0|0|0
.7236*|1/3*^m|.1830|.1277|1/11*^e|.0651|.0456|.0319|.0193|1/121*^e|0|0|0|0|0
.7713*|.3871|3/16*^e|.1351|.0972|.0714|.0522|1/27*^e|.0265|.0163|1/144*^e|0|0|0|0
.7820*|.4066|1/5|.1411|.1026|1/13*^e|.0577|.0429|.0310|.0222|.0138|1/169*^e|0|0|0
.7963|.4141|1/5|.1452|.1072|4/49*^e|1/16*^e|.0476|.0357|.0262|.0189|.0118|1/196*^e|0|0
.8061|.4196|1/5*^e|.1506|1/9*^e|.0857|1/15*^e|.0519|1/25*^e|.0303|1/45*^e|.0162|.0101|1/225*^e|0
.8140|.4282|1/4*|.1549|.1154|.0893|.0703|.0556|.0438|.0341|.0261|.0196|.0141|.0089|1/256*^e
.8243|.4395|1/4*|.1581|.1194|.0926|.0735|1/17*^e|.0471|.0374|.0294|.0227|.0173|.0123|.0079
.8366|.4576|1/4*|.1581|.1220|.0954|.0764|5/81*^e|1/20*^e|.0404|.0324|.0257|.0199|.0154|.0111
.8382|.4712|1/4*^m|.1581|.1254|.0983|.0790|.0643|1/19*^e|.0431|.0351|.0284|.0226|.0176|.0137
.8497|.4733|.2890|4/25*^e|.1271|.1011|.0813|.0667|.0550|.0455|.0375|.0308|.0250|.0200|1/64*^e
.8552|.4948|.2979|1/6|.1293|.1039|.0835|.0688|.0571|.0476|.0397|.0330|.0272|.0222|.0179
""".strip().splitlines()

# smallest known SMP worst-case error, n = 2..22, m = 2..4
TABLE4 = """
0|0|0
5/8^e|0|0
2/3^e|7/27^e|0
3/4|.4330|9/64^e
3/4^m|7/15^e|.2494
.8025|11/18^e|.3398
.8153|5/8|5/14^e
5/6|5/8^e|.4962
.8511|2/3|.5567
.8618|2/3|.5904
.8618|2/3^m|.5915
.8857|.6935|19/32^e
.8910|.7033|3/5
.8982|.7071|3/5
.9031|.7098|3/5^e
.9070|.7141|5/8
.9122|.7198|5/8
.9183|.7288|5/8
.9191|.7356|5/8^m
.9249|.7367|.6445
.9276|.7474|.6490
""".strip().splitlines()


def parse_marked(cell: str) -> dict:
    mark = None
    bold = False
    if cell.endswith("^e") or cell.endswith("^m"):
        mark = cell[-1]
        cell = cell[:-2]
    if cell.endswith("*"):
        bold = True
        cell = cell[:-1]
    return {"value": cell, "bold": bold, "mark": mark}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    dump_json(OUT / "table1.json", {
        "m_range": [2, 16],
        "rows": {q: split_row(r) for q, r in TABLE1.items()},
    })
    dump_json(OUT / "table2.json", {
        "n_range": [2, 40], "m_range": [2, 16],
        "rows": {str(n + 2): split_row(row) for n, row in enumerate(TABLE2)},
    })
    dump_json(OUT / "table_smp.json", {
        "n_range": [2, 22], "m_range": [2, 9],
        "rows": {str(n + 2): split_row(row) for n, row in enumerate(TABLE_SMP)},
    })
    dump_json(OUT / "table3.json", {
        "n_range": [2, 22], "m_range": [2, 16],
        "rows": {str(n + 2): [parse_marked(c) for c in split_row(row)]
                 for n, row in enumerate(TABLE3)},
    })
    dump_json(OUT / "table4.json", {
        "n_range": [2, 22], "m_range": [2, 4],
        "rows": {str(n + 2): [parse_marked(c) for c in split_row(row)]
                 for n, row in enumerate(TABLE4)},
    })
    for name, rows, width in [("table2", TABLE2, 15), ("table_smp", TABLE_SMP, 8),
                              ("table3", TABLE3, 15), ("table4", TABLE4, 3)]:
        for i, row in enumerate(rows):
            if len(split_row(row)) != width:
                raise SystemExit(f"{name} row {i + 2}: {len(split_row(row))} cells")
    print("tables written")


if __name__ == "__main__":
    main()
