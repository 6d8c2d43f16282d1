"""Regenerate the bundled knot table from the KnotInfo database.

Writes one record per prime knot through nine crossings:
``name;crossing_number;X(a,b,c,d),...;chirality``.

    pip install database_knotinfo
    python scripts/build_knot_table.py > src/knotile/data/knots.txt
"""

import ast
import sys

import database_knotinfo


def main(max_crossings: int = 9) -> None:
    rows = database_knotinfo.link_list()
    out = sys.stdout
    out.write("# prime knots through nine crossings, PD codes from KnotInfo\n")
    out.write("# name;crossing_number;PD;symmetry type\n")
    for row in rows[1:]:
        name = row["name"]
        if name == "0_1" or int(row["crossing_number"]) > max_crossings:
            continue
        pd = ast.literal_eval(row["pd_notation"])
        code = ",".join("X({},{},{},{})".format(*x) for x in pd)
        sym = row.get("symmetry_type", "").strip()
        out.write(f"{name};{row['crossing_number']};{code};{sym}\n")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
