"""Rebuild the w = 2134, h = (3,3,4,4) example graph.

Writes a DOT file with all 24 vertices of S_4 (the 6 outside Gamma_{w,h} in
gray) and prints the degree table.  Render with ``dot -Tpdf``.
"""

import argparse
from collections import Counter
from pathlib import Path

from hesspat.gkm import degree_table, induced_subgraph, is_regular, to_dot
from hesspat.hessenberg import HessenbergFunction
from hesspat.perm_core import Permutation


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--perm", default="2134")
    ap.add_argument("--hess", default="3,3,4,4")
    ap.add_argument("--out", type=Path, default=Path("example_2134.dot"))
    args = ap.parse_args()

    g = induced_subgraph(Permutation.parse(args.perm), HessenbergFunction.parse(args.hess))
    args.out.write_text(to_dot(g, show_excluded=True), encoding="utf-8")
    regular, (lo, hi) = is_regular(g)
    print(f"wrote {args.out}: {len(g)} vertices, {'regular' if regular else 'irregular'} ({lo},{hi})")
    print("degree counts:", dict(sorted(Counter(g.degrees).items())))
    for name, d in degree_table(g):
        print(f"  {name}  {d}{'  *' if d != lo else ''}")


if __name__ == "__main__":
    main()
