"""Print the circular sign sweep of a point file, one crossing per line.

    python scripts/sweep_trace.py points.txt
"""
import sys
from pathlib import Path

from radonlink.formats import parse_points
from radonlink.sweep import find_partition, sweep_configuration

SYMBOL = {1: "+", 0: "0", -1: "-"}


def main(path):
    c = parse_points(Path(path).read_text())
    basis, order = sweep_configuration(c)
    print("u =", " ".join(str(x) for x in basis.u))
    print("v =", " ".join(str(x) for x in basis.v))
    for k, cr in enumerate(order.crossings):
        s, t = cr.direction
        pattern = "".join(SYMBOL[x] for x in cr.pattern)
        print(f"{k:3d}  line {cr.index:2d}  ({s}, {t})  {pattern}  +{len(cr.plus)} -{len(cr.minus)}")
        print(f"       sector {''.join(SYMBOL[x] for x in order.sectors[k])}")
    r = find_partition(c)
    print(f"{r.parity} case: {list(r.first)} / {list(r.second)}")


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    main(sys.argv[1])
