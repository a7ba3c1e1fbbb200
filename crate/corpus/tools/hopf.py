"""Hopf link: two figure-eight unknots whose lobes overlap in a lens."""
import math
import sys

from lagrangian import Curve, build, dump, polyline


def fig8(cx, cy, sx=1.0, sy=1.0, reverse=False):
    def f(t):
        if reverse:
            t = -t
        return (cx + sx * math.cos(t), cy + sy * math.sin(t) * math.cos(t))
    return f


def curves(shift=0.0, rev1=False, rev2=False):
    l1 = Curve("L1", polyline(fig8(1.6, 0.0, reverse=rev1)), shift)
    l2 = Curve("L2", polyline(fig8(0.0, 0.0, reverse=rev2)))
    return [l1, l2]


if __name__ == "__main__":
    shift = float(sys.argv[1]) if len(sys.argv) > 1 else 0.0
    cs = curves(shift, rev1=True, rev2=True)
    names = [("k1", (0.8, -0.3)), ("k2", (0.8, 0.3)), ("k3", (0.0, 0.0)), ("k4", (1.6, 0.0))]
    doc, rep = build(cs, names, {"L1": 1, "L2": 2},
                     markers={"L1": {"star": 0, "bullet": 0}, "L2": {"star": 0, "bullet": 3}})
    for k, v in rep.items():
        print(k, v)
    print(doc)
    if "write" in sys.argv:
        dump(doc, "../diagrams/hopf.json")
