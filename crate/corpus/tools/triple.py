"""Type-I triple point pair: the tip of one figure-eight lobe is pushed
across the double point of another."""
import math
import sys

from lagrangian import Curve, build, crossings, dump, polyline


def fig8(cx, cy, vertical=False, flip=False):
    def f(t):
        if flip:
            t = -t
        x, y = math.cos(t), math.sin(t) * math.cos(t)
        if vertical:
            x, y = -y, x
        return (cx + x, cy + y)
    return f


def curves(delta, shift):
    l1 = Curve("L1", polyline(fig8(0.0, 0.0)))
    # L2 hangs below with its upper lobe tip at height delta
    l2 = Curve("L2", polyline(fig8(0.0, delta - 1.0, vertical=True)), shift)
    return [l1, l2]


def names_for(cs, delta):
    out = []
    for sa, sb, pt in crossings(cs):
        if sa[0] == sb[0]:
            out.append(("k" if sa[0] == 0 else "m", pt))
        elif math.hypot(*pt) < 0.3:
            # name by the strand of L1 that is crossed
            out.append(("x" if pt[0] * pt[1] > 0 else "y", pt))
        else:
            out.append((("p" if pt[0] < 0 else "q") + ("u" if pt[1] > delta - 1 else "d"), pt))
    return out


def side(delta, shift, partition, path=None):
    cs = curves(delta, shift)
    names = names_for(cs, delta)
    # markers just past pu, an arc the move does not touch
    markers = {"L1": {"star": 2, "bullet": 2}, "L2": {"star": 1, "bullet": 1}}
    doc, rep = build(cs, names, partition, markers=markers)
    if path:
        dump(doc, path)
    return doc, rep


if __name__ == "__main__":
    # z shift 0 puts L2 between the two strands of L1, so the tiny triangle
    # has two positive corners
    out = sys.argv[1] if len(sys.argv) > 1 else "../moves"
    for prefix, partition in [("triple", {"L1": 1, "L2": 1}), ("triple_split", {"L1": 1, "L2": 2})]:
        for delta, tag in [(-0.12, "minus"), (0.12, "plus")]:
            doc, rep = side(delta, 0.0, partition, f"{out}/{prefix}_{tag}.json")
            print(prefix, tag, [(c["id"], c["sign"], c["grading"], rep[c["id"]]["top"]) for c in doc["crossings"]])
