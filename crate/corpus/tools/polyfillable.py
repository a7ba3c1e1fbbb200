"""Trefoil plus a figure-eight unknot whose lower lobe cuts a corner at a1."""
import sys

from lagrangian import Curve, build, dump, spline
from trefoil import NAMES as TREFOIL_NAMES, OVER as TREFOIL_OVER, trefoil

EIGHT = [
    (2, 2.6), (2.6, 2.3), (2.85, 1.6), (2.6, 0.8), (2, 0.45), (1.4, 0.8), (1.15, 1.6), (1.4, 2.3),
    (2, 2.6), (2.5, 2.95), (2.4, 3.4), (2, 3.55), (1.6, 3.4), (1.5, 2.95),
]

NAMES = TREFOIL_NAMES + [
    ("b", (2, 2.6)),
    ("p1", (1.2, 2)), ("q2", (2.8, 2)),
    ("p2", (1.65, 0.62)), ("q1", (2.35, 0.62)),
]

OVER = {**TREFOIL_OVER, "p1": "L2", "p2": "L2", "q1": "L1", "q2": "L1"}



# chord kij_n starts on component i and ends on component j
RENAME = {"a1": "k11_1", "a2": "k11_2", "a3": "k11_3", "a4": "k11_4", "a5": "k11_5", "b": "k22_1",
          "p1": "k12_1", "p2": "k12_2", "q1": "k21_1", "q2": "k21_2"}


def rename(doc, table):
    for comp in doc["components"]:
        comp["visits"] = [table[v.split(":")[0]] + ":" + v.split(":")[1] for v in comp["visits"]]
    for c in doc["crossings"]:
        c["id"] = table[c["id"]]
    return doc


def main():
    over = dict(OVER)
    for arg in sys.argv[1:]:
        k, v = arg.split("=")
        over[k] = v
    curves = [trefoil(), Curve("L2", spline(EIGHT[::-1]))]
    doc, rep = build(curves, NAMES, {"L1": 1, "L2": 2}, over=over,
                     options={"coefficients": "plain"})
    for k, v in rep.items():
        print(k, v)
    print([(c["id"], c["sign"], c.get("grading")) for c in doc["crossings"]])
    doc = rename(doc, RENAME)
    dump(doc, "../diagrams/polyfillable.json")
    doc["partition"] = {"L1": 1, "L2": 1}
    dump(doc, "../diagrams/polyfillable_single.json")


if __name__ == "__main__":
    main()
