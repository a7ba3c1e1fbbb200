"""Double point pair: the upper lobe of a vertical figure-eight is pushed
across one strand of a horizontal one, creating the mixed chords a and b."""
import json
import sys

from lagrangian import Curve, build, crossings, dump, polyline
from triple import fig8

SX = 0.15


def curves(delta, shift):
    l1 = Curve("L1", polyline(fig8(0.0, 0.0)))
    l2 = Curve("L2", polyline(fig8(SX, delta - 1.0, vertical=True)), shift)
    return [l1, l2]


def names_for(cs):
    """Mixed chords right of the self crossing k are x1, x2 by x; the two
    created by the move lie to its left, a nearer to k than b."""
    mixed = [pt for sa, sb, pt in crossings(cs) if sa[0] != sb[0]]
    right = sorted((p for p in mixed if p[0] > 0), key=lambda p: p[0])
    left = sorted((p for p in mixed if p[0] < 0), key=lambda p: -p[0])
    out = [("k", (0.0, 0.0)), ("m", (SX, -1.0))]
    out += [(f"x{i + 1}", pt) for i, pt in enumerate(right)]
    out += list(zip("ab", left))
    return out


def markers(doc, after):
    """Put both markers on the edge leaving the given visit of each component."""
    return {c["id"]: {"star": c["visits"].index(after[c["id"]]),
                      "bullet": c["visits"].index(after[c["id"]])} for c in doc["components"]}


def side(delta, path=None):
    cs = curves(delta, 0.0)
    doc, rep = build(cs, names_for(cs), {"L1": 1, "L2": 2})
    # arcs the move does not touch
    doc["markers"] = markers(doc, {"L1": "k:o", "L2": "m:u"})
    if path:
        dump(doc, path)
    return doc, rep


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "../moves"
    # close to the tangency, so that no chord action falls between b and a
    for delta, tag in [(-0.09, "minus"), (-0.2, "plus")]:
        doc, rep = side(delta, f"{out}/double_{tag}.json")
        print(tag, [(c["id"], c["sign"], c["grading"], rep[c["id"]]["top"]) for c in doc["crossings"]])
        if tag == "minus":
            spec = {"schema_version": 1, "kind": "double", "a": "a", "b": "b",
                    "actions": {k: round(v["height"], 4) for k, v in rep.items()}}
            with open(f"{out}/double_spec.json", "w") as fh:
                fh.write(json.dumps(spec, indent=2) + "\n")
