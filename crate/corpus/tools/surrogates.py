"""Torsion-style surrogates: figure-eight unknots whose inner lobes surround
a central polygon with one corner per neighbouring pair."""
import math
import sys

from lagrangian import Curve, build, crossings, dump, polyline, realizable


def lobe_curve(name, phi, dist, width, flip=False, n=2000):
    c, s = math.cos(phi), math.sin(phi)

    def f(t):
        if flip:
            t = -t
        x, y = math.cos(t), width * math.sin(t) * math.cos(t)
        # crossing sits at dist * (c, s); the x < 0 lobe points at the origin
        return (dist * c + x * c - y * s, dist * s + x * s + y * c)

    return Curve(name, polyline(f, n))


def layout(kind):
    if kind == "venn3":
        return [lobe_curve(f"L{i + 1}", math.pi / 2 + 2 * math.pi * i / 3, 0.8, 0.9) for i in range(3)]
    if kind == "chain4":
        return [lobe_curve(f"L{i + 1}", math.pi / 4 + math.pi * i / 2, 1.2, 1.2) for i in range(4)]
    raise SystemExit(f"unknown layout {kind}")


def main():
    kind = sys.argv[1]
    flip = "flip" in sys.argv
    curves = layout(kind)
    n = len(curves)
    names, over = [], {}
    counter = {}
    tops = {}
    xs = crossings(curves)
    # central corners first: order mixed crossings by distance from the origin
    xs.sort(key=lambda x: math.hypot(*x[2]))
    for sa, sb, pt in xs:
        a, b = sorted((sa[0], sb[0]))
        if a == b:
            cid = f"b{a + 1}"
        else:
            counter[(a, b)] = counter.get((a, b), 0) + 1
            cid = f"c{a + 1}{b + 1}_{counter[(a, b)]}"
            # cyclic: component i is under wherever it meets i + 1
            under = a if (b - a) % n == 1 else b
            if flip:
                under = b if under == a else a
            bits = next((x[6:] for x in sys.argv if x.startswith("outer=")), "")
            if counter[(a, b)] > 1 and bits:
                # one bit per pair in order of first appearance
                pos = sorted(counter).index((a, b))
                if bits[pos] == "1":
                    under = b if under == a else a
            over[cid] = curves[b if under == a else a].name
            if counter[(a, b)] == 1:
                tops[(round(pt[0], 6), round(pt[1], 6))] = b if under == a else a
        names.append((cid, pt))
    # only the central corners are prescribed; shifts decide the rest
    margin, shifts = realizable(curves, tops, only=set(tops))
    print(f"lift margin {margin:.4f} shifts {[round(float(s), 3) for s in shifts]}")
    for c, s in zip(curves, shifts):
        c.z = [z + s for z in c.z]
    if margin > 0 and "lift" in sys.argv:
        over = {}
    doc, rep = build(curves, names, {c.name: i + 1 for i, c in enumerate(curves)}, over=over)
    for k, v in rep.items():
        print(k, v)
    print([(c["id"], c["sign"], c.get("grading")) for c in doc["crossings"]])
    dump(doc, next((a for a in sys.argv[2:] if a.endswith(".json")), f"/tmp/{kind}.json"))


if __name__ == "__main__":
    main()
