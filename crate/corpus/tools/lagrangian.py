"""Build diagram documents from parametrised planar curves.

Each component is a closed curve sampled as a polyline. Crossings are found
by segment intersection. Over/under is decided by a Legendrian z-lift
(dz = y dx, plus a per-component shift) unless overridden. Signs, visit
sequences, rotation numbers and pure-chord gradings follow from geometry.
"""

import json
import math


def polyline(f, n=2000):
    # the offset keeps samples off symmetric crossings
    return [f(2 * math.pi * (i + 0.37) / n) for i in range(n)]


def spline(points, n=3000):
    """Closed periodic cubic spline through control points."""
    import numpy as np
    from scipy.interpolate import CubicSpline

    pts = np.array(points + [points[0]], dtype=float)
    seg = np.sqrt(((pts[1:] - pts[:-1]) ** 2).sum(axis=1))
    t = np.concatenate([[0], np.cumsum(seg)])
    cs = CubicSpline(t, pts, bc_type="periodic")
    ts = np.linspace(0, t[-1], n, endpoint=False)
    return [tuple(map(float, p)) for p in cs(ts)]


def _intersect(p, q, r, s):
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    if abs(d) < 1e-15:
        return None
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    u = ((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0])) / d
    if 0 <= t < 1 and 0 <= u < 1:
        return t, u
    return None


def _angle(v):
    return math.atan2(v[1], v[0])


def _turn(a, b):
    d = _angle(b) - _angle(a)
    while d > math.pi:
        d -= 2 * math.pi
    while d <= -math.pi:
        d += 2 * math.pi
    return d


class Curve:
    def __init__(self, name, pts, shift=0.0):
        self.name = name
        self.pts = pts
        n = len(pts)
        self.z = [0.0] * (n + 1)
        for i in range(n):
            p, q = pts[i], pts[(i + 1) % n]
            self.z[i + 1] = self.z[i] + 0.5 * (p[1] + q[1]) * (q[0] - p[0])
        self.z = [z + shift for z in self.z]
        self.closure = self.z[n] - self.z[0]

    def seg(self, i):
        n = len(self.pts)
        return self.pts[i], self.pts[(i + 1) % n]

    def tangent(self, i):
        p, q = self.seg(i)
        return (q[0] - p[0], q[1] - p[1])

    def height(self, i, t):
        return self.z[i] + t * (self.z[i + 1] - self.z[i])

    def turning(self, i0, t0, i1, t1):
        """Signed tangent turning from (i0, t0) forward to (i1, t1)."""
        n = len(self.pts)
        total = 0.0
        i = i0
        while i != i1:
            total += _turn(self.tangent(i), self.tangent((i + 1) % n))
            i = (i + 1) % n
        if (i0, t0) > (i1, t1) and i0 == i1:
            for _ in range(n):
                total += _turn(self.tangent(i), self.tangent((i + 1) % n))
                i = (i + 1) % n
        return total

    def angle(self, i):
        """Continuous tangent angle at segment i, measured from segment 0."""
        if not hasattr(self, "_angles"):
            acc = [_angle(self.tangent(0))]
            for k in range(len(self.pts) - 1):
                acc.append(acc[-1] + _turn(self.tangent(k), self.tangent(k + 1)))
            self._angles = acc
        return self._angles[i]

    def rot(self):
        n = len(self.pts)
        t = sum(_turn(self.tangent(i), self.tangent((i + 1) % n)) for i in range(n))
        return round(t / (2 * math.pi))


def crossings(curves):
    import numpy as np

    found = []
    for a, ca in enumerate(curves):
        pa = np.array(ca.pts)
        qa = np.roll(pa, -1, axis=0)
        for b in range(a, len(curves)):
            pb = np.array(curves[b].pts)
            qb = np.roll(pb, -1, axis=0)
            da, db = qa - pa, qb - pb
            for i in range(len(pa)):
                p, d = pa[i], da[i]
                den = d[0] * db[:, 1] - d[1] * db[:, 0]
                rp = pb - p
                with np.errstate(divide="ignore", invalid="ignore"):
                    t = (rp[:, 0] * db[:, 1] - rp[:, 1] * db[:, 0]) / den
                    u = (rp[:, 0] * d[1] - rp[:, 1] * d[0]) / den
                ok = (np.abs(den) > 1e-15) & (t >= 0) & (t < 1) & (u >= 0) & (u < 1)
                for j in np.nonzero(ok)[0]:
                    j = int(j)
                    if a == b and (j <= i + 1 or (i == 0 and j == len(pa) - 1)):
                        continue
                    pt = (float(p[0] + t[j] * d[0]), float(p[1] + t[j] * d[1]))
                    found.append(((a, i, float(t[j])), (b, j, float(u[j])), pt))
    return found


def realizable(curves, tops, only=None):
    """Look for per-component z shifts making every mixed crossing agree with
    `tops` ({crossing point: top component index}).  Returns the best margin
    and the shifts; a positive margin means the choice lifts to a link."""
    import numpy as np
    from scipy.optimize import linprog

    xs = crossings(curves)
    n = len(curves)
    rows, rhs = [], []
    for sa, sb, pt in xs:
        if sa[0] == sb[0]:
            continue
        key = (round(pt[0], 6), round(pt[1], 6))
        if only is not None and key not in only:
            continue
        top = tops[(round(pt[0], 6), round(pt[1], 6))]
        t, b = (sa, sb) if top == sa[0] else (sb, sa)
        zt = curves[t[0]].height(t[1], t[2])
        zb = curves[b[0]].height(b[1], b[2])
        # zt + s_t - zb - s_b >= margin
        row = np.zeros(n + 1)
        row[t[0]] -= 1
        row[b[0]] += 1
        row[n] = 1
        rows.append(row)
        rhs.append(zt - zb)
    cost = np.zeros(n + 1)
    cost[n] = -1
    bounds = [(0, 0)] + [(-100, 100)] * (n - 1) + [(None, 10)]
    res = linprog(cost, A_ub=np.array(rows), b_ub=np.array(rhs), bounds=bounds)
    return res.x[n], list(res.x[:n])


def build(curves, names, partition, gradings=None, over=None, markers=None, options=None,
          offsets=None):
    """names: list of (id, (x, y)) matched to crossings by nearest point.
    over: optional {id: component name on top}. gradings: overrides.
    offsets: integer Maslov potential shift per component for mixed chords."""
    gradings = gradings or {}
    offsets = offsets or {}
    over = over or {}
    xs = crossings(curves)
    if len(xs) != len(names):
        raise SystemExit(f"found {len(xs)} crossings, expected {len(names)}: "
                         + ", ".join(f"({p[0]:.3f},{p[1]:.3f})" for _, _, p in xs))
    ids = {}
    for sa, sb, pt in xs:
        best = min(names, key=lambda nm: math.dist(nm[1], pt))
        if best[0] in ids:
            raise SystemExit(f"two crossings near {best[0]}")
        ids[best[0]] = (sa, sb, pt)
    visits = {c.name: [] for c in curves}
    crossing_docs = []
    report = {}
    for cid, _ in names:
        sa, sb, pt = ids[cid]
        ca, cb = curves[sa[0]], curves[sb[0]]
        ha, hb = ca.height(sa[1], sa[2]), cb.height(sb[1], sb[2])
        if cid in over and ca.name == cb.name:
            # "first"/"second": which pass, in parameter order, is on top
            first_is_a = (sa[1], sa[2]) < (sb[1], sb[2])
            top_is_a = (over[cid] == "first") == first_is_a
        elif cid in over:
            top_is_a = over[cid] == ca.name
        else:
            top_is_a = ha > hb
        top, bot = (sa, sb) if top_is_a else (sb, sa)
        ctop, cbot = curves[top[0]], curves[bot[0]]
        to, tu = ctop.tangent(top[1]), cbot.tangent(bot[1])
        sign = 1 if to[0] * tu[1] - to[1] * tu[0] > 0 else -1
        visits[ctop.name].append((top[1] + top[2], f"{cid}:o"))
        visits[cbot.name].append((bot[1] + bot[2], f"{cid}:u"))
        doc = {"id": cid, "sign": sign}
        if cid in gradings:
            doc["grading"] = gradings[cid]
        else:
            if ctop is cbot:
                theta = ctop.turning(top[1], top[2], bot[1], bot[2])
                shift = 0
            else:
                theta = cbot.angle(bot[1]) - ctop.angle(top[1])
                shift = offsets.get(cbot.name, 0) - offsets.get(ctop.name, 0)
            raw = theta / math.pi - 0.5 + shift
            sigma = 1 if sign < 0 else 0
            g = min((k for k in range(math.floor(raw) - 2, math.ceil(raw) + 3) if k % 2 == sigma),
                    key=lambda k: abs(k - raw))
            doc["grading"] = g
        crossing_docs.append(doc)
        report[cid] = dict(point=pt, top=ctop.name, height=abs(ha - hb))
    comps = []
    for c in curves:
        seq = [v for _, v in sorted(visits[c.name])]
        comps.append({"id": c.name, "rot": c.rot(), "visits": seq})
    # The unbounded face lies to the right of the rightmost point when the
    # curve moves upward there.
    ci, vi = max(((ci, vi) for ci, c in enumerate(curves) for vi in range(len(c.pts))),
                 key=lambda cv: curves[cv[0]].pts[cv[1]][0])
    keys = sorted(k for k, _ in visits[curves[ci].name])
    before = sum(1 for k in keys if k < vi)
    edge = (before - 1) % len(keys) if keys else 0
    side = "right" if curves[ci].tangent(vi)[1] > 0 else "left"
    options = dict(options or {})
    options.setdefault("outer_face", [{"component": curves[ci].name, "edge": edge, "side": side}])
    doc = {
        "schema_version": 1,
        "components": comps,
        "crossings": crossing_docs,
        "markers": markers or {c.name: {"star": 0, "bullet": 0} for c in curves},
        "partition": partition,
    }
    if options:
        doc["options"] = options
    return doc, report


def dump(doc, path):
    with open(path, "w") as fh:
        fh.write(json.dumps(doc, indent=2) + "\n")
