#!/usr/bin/env python3
"""Turn closed polylines (a drawing of a multiloop) into a combinatorial-map fixture.

Input JSON:
  {"name": ..., "loops": [[[x, y], ...], ...],
   "labels": {"name": [x, y], ...},          optional, a point inside each named region
   "reference_sigma": [[...], ...]}          optional, relabel half-edges to match it

Half-edges are numbered along the strands: edge k runs between consecutive
double points, +k arrives at its end point.  Vertex cycles list the four
half-edges counterclockwise.
"""

import argparse
import json
import math
import sys
from fractions import Fraction


def seg_intersection(p, q, r, s):
    """Parameters (t, u) of the proper crossing of segments pq and rs, or None."""
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    if d == 0:
        return None
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    u = ((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0])) / d
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    if 0 <= t <= 1 and 0 <= u <= 1:
        raise ValueError("degenerate crossing at a polyline corner")
    return None


def build(loops):
    loops = [[(Fraction(str(x)), Fraction(str(y))) for x, y in loop] for loop in loops]
    segs = []  # (loop, index, p, q)
    for li, loop in enumerate(loops):
        if loop[0] == loop[-1]:
            loop.pop()
        for i in range(len(loop)):
            segs.append((li, i, loop[i], loop[(i + 1) % len(loop)]))
    sizes = [len(loop) for loop in loops]
    # events per segment: (t, crossing id)
    events = {(s[0], s[1]): [] for s in segs}
    points = []
    for a in range(len(segs)):
        for b in range(a + 1, len(segs)):
            la, ia, p, q = segs[a]
            lb, ib, r, s = segs[b]
            if la == lb and (ib - ia == 1 or (ia == 0 and ib == sizes[la] - 1)):
                continue  # consecutive pieces share a corner
            hit = seg_intersection(p, q, r, s)
            if hit is None:
                continue
            t, u = hit
            cid = len(points)
            points.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
            events[(la, ia)].append((t, cid))
            events[(lb, ib)].append((u, cid))

    # Walk each loop and cut it into edges between crossings.
    edges = []  # (start crossing, end crossing, polyline)
    per_loop = []
    for li, loop in enumerate(loops):
        before = len(edges)
        seq = []  # ("pt", point) or ("x", cid)
        for i in range(len(loop)):
            seq.append(("pt", loop[i]))
            for t, cid in sorted(events[(li, i)]):
                seq.append(("x", cid))
        first = next((j for j, e in enumerate(seq) if e[0] == "x"), None)
        if first is None:
            raise ValueError("a loop without double points")
        seq = seq[first:] + seq[:first]
        seq.append(seq[0])
        cur = None
        for kind, val in seq:
            pt = points[val] if kind == "x" else val
            if kind == "x":
                if cur is not None:
                    cur["poly"].append(pt)
                    edges.append((cur["start"], val, cur["poly"]))
                cur = {"start": val, "poly": [pt]}
            else:
                cur["poly"].append(pt)
        per_loop.append(len(edges) - before)
    n = len(edges)
    at = {c: [] for c in range(len(points))}  # crossing -> [(angle, half-edge)]
    for k, (a, b, poly) in enumerate(edges, start=1):
        back = poly[-2]
        end = poly[-1]
        at[b].append((math.atan2(float(back[1] - end[1]), float(back[0] - end[0])), k))
        fwd = poly[1]
        st = poly[0]
        at[a].append((math.atan2(float(fwd[1] - st[1]), float(fwd[0] - st[0])), -k))
    cycles = []
    for c in range(len(points)):
        hs = [h for _, h in sorted(at[c])]
        if len(hs) != 4:
            raise ValueError("crossing %d has degree %d" % (c, len(hs)))
        cycles.append(hs)
    return n, cycles, edges, per_loop


def sigma_dict(cycles):
    s = {}
    for c in cycles:
        for i, h in enumerate(c):
            s[h] = c[(i + 1) % len(c)]
    return s


def faces(n, sigma):
    inv = {v: k for k, v in sigma.items()}
    phi = lambda h: inv[-h]
    seen, out = set(), []
    for k in range(1, n + 1):
        for h in (k, -k):
            if h in seen:
                continue
            orbit, x = [], h
            while x not in seen:
                seen.add(x)
                orbit.append(x)
                x = phi(x)
            out.append(orbit)
    return out


def point_in_polygon(pt, poly):
    x, y = pt
    inside = False
    for i in range(len(poly)):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % len(poly)]
        if (y1 > y) != (y2 > y):
            xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < xi:
                inside = not inside
    return inside


def area(poly):
    return sum(poly[i][0] * poly[(i + 1) % len(poly)][1] - poly[(i + 1) % len(poly)][0] * poly[i][1]
               for i in range(len(poly))) / 2


def face_polygons(orbits, edges):
    polys = []
    for orbit in orbits:
        poly = []
        for h in orbit:
            pl = edges[abs(h) - 1][2]
            seg = list(reversed(pl)) if h > 0 else list(pl)  # walk v(h) -> v(-h)
            poly.extend(seg[:-1])
        polys.append(poly)
    return polys


def locate(pt, polys):
    pt = (Fraction(str(pt[0])), Fraction(str(pt[1])))
    best, best_area = None, None
    for i, poly in enumerate(polys):
        a = area(poly)
        if a > 0 and point_in_polygon(pt, poly) and (best is None or a < best_area):
            best, best_area = i, a
    if best is None:  # the unbounded region is the one with negative area
        best = next(i for i, p in enumerate(polys) if area(p) < 0)
    return best


def isomorphism(sa, sb):
    """Map f on half-edges with f(-h) = -f(h) and f(sa(h)) = sb(f(h)), or None."""
    keys = sorted(sa, key=lambda h: (abs(h), h < 0))
    for target in sb:
        f, stack, ok = {keys[0]: target}, [keys[0]], True
        while stack and ok:
            h = stack.pop()
            for x, y in ((-h, -f[h]), (sa[h], sb[f[h]])):
                if x in f:
                    if f[x] != y:
                        ok = False
                        break
                else:
                    f[x] = y
                    stack.append(x)
        if ok and len(f) == len(sa) and len(set(f.values())) == len(sa):
            return f
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("drawing")
    ap.add_argument("-o", "--out")
    args = ap.parse_args()
    drawing_json = json.load(open(args.drawing))
    n, cycles, edges, per_loop = build(drawing_json["loops"])
    sig = sigma_dict(cycles)
    orbits = faces(n, sig)
    polys = face_polygons(orbits, edges)
    region_of_label = {name: locate(pt, polys) for name, pt in drawing_json.get("labels", {}).items()}
    orientation, k = [], 1
    for count in per_loop:  # first edge of every loop, in drawing order
        orientation.append(k)
        k += count

    out_cycles = cycles
    if "reference_sigma" in drawing_json:
        ref = drawing_json["reference_sigma"]
        f = isomorphism(sig, sigma_dict(ref))
        if f is None:
            sys.exit("drawing is not isomorphic to the reference map")
        ref_orbits = faces(n, sigma_dict(ref))
        where = {h: i for i, o in enumerate(ref_orbits) for h in o}
        region_of_label = {name: where[f[orbits[r][0]]] for name, r in region_of_label.items()}
        orientation = [f[h] for h in orientation]
        out_cycles = ref

    if len(set(region_of_label.values())) != len(region_of_label):
        sys.exit("two labels fall in the same region: %s" % sorted(region_of_label.items(), key=lambda x: x[1]))
    fixture = {"sigma": out_cycles, "orientation": orientation,
               "labels": {str(r): name for name, r in sorted(region_of_label.items(), key=lambda x: x[1])}}
    text = json.dumps(fixture)
    if args.out:
        open(args.out, "w").write(text + "\n")
    else:
        print(text)


if __name__ == "__main__":
    main()
