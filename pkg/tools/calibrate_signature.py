"""Dev check: pick the Goeritz eta / correction convention from anchor knots."""

import itertools
import sys

sys.path.insert(0, "src")

from straightknot.diagram import validate_pd, mirror_diagram
from straightknot.families import BraidWord, braid_closure, weaving
from straightknot.invariants import _symmetric_signature


def goeritz_sig(d, eta02, type_rule):
    """type_rule(sign, white_is_02) -> crossing belongs to the correction sum."""
    colors = d.checkerboard()
    white = 0
    faces = d.faces()
    white_faces = [i for i in range(len(faces)) if colors[i] == white]
    widx = {f: i for i, f in enumerate(white_faces)}
    m = len(white_faces)
    g = [[0] * m for _ in range(m)]
    corr = 0
    for ci in range(d.n):
        cf = [d.corner_face(ci, s) for s in range(4)]
        if colors[cf[0]] == white:
            pair = (cf[0], cf[2])
            is02 = True
            eta = eta02
        else:
            pair = (cf[1], cf[3])
            is02 = False
            eta = -eta02
        i, j = widx[pair[0]], widx[pair[1]]
        if i != j:
            g[i][j] -= eta
            g[j][i] -= eta
            g[i][i] += eta
            g[j][j] += eta
        if type_rule(d.signs[ci], is02, eta):
            corr += eta
    minor = [row[1:] for row in g[1:]]
    return _symmetric_signature(minor) - corr


def main():
    anchors = []
    kneg = validate_pd([[2, 1, 1, 2]])
    kpos = validate_pd([[1, 1, 2, 2]])
    anchors.append(("kink A", kneg, 0))
    anchors.append(("kink B", kpos, 0))
    t = validate_pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    anchors.append(("left trefoil", t, 2))
    anchors.append(("right trefoil", mirror_diagram(t), -2))
    f8 = weaving(3, 2)
    anchors.append(("figure-8", f8, 0))
    anchors.append(("figure-8 mirror", mirror_diagram(f8), 0))
    t51 = braid_closure(BraidWord(2, ((1, 5),)))
    anchors.append(("left 5_1", t51, 4))
    anchors.append(("right 5_1", mirror_diagram(t51), -4))
    t52 = braid_closure(BraidWord(2, ((1, 7),)))
    anchors.append(("left 7_1", t52, 6))
    # unknot: trefoil with one crossing switched
    u = validate_pd([[4, 2, 5, 1], [3, 6, 4, 1], [5, 2, 6, 3]])
    anchors.append(("3-crossing unknot", u, 0))
    anchors.append(("3-crossing unknot mirror", mirror_diagram(u), 0))
    w34 = weaving(3, 4)
    anchors.append(("8_18 (sig 0)", w34, 0))  # 8_18 is amphichiral-ish, sigma = 0

    rules = {
        "sign==eta": lambda s, is02, eta: s == eta,
        "sign!=eta": lambda s, is02, eta: s != eta,
        "sign>0": lambda s, is02, eta: s > 0,
        "sign<0": lambda s, is02, eta: s < 0,
        "is02": lambda s, is02, eta: is02,
        "not02": lambda s, is02, eta: not is02,
        "never": lambda s, is02, eta: False,
        "always": lambda s, is02, eta: True,
    }
    for eta02 in (1, -1):
        for rname, rule in rules.items():
            results = []
            ok = True
            for name, d, want in anchors:
                got = goeritz_sig(d, eta02, rule)
                results.append((name, want, got))
                if got != want:
                    ok = False
            flag = "  <== ALL MATCH" if ok else ""
            bad = [(n, w, g) for n, w, g in results if w != g]
            print(f"eta02={eta02:+d} rule={rname:10s} mismatches={len(bad)}{flag}")
            if len(bad) <= 3 and bad:
                print("   ", bad)


if __name__ == "__main__":
    main()
