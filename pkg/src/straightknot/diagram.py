"""PD-code knot diagrams: validation, conversions, combinatorial predicates.

A crossing is a 4-tuple of edge labels listed counterclockwise starting at
the incoming under-strand.  Orientation is recovered from the traversal, and
a crossing is positive exactly when the over-strand enters at slot 3.
Only knots are accepted; multi-component closures are a hard error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    EdgeDegreeError,
    InvalidOrientationError,
    MultiComponentError,
    NonPlanarError,
)
from .planarity import realizable_word

Half = tuple[int, int]  # (crossing index, slot 0..3)


def _opposite(h: Half) -> Half:
    return (h[0], (h[1] + 2) % 4)


def _rotate(h: Half) -> Half:
    return (h[0], (h[1] + 1) % 4)


class Diagram:
    """A validated knot diagram with derived orientation data.

    Attributes:
        pd: tuple of 4-tuples of edge labels.
        n: crossing count.
        signs: per-crossing sign (+1/-1), empty for the unknot.
        gauss_ids: edge traversal as a sequence of 2n crossing indices.
    """

    __slots__ = (
        "pd",
        "n",
        "signs",
        "gauss_ids",
        "gauss_over",
        "_pair",
        "_exits",
        "_faces",
        "_face_of_dart",
        "_colors",
    )

    def __init__(self, pd):
        rows = []
        for row in pd:
            row = tuple(int(x) for x in row)
            if len(row) != 4:
                raise ValueError("crossing %r does not have 4 edge labels" % (row,))
            rows.append(row)
        self.pd = tuple(rows)
        self.n = len(rows)
        self._faces = None
        self._face_of_dart = None
        self._colors = None

        counts: dict[int, list[Half]] = {}
        for ci, row in enumerate(rows):
            for s, lbl in enumerate(row):
                counts.setdefault(lbl, []).append((ci, s))
        bad = sorted(lbl for lbl, hs in counts.items() if len(hs) != 2)
        if bad:
            raise EdgeDegreeError("edge labels not appearing exactly twice: %s" % bad)
        self._pair = {}
        for hs in counts.values():
            a, b = hs
            self._pair[a] = b
            self._pair[b] = a

        if self.n == 0:
            self.signs = ()
            self.gauss_ids = ()
            self.gauss_over = ()
            self._exits = frozenset()
            return

        orbits = self._succ_orbits()
        if len(orbits) != 2:
            raise MultiComponentError(
                "closure has %d components, expected 1" % (len(orbits) // 2)
            )
        under_ins = {(ci, 0) for ci in range(self.n)}
        exits = None
        for orbit in orbits:
            if not (orbit & under_ins):
                exits = orbit
                break
        if exits is None:
            raise InvalidOrientationError(
                "no orientation makes every first entry an incoming under-edge"
            )
        self._exits = frozenset(exits)

        signs = []
        for ci in range(self.n):
            in1 = (ci, 1) not in self._exits
            in3 = (ci, 3) not in self._exits
            if in1 == in3:
                raise InvalidOrientationError(
                    "crossing %d has inconsistent over-strand direction" % ci
                )
            signs.append(1 if in3 else -1)
        self.signs = tuple(signs)

        ids, over = self._traverse()
        self.gauss_ids = ids
        self.gauss_over = over

        if self._count_faces() != self.n + 2:
            raise NonPlanarError("rotation system is not planar (V-E+F != 2)")
        # Independent cross-check: the induced double-occurrence word must be
        # realizable by the interlacement criterion whenever the rotation is.
        assert realizable_word(self.gauss_ids), "planar rotation with unrealizable word"

    # -- construction helpers ------------------------------------------------

    def _succ_orbits(self):
        seen = set()
        orbits = []
        for ci in range(self.n):
            for s in range(4):
                h = (ci, s)
                if h in seen:
                    continue
                orbit = set()
                cur = h
                while cur not in orbit:
                    orbit.add(cur)
                    cur = _opposite(self._pair[cur])
                seen |= orbit
                orbits.append(orbit)
        return orbits

    def _traverse(self):
        # Deterministic start: the under-pass entry with the smallest in-edge.
        start = None
        best = None
        for ci in range(self.n):
            h = (ci, 0)
            lbl = self.pd[ci][0]
            if best is None or lbl < best:
                best = lbl
                start = h
        ids = []
        over = []
        h = start
        for _ in range(2 * self.n):
            ci, s = h
            ids.append(ci)
            over.append(s in (1, 3))
            h = self._pair[(ci, (s + 2) % 4)]
        return tuple(ids), tuple(over)

    def _count_faces(self) -> int:
        return len(self.faces())

    # -- embedding structure -------------------------------------------------

    def faces(self):
        """Face orbits of the stored rotation system, each a tuple of darts."""
        if self._faces is None:
            seen = set()
            faces = []
            face_of = {}
            for ci in range(self.n):
                for s in range(4):
                    h = (ci, s)
                    if h in seen:
                        continue
                    cycle = []
                    cur = h
                    while cur not in seen:
                        seen.add(cur)
                        cycle.append(cur)
                        cur = _rotate(self._pair[cur])
                    idx = len(faces)
                    faces.append(tuple(cycle))
                    for d in cycle:
                        face_of[d] = idx
            self._faces = tuple(faces)
            self._face_of_dart = face_of
        return self._faces

    def corner_face(self, ci: int, corner: int) -> int:
        """Face at the corner between slots `corner` and `corner+1` of crossing ci."""
        self.faces()
        return self._face_of_dart[(ci, (corner + 1) % 4)]

    def edge_faces(self, label: int) -> tuple[int, int]:
        """The two faces bordering an edge (may coincide only in degenerate shadows)."""
        self.faces()
        halfs = [h for h in self._pair if self.pd[h[0]][h[1]] == label]
        a, b = halfs[0], self._pair[halfs[0]]
        return self._face_of_dart[a], self._face_of_dart[b]

    def checkerboard(self) -> tuple[int, ...]:
        """A 2-coloring of faces; adjacent faces always differ."""
        if self._colors is None:
            faces = self.faces()
            adj: list[set[int]] = [set() for _ in faces]
            for h in self._pair:
                f1 = self._face_of_dart[h]
                f2 = self._face_of_dart[self._pair[h]]
                if f1 != f2:
                    adj[f1].add(f2)
                    adj[f2].add(f1)
            colors = [-1] * len(faces)
            stack = [(0, 0)]
            while stack:
                f, c = stack.pop()
                if colors[f] != -1:
                    if colors[f] != c:
                        raise NonPlanarError("shadow is not checkerboard colorable")
                    continue
                colors[f] = c
                for g in adj[f]:
                    stack.append((g, 1 - c))
            if -1 in colors:
                raise NonPlanarError("disconnected face structure")
            self._colors = tuple(colors)
        return self._colors

    # -- basic derived quantities ---------------------------------------------

    @property
    def edges(self) -> list[int]:
        return sorted({lbl for row in self.pd for lbl in row})

    def writhe(self) -> int:
        return sum(self.signs)

    def is_entry(self, h: Half) -> bool:
        return h not in self._exits

    def over_in_slot(self, ci: int) -> int:
        return 3 if self.signs[ci] > 0 else 1

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.pd == other.pd

    def __hash__(self):
        return hash(self.pd)

    def __repr__(self):
        return "Diagram(%s)" % (list(map(list, self.pd)),)


def validate_pd(raw) -> Diagram:
    """Validate raw PD tuples and return a Diagram, or raise a specific error."""
    return Diagram(raw)


# -- Gauss codes ---------------------------------------------------------------


@dataclass(frozen=True)
class GaussCode:
    """Signed Gauss code: (crossing id, is_over, sign) per visit, length 2n."""

    visits: tuple[tuple[int, bool, int], ...]

    def __post_init__(self):
        seen: dict[int, list[tuple[bool, int]]] = {}
        for cid, over, sign in self.visits:
            seen.setdefault(cid, []).append((over, sign))
        for cid, entries in seen.items():
            if len(entries) != 2:
                raise ValueError("crossing %r does not appear exactly twice" % cid)
            (o1, s1), (o2, s2) = entries
            if o1 == o2:
                raise ValueError("crossing %r must appear once over, once under" % cid)
            if s1 != s2:
                raise ValueError("crossing %r has inconsistent signs" % cid)

    def __len__(self):
        return len(self.visits)


def to_gauss(d: Diagram) -> GaussCode:
    """Signed Gauss code along the orientation, ids relabeled by first visit."""
    relabel: dict[int, int] = {}
    visits = []
    for ci, over in zip(d.gauss_ids, d.gauss_over):
        cid = relabel.setdefault(ci, len(relabel) + 1)
        visits.append((cid, over, d.signs[ci]))
    return GaussCode(tuple(visits))


def from_gauss(g: GaussCode) -> Diagram:
    """Rebuild a Diagram from a signed Gauss code; NonPlanar if unrealizable."""
    if not g.visits:
        return Diagram(())
    two_n = len(g.visits)
    where: dict[int, dict[bool, int]] = {}
    sign_of: dict[int, int] = {}
    for j, (cid, over, sign) in enumerate(g.visits):
        where.setdefault(cid, {})[over] = j
        sign_of[cid] = sign

    def edge_into(j: int) -> int:
        return two_n if j == 0 else j

    pd = []
    for cid in sorted(where):
        ju, jo = where[cid][False], where[cid][True]
        u_in, u_out = edge_into(ju), edge_into((ju + 1) % two_n)
        o_in, o_out = edge_into(jo), edge_into((jo + 1) % two_n)
        if sign_of[cid] > 0:
            pd.append((u_in, o_out, u_out, o_in))
        else:
            pd.append((u_in, o_in, u_out, o_out))
    return Diagram(pd)


# -- predicates -----------------------------------------------------------------


def is_alternating(d: Diagram) -> bool:
    """True iff the traversal strictly alternates over/under passes."""
    if d.n == 0:
        return True
    seq = d.gauss_over
    return all(seq[i] != seq[(i + 1) % len(seq)] for i in range(len(seq)))


def is_reduced(d: Diagram) -> bool:
    """True iff no crossing is nugatory (no cut vertex in the checkerboard shadow)."""
    return not nugatory_crossings(d)


def nugatory_crossings(d: Diagram) -> list[int]:
    """Crossings whose opposite corners share a face (removable by untwisting)."""
    out = []
    for ci in range(d.n):
        if d.corner_face(ci, 0) == d.corner_face(ci, 2) or d.corner_face(
            ci, 1
        ) == d.corner_face(ci, 3):
            out.append(ci)
    return out


@dataclass(frozen=True)
class TwistRegion:
    """A maximal bigon chain: crossing ids in chain order.

    `boundary` holds the outward edge pair at each end of the chain; it is
    None for a closed chain (every crossing flanked by bigons, as in the
    standard (2,q) torus diagrams).  For a singleton the two pairs are the
    corner-(0,1) pair and its opposite, which fixes the extension axis used
    by full-twist insertion.
    """

    crossings: tuple[int, ...]
    boundary: tuple[tuple[int, int], tuple[int, int]] | None


def _bigon_faces(d: Diagram):
    """Faces of length 2 joining two distinct crossings."""
    out = []
    for f in d.faces():
        if len(f) == 2:
            (c1, _), (c2, _) = f
            if c1 != c2:
                out.append(f)
    return out


def twist_regions(d: Diagram) -> list[TwistRegion]:
    """Partition the crossings into maximal twist regions (singletons included)."""
    adj: dict[int, set[int]] = {ci: set() for ci in range(d.n)}
    bigon_corner: dict[tuple[int, int], int] = {}
    for f in _bigon_faces(d):
        (c1, _), (c2, _) = f
        adj[c1].add(c2)
        adj[c2].add(c1)
        for ci, other in ((c1, c2), (c2, c1)):
            for corner in range(4):
                if d.corner_face(ci, corner) == d._face_of_dart[f[0]]:
                    bigon_corner[(ci, other)] = corner

    def outward_pair(ci: int, toward: int) -> tuple[int, int]:
        corner = bigon_corner[(ci, toward)]
        return (d.pd[ci][(corner + 2) % 4], d.pd[ci][(corner + 3) % 4])

    seen: set[int] = set()
    regions = []
    for start in range(d.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            c = stack.pop()
            for nb in adj[c]:
                if nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        seen |= comp
        if len(comp) == 1:
            c = start
            regions.append(
                TwistRegion(
                    (c,),
                    ((d.pd[c][0], d.pd[c][1]), (d.pd[c][2], d.pd[c][3])),
                )
            )
            continue
        ends = sorted(c for c in comp if len(adj[c]) == 1)
        if not ends:
            first = min(comp)
            order = [first]
            prev = None
            while len(order) < len(comp):
                nxt = min(x for x in adj[order[-1]] if x != prev)
                prev = order[-1]
                order.append(nxt)
            regions.append(TwistRegion(tuple(order), None))
            continue
        order = [ends[0]]
        prev = None
        while True:
            candidates = [x for x in adj[order[-1]] if x != prev]
            if not candidates:
                break
            prev = order[-1]
            order.append(candidates[0])
        boundary = (
            outward_pair(order[0], order[1]),
            outward_pair(order[-1], order[-2]),
        )
        regions.append(TwistRegion(tuple(order), boundary))
    regions.sort(key=lambda r: r.crossings[0])
    return regions


def straight_decomposable(d: Diagram):
    """Find two cut points splitting the knot into arcs that each meet every
    crossing once, or None.

    Returns a pair (i, j) of positions in the Gauss sequence: cutting just
    before visit i and just before visit j leaves each crossing with exactly
    one pass in either arc.
    """
    if d.n == 0:
        return (0, 0)
    ids = d.gauss_ids
    two_n = len(ids)
    for i in range(two_n):
        window = [ids[(i + k) % two_n] for k in range(d.n)]
        if len(set(window)) == d.n:
            return (i, (i + d.n) % two_n)
    return None


def max_simple_arc(d: Diagram) -> int:
    """Longest arc of the knot meeting distinct crossings only, by brute force."""
    if d.n == 0:
        return 0
    ids = d.gauss_ids
    two_n = len(ids)
    best = 0
    for start in range(two_n):
        seen = set()
        k = 0
        while k < two_n:
            c = ids[(start + k) % two_n]
            if c in seen:
                break
            seen.add(c)
            k += 1
        best = max(best, len(seen))
    return best


# -- mirrors, relabeling, isomorphism -------------------------------------------


def mirror_diagram(d: Diagram) -> Diagram:
    """Swap over/under everywhere (same shadow, mirror knot)."""
    pd = []
    for ci, (a, b, c, e) in enumerate(d.pd):
        if d.signs[ci] > 0:
            pd.append((e, a, b, c))
        else:
            pd.append((b, c, e, a))
    return Diagram(pd)


def diagram_key(d: Diagram):
    """Canonical form invariant under edge relabeling and orientation reversal."""
    if d.n == 0:
        return ()
    best = None
    for reverse in (False, True):
        rows = []
        for ci, row in enumerate(d.pd):
            rows.append(row if not reverse else (row[2], row[3], row[0], row[1]))
        dd = Diagram(rows)
        for start_ci in range(dd.n):
            h = (start_ci, 0)  # under-in entries are canonical walk starts
            relabel: dict[int, int] = {}
            cur = h
            for _ in range(2 * dd.n):
                ci, s = cur
                lbl = dd.pd[ci][s]
                if lbl not in relabel:
                    relabel[lbl] = len(relabel) + 1
                exit_h = (ci, (s + 2) % 4)
                out_lbl = dd.pd[ci][(s + 2) % 4]
                if out_lbl not in relabel:
                    relabel[out_lbl] = len(relabel) + 1
                cur = dd._pair[exit_h]
            key = tuple(sorted(tuple(relabel[x] for x in row) for row in dd.pd))
            if best is None or key < best:
                best = key
    return best


def relabel_canonical(d: Diagram) -> Diagram:
    """Relabel edges 1..2n in traversal order, starting from crossing 0's under-in."""
    if d.n == 0:
        return d
    relabel: dict[int, int] = {}
    cur: Half = (0, 0)
    for _ in range(2 * d.n):
        ci, s = cur
        lbl = d.pd[ci][s]
        if lbl not in relabel:
            relabel[lbl] = len(relabel) + 1
        out_lbl = d.pd[ci][(s + 2) % 4]
        if out_lbl not in relabel:
            relabel[out_lbl] = len(relabel) + 1
        cur = d._pair[(ci, (s + 2) % 4)]
    return Diagram([tuple(relabel[x] for x in row) for row in d.pd])


# -- text formats ----------------------------------------------------------------


def parse_pd_text(line: str) -> Diagram:
    """Parse one `[[a,b,c,d],...]` line into a validated Diagram."""
    data = json.loads(line.strip() or "[]")
    return validate_pd(data)


def format_pd(d: Diagram) -> str:
    return json.dumps([list(row) for row in d.pd], separators=(",", ":"))


def parse_gauss_text(text: str) -> GaussCode:
    """Parse comma-separated tokens like `O3+,U1-` into a GaussCode."""
    visits = []
    text = text.strip()
    if not text:
        return GaussCode(())
    for tok in text.split(","):
        tok = tok.strip()
        if len(tok) < 3 or tok[0] not in "OU" or tok[-1] not in "+-":
            raise ValueError("bad Gauss token %r" % tok)
        visits.append((int(tok[1:-1]), tok[0] == "O", 1 if tok[-1] == "+" else -1))
    return GaussCode(tuple(visits))


def format_gauss(g: GaussCode) -> str:
    return ",".join(
        "%s%d%s" % ("O" if over else "U", cid, "+" if sign > 0 else "-")
        for cid, over, sign in g.visits
    )
