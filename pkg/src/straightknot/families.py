"""Knot family generators: braid closures, spiral and weaving knots, the
traversal bound, full-twist insertion, and the twist template with its
constructed straight witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagram import Diagram, TwistRegion, is_alternating, is_reduced, twist_regions
from .errors import (
    DomainError,
    NotAKnotError,
    NotAlternatingError,
    RegionInvalidError,
    SpecInvalidError,
)


@dataclass(frozen=True)
class BraidWord:
    """A braid word: generator indices 1..strands-1 with nonzero exponents."""

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        for gen, exp in self.letters:
            if not 1 <= gen <= self.strands - 1:
                raise ValueError("generator %d out of range" % gen)
            if exp == 0:
                raise ValueError("zero exponent in braid word")

    def expanded(self) -> list[int]:
        """Signed generator list, one entry per crossing."""
        out = []
        for gen, exp in self.letters:
            out.extend([gen if exp > 0 else -gen] * abs(exp))
        return out

    def permutation(self) -> list[int]:
        perm = list(range(self.strands))
        for g in self.expanded():
            i = abs(g) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def is_knot_closure(self) -> bool:
        """True iff the induced permutation is a single n-cycle."""
        perm = self.permutation()
        seen = 0
        cur = 0
        for _ in range(self.strands):
            cur = perm[cur]
            seen += 1
            if cur == 0:
                break
        return seen == self.strands


def braid_closure(w: BraidWord) -> Diagram:
    """Close a braid word into a knot diagram.

    Strands run top to bottom; the generator with index i passes strand i
    over strand i+1.  Raises NotAKnot when the closure has more than one
    component.
    """
    if not w.is_knot_closure():
        raise NotAKnotError("braid permutation is not an n-cycle")
    letters = w.expanded()
    n_strands = w.strands
    next_label = 1

    def fresh():
        nonlocal next_label
        lbl = next_label
        next_label += 1
        return lbl

    top = [fresh() for _ in range(n_strands)]
    current = list(top)
    pd = []
    for g in letters:
        i = abs(g) - 1
        a, b = current[i], current[i + 1]  # left, right incoming
        c, d = fresh(), fresh()  # left, right outgoing
        if g > 0:
            # strand i passes over strand i+1: under-in is the right edge
            pd.append((b, a, c, d))
        else:
            pd.append((a, c, d, b))
        current[i], current[i + 1] = c, d
    # closure: merge each bottom edge with the matching top edge
    merge = {bot: t for bot, t in zip(current, top)}

    def resolve(lbl):
        while lbl in merge:
            lbl = merge[lbl]
        return lbl

    pd = [tuple(resolve(x) for x in row) for row in pd]
    relabel = {}
    rows = []
    for row in pd:
        rows.append(tuple(relabel.setdefault(x, len(relabel) + 1) for x in row))
    return Diagram(rows)


@dataclass(frozen=True)
class SpiralSpec:
    """Spiral closure parameters: braid width n, repetitions m, exponents eps."""

    n: int
    m: int
    eps: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2 or self.m < 1:
            raise DomainError("spiral needs n >= 2, m >= 1")
        if len(self.eps) != self.n - 1:
            raise DomainError("eps must have n-1 entries")
        if any(e == 0 for e in self.eps):
            raise DomainError("eps entries must be nonzero")


def spiral(spec: SpiralSpec) -> Diagram:
    """Closure of (sigma_1^e1 ... sigma_{n-1}^e_{n-1})^m."""
    letters = tuple((i + 1, e) for i, e in enumerate(spec.eps)) * spec.m
    return braid_closure(BraidWord(spec.n, letters))


def weaving(n: int, m: int) -> Diagram:
    """The alternating spiral knot W(n, m); requires gcd(n, m) = 1."""
    if math.gcd(n, m) != 1:
        raise NotAKnotError("gcd(%d, %d) != 1: closure is a link" % (n, m))
    eps = tuple(1 if i % 2 == 0 else -1 for i in range(n - 1))
    d = spiral(SpiralSpec(n, m, eps))
    assert is_alternating(d) and is_reduced(d)
    return d


def weaving_bound(n: int, m: int, *, brute: bool = False) -> int:
    """Longest once-through arc of W(n, m): 2b(n-1) + (n-1) + 2(r-1).

    Valid under n >= 3, m >= n+1, gcd(n, m) = 1, writing m = bn + r with
    1 <= r <= n-1.  This is the traversal count the braid argument yields
    (block of n words: 2(n-1) crossings; one more full word: n-1; then r-1
    forward and r-1 backward singles); it simplifies to 2m + n - 2b - 3 and
    matches the exhaustive arc search.  With brute=True that search is run
    too and must agree.
    """
    if n < 3 or m < n + 1:
        raise DomainError("bound requires n >= 3 and m >= n+1")
    if math.gcd(n, m) != 1:
        raise DomainError("gcd(%d, %d) != 1" % (n, m))
    b, r = divmod(m, n)
    if r == 0:
        b, r = b - 1, n
    assert b >= 1 and 1 <= r <= n - 1
    value = 2 * b * (n - 1) + (n - 1) + 2 * (r - 1)
    assert value == 2 * m + n - 2 * b - 3
    if brute:
        from .diagram import max_simple_arc

        arc = max_simple_arc(weaving(n, m))
        if arc != value:
            raise DomainError(
                "closed form %d disagrees with brute-force arc %d" % (value, arc)
            )
    return value


def generalized_spiral(n: int, m: int, eps_rows) -> Diagram:
    """Closure of w_1 w_2 ... w_m with w_i = sigma_1^{e_i1} ... sigma_{n-1}^{e_i,n-1}.

    All exponents must be odd; the closure must be a knot and the resulting
    diagram alternating, otherwise the corresponding error is raised.
    """
    rows = [tuple(row) for row in eps_rows]
    if len(rows) != m:
        raise DomainError("need %d exponent rows, got %d" % (m, len(rows)))
    letters = []
    for row in rows:
        if len(row) != n - 1:
            raise DomainError("each exponent row needs %d entries" % (n - 1))
        if any(e % 2 == 0 for e in row):
            raise DomainError("exponents must all be odd")
        letters.extend((i + 1, e) for i, e in enumerate(row))
    d = braid_closure(BraidWord(n, tuple(letters)))
    if not is_alternating(d):
        raise NotAlternatingError("closure diagram is not alternating")
    return d


# -- full twist insertion -----------------------------------------------------


def insert_full_twists(d: Diagram, region: TwistRegion, k: int) -> Diagram:
    """Add k full twists (2k crossings) extending a twist region.

    The diagram must be alternating and reduced; the new crossings continue
    the region's bigon chain so the result stays alternating and reduced with
    no removable pair.  New crossings are inserted by clasping the two edges
    of the chain's first bigon (for a singleton, the corner-(0,1) edge pair,
    which fixes the twist axis).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if region not in twist_regions(d):
        raise RegionInvalidError("region %r does not belong to the diagram" % (region,))
    if not is_alternating(d):
        raise DomainError("full-twist insertion requires an alternating diagram")
    if not is_reduced(d):
        raise DomainError("full-twist insertion requires a reduced diagram")

    out = d
    for _ in range(k):
        out = _insert_one_full_twist(out, region)
        region = _matching_region(out, region)
    return out


def _matching_region(d: Diagram, old: TwistRegion) -> TwistRegion:
    """After an insertion, find the region containing the old crossing ids."""
    target = set(old.crossings)
    for r in twist_regions(d):
        if target <= set(r.crossings):
            return r
    raise RegionInvalidError("twist region tracking lost after insertion")


def _clasp_edge_pair(d: Diagram, region: TwistRegion) -> tuple[int, int]:
    if len(region.crossings) == 1:
        c = region.crossings[0]
        return d.pd[c][0], d.pd[c][1]
    c1, c2 = region.crossings[0], region.crossings[1]
    # the two edges of the bigon between c1 and c2
    shared = [lbl for lbl in d.pd[c1] if lbl in d.pd[c2]]
    for f in d.faces():
        if len(f) == 2 and {h[0] for h in f} == {c1, c2}:
            labels = tuple(sorted(d.pd[h[0]][h[1]] for h in f))
            return labels
    raise RegionInvalidError("no bigon found between chain crossings %d, %d" % (c1, c2))


def _insert_one_full_twist(d: Diagram, region: TwistRegion) -> Diagram:
    e, f = _clasp_edge_pair(d, region)
    nxt = max(d.edges) + 1
    e_mid, f_mid = nxt, nxt + 1
    e_new, f_new = nxt + 2, nxt + 3

    def ends(lbl):
        """(tail, head) half-edges of an edge along the orientation."""
        hs = [h for h in d._pair if d.pd[h[0]][h[1]] == lbl]
        tail = hs[0] if not d.is_entry(hs[0]) else hs[1]
        head = hs[1] if tail is hs[0] else hs[0]
        return tail, head

    e_tail, e_head = ends(e)
    f_tail, f_head = ends(f)
    e_over_at_x = e_tail[1] not in (1, 3)  # flips the pass state at e's tail

    # x is the clasp crossing nearest e's tail.  Four local layouts are
    # possible (f parallel or antiparallel to e, joining from either side);
    # exactly one yields a planar, consistently oriented, alternating diagram
    # that grows this region, and validation selects it.
    base = [list(row) for row in d.pd]
    base[e_head[0]][e_head[1]] = e_new
    base[f_head[0]][f_head[1]] = f_new
    old = set(region.crossings)
    for parallel in (True, False):
        if parallel:
            fx_in, fx_out, fy_in, fy_out = f, f_mid, f_mid, f_new
        else:
            fx_in, fx_out, fy_in, fy_out = f_mid, f_new, f, f_mid
        for f_west in (True, False):
            rows = [tuple(r) for r in base]
            x = _clasp_tuple(e, e_mid, fx_in, fx_out, e_over_at_x, f_west)
            y = _clasp_tuple(
                e_mid, e_new, fy_in, fy_out, not e_over_at_x, f_west if not parallel else not f_west
            )
            try:
                cand = Diagram(list(rows) + [x, y])
            except Exception:
                continue
            if not (is_alternating(cand) and is_reduced(cand)):
                continue
            grown = any(
                old <= set(r.crossings) and len(r.crossings) >= len(old) + 2
                for r in twist_regions(cand)
            )
            if grown:
                return cand
    raise RegionInvalidError("full twist insertion failed to produce a valid diagram")


def _clasp_tuple(e_in, e_out, f_in, f_out, e_over, f_west):
    """PD tuple for one clasp crossing: strand e runs north to south, strand
    f enters from the west or east.  Slots are counterclockwise from the
    under-strand entry."""
    if e_over:
        if f_west:
            return (f_in, e_out, f_out, e_in)  # under f: W in; ccw W,S,E,N
        return (f_in, e_in, f_out, e_out)  # under f: E in; ccw E,N,W,S
    if f_west:
        return (e_in, f_in, e_out, f_out)  # under e: N in; ccw N,W,S,E
    return (e_in, f_out, e_out, f_in)
