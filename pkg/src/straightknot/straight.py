"""Straight-position diagrams as combinatorial codes.

A straight code is a horizontal strand through crossings 1..n (left to
right, strand endpoints at 0 and n+1) plus a simple wandering arc that runs
from the right strand end back to the left one.  The arc is recorded by the
order it meets the crossings (`visits`), the side of the strand each
connector arch lies on (`sides`, True = upper), and one bit per position
saying whether the strand passes over there (`overs`).

Same-side connectors must form a noncrossing arch system; since consecutive
connectors share a crossing point, valid side words alternate, and the whole
wandering arc meets the axis only at the crossings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import Diagram
from .errors import CrossingArchesError, NotPermutationError

UPPER = True
LOWER = False


@dataclass(frozen=True)
class ShadowCode:
    """A straight code without over/under data."""

    n: int
    visits: tuple[int, ...]
    sides: tuple[bool, ...]

    def connectors(self) -> list[tuple[int, int]]:
        pts = [self.n + 1] + list(self.visits) + [0]
        return [(pts[j], pts[j + 1]) for j in range(self.n + 1)]


@dataclass(frozen=True)
class StraightCode:
    """A straight-position diagram code; see the module docstring."""

    n: int
    visits: tuple[int, ...]
    sides: tuple[bool, ...]
    overs: tuple[bool, ...]

    def shadow(self) -> ShadowCode:
        return ShadowCode(self.n, self.visits, self.sides)

    def connectors(self) -> list[tuple[int, int]]:
        return self.shadow().connectors()

    def serialize(self) -> str:
        """Text format v1: `n; v1 .. vn; s0s1...sn; b1...bn`."""
        return "%d; %s; %s; %s" % (
            self.n,
            " ".join(str(v) for v in self.visits),
            "".join("U" if s else "D" for s in self.sides),
            "".join("1" if b else "0" for b in self.overs),
        )

    @classmethod
    def parse(cls, text: str) -> "StraightCode":
        parts = [p.strip() for p in text.split(";")]
        if len(parts) != 4:
            raise ValueError("straight code text needs 4 ';'-separated fields")
        n = int(parts[0])
        visits = tuple(int(x) for x in parts[1].split()) if parts[1] else ()
        if any(ch not in "UD" for ch in parts[2]):
            raise ValueError("side word may contain only U and D")
        sides = tuple(ch == "U" for ch in parts[2])
        if any(ch not in "01" for ch in parts[3]):
            raise ValueError("over word may contain only 0 and 1")
        overs = tuple(ch == "1" for ch in parts[3])
        if len(visits) != n or len(sides) != n + 1 or len(overs) != n:
            raise ValueError("field lengths inconsistent with n=%d" % n)
        return validate_straight(cls(n, visits, sides, overs))


def _check_shadow(n: int, visits, sides) -> None:
    if sorted(visits) != list(range(1, n + 1)):
        raise NotPermutationError("visits %r is not a permutation of 1..%d" % (visits, n))
    if len(sides) != n + 1:
        raise NotPermutationError("need %d connector sides, got %d" % (n + 1, len(sides)))
    pts = [n + 1] + list(visits) + [0]
    arches: dict[bool, list[tuple[int, int]]] = {UPPER: [], LOWER: []}
    for j in range(n + 1):
        a, b = pts[j], pts[j + 1]
        lo, hi = min(a, b), max(a, b)
        for c, d in arches[sides[j]]:
            if lo == c or lo == d or hi == c or hi == d:
                raise CrossingArchesError(
                    "connectors (%d,%d) and (%d,%d) touch on the same side"
                    % (lo, hi, c, d)
                )
            if c < lo < d < hi or lo < c < hi < d:
                raise CrossingArchesError(
                    "connectors (%d,%d) and (%d,%d) interleave on the same side"
                    % (lo, hi, c, d)
                )
        arches[sides[j]].append((lo, hi))


def validate_shadow(code: ShadowCode) -> ShadowCode:
    _check_shadow(code.n, code.visits, code.sides)
    return code


def validate_straight(code: StraightCode) -> StraightCode:
    """Check all straight-code invariants; return the code unchanged."""
    _check_shadow(code.n, code.visits, code.sides)
    if len(code.overs) != code.n:
        raise NotPermutationError("need %d over bits, got %d" % (code.n, len(code.overs)))
    return code


# -- reconstruction --------------------------------------------------------------


def straight_to_diagram(code: StraightCode) -> Diagram:
    """Rebuild the PD diagram of a straight code.

    Edge labeling is deterministic: strand edges first, left to right
    (edge i runs from position i-1 to position i; the two end edges continue
    into the first and last connectors), then the arc edges between
    consecutive visits.
    """
    n = code.n
    if n == 0:
        return Diagram(())
    validate_straight(code)
    # connector j (0..n) carries an edge label: connector 0 is edge n+1
    # (through the right end), connector n is edge 1 (through the left end),
    # connector j in between is edge n+1+j.
    def connector_edge(j: int) -> int:
        if j == 0:
            return n + 1
        if j == n:
            return 1
        return n + 1 + j

    visit_index = {p: k for k, p in enumerate(code.visits, start=1)}
    pd = []
    for p in range(1, n + 1):
        k = visit_index[p]
        a_in = connector_edge(k - 1)
        a_out = connector_edge(k)
        e_in, e_out = p, p + 1
        from_above = code.sides[k - 1]
        if code.overs[p - 1]:
            if from_above:
                pd.append((a_in, e_in, a_out, e_out))
            else:
                pd.append((a_in, e_out, a_out, e_in))
        else:
            if from_above:
                pd.append((e_in, a_out, e_out, a_in))
            else:
                pd.append((e_in, a_in, e_out, a_out))
    d = Diagram(pd)
    from .diagram import straight_decomposable

    assert straight_decomposable(d) is not None
    return d


# -- symmetry group and canonical forms -------------------------------------------


def _apply_h(code: StraightCode) -> StraightCode:
    """Left-right flip: position i -> n+1-i, arc re-read from the new right end."""
    n = code.n
    visits = tuple(n + 1 - v for v in reversed(code.visits))
    sides = tuple(reversed(code.sides))
    overs = tuple(reversed(code.overs))
    return StraightCode(n, visits, sides, overs)


def _apply_v(code: StraightCode) -> StraightCode:
    """Upper-lower flip of the connector arches."""
    return StraightCode(code.n, code.visits, tuple(not s for s in code.sides), code.overs)


def _code_key(code: StraightCode):
    return (code.visits, code.sides, code.overs)


def symmetry_orbit(code: StraightCode) -> list[StraightCode]:
    """Closure of the code under the two flip involutions (order <= 4).

    The group is generated by the horizontal flip (rotate the picture about
    a vertical axis) and the vertical flip (reflect across the strand); both
    map straight diagrams to straight diagrams of the same knot up to mirror
    image, which is all the identification quotient may merge.  Their product
    is the in-plane half-turn.
    """
    seen = {_code_key(code): code}
    frontier = [code]
    while frontier:
        cur = frontier.pop()
        for gen in (_apply_h, _apply_v):
            img = gen(cur)
            k = _code_key(img)
            if k not in seen:
                seen[k] = img
                frontier.append(img)
    return [seen[k] for k in sorted(seen)]


def canonicalize(code: StraightCode) -> StraightCode:
    """Orbit-minimal representative under the symmetry group; idempotent."""
    validate_straight(code)
    return symmetry_orbit(code)[0]


def _shadow_orbit_key(n, visits, sides):
    """Minimal (visits, sides) over the symmetry group acting on shadows."""
    best = None
    seen = set()
    frontier = [(visits, sides)]
    while frontier:
        v, s = frontier.pop()
        if (v, s) in seen:
            continue
        seen.add((v, s))
        if best is None or (v, s) < best:
            best = (v, s)
        frontier.append((tuple(n + 1 - x for x in reversed(v)), tuple(reversed(s))))
        frontier.append((v, tuple(not x for x in s)))
    return best, seen


# -- enumeration -------------------------------------------------------------------


def _valid_side_words(n: int, visits) -> list[tuple[bool, ...]]:
    """All arch-valid side words for a visit permutation.

    Touching counts as crossing, so only the two alternating words can
    survive; both are checked against the noncrossing condition.
    """
    out = []
    for first in (UPPER, LOWER):
        sides = tuple((first if j % 2 == 0 else not first) for j in range(n + 1))
        try:
            _check_shadow(n, visits, sides)
        except (CrossingArchesError, NotPermutationError):
            continue
        out.append(sides)
    return out


def _shadow_search(n: int):
    """Backtracking enumeration of all valid shadows (not yet canonicalized).

    Visits are placed one at a time with incremental noncrossing checks and a
    dead-position prune: an unvisited position strictly covered by arches on
    both sides can never be reached again.
    """
    results: list[tuple[tuple[int, ...], tuple[bool, ...]]] = []
    for first_side in (UPPER, LOWER):
        visits: list[int] = []
        arches: dict[bool, list[tuple[int, int]]] = {UPPER: [], LOWER: []}
        cover = {UPPER: [0] * (n + 2), LOWER: [0] * (n + 2)}
        used = [False] * (n + 2)

        def side_of(j: int) -> bool:
            return first_side if j % 2 == 0 else not first_side

        def arch_ok(lo: int, hi: int, side: bool) -> bool:
            for c, d in arches[side]:
                if lo == c or lo == d or hi == c or hi == d:
                    return False
                if c < lo < d < hi or lo < c < hi < d:
                    return False
            return True

        def push(lo: int, hi: int, side: bool):
            arches[side].append((lo, hi))
            for p in range(lo + 1, hi):
                cover[side][p] += 1

        def pop(lo: int, hi: int, side: bool):
            arches[side].pop()
            for p in range(lo + 1, hi):
                cover[side][p] -= 1

        def dead_prefix() -> bool:
            for p in range(1, n + 1):
                if not used[p] and cover[UPPER][p] and cover[LOWER][p]:
                    return True
            return False

        def extend(k: int):
            # k visits already placed; previous point:
            prev = visits[-1] if visits else n + 1
            if k == n:
                side = side_of(n)
                lo, hi = 0, prev
                if arch_ok(lo, hi, side):
                    results.append((tuple(visits), tuple(side_of(j) for j in range(n + 1))))
                return
            side = side_of(k)
            for p in range(1, n + 1):
                if used[p]:
                    continue
                lo, hi = min(p, prev), max(p, prev)
                if not arch_ok(lo, hi, side):
                    continue
                used[p] = True
                visits.append(p)
                push(lo, hi, side)
                if not dead_prefix():
                    extend(k + 1)
                pop(lo, hi, side)
                visits.pop()
                used[p] = False

        extend(0)
    return results


def enumerate_shadows(n: int):
    """All valid shadows with n crossings, one per symmetry orbit, sorted."""
    if n < 1:
        raise ValueError("n must be at least 1")
    canonical = {}
    for visits, sides in _shadow_search(n):
        key, _ = _shadow_orbit_key(n, visits, sides)
        if key not in canonical:
            canonical[key] = ShadowCode(n, key[0], key[1])
    for key in sorted(canonical):
        yield canonical[key]


def shadow_is_reducible(shadow: ShadowCode) -> bool:
    """True when some crossing is removable by untwisting, at the shadow level.

    In the doubled word [1..n, visits] a crossing is nugatory exactly when
    its chord interlaces no other chord; any over/under assignment over such
    a shadow reduces to a smaller straight diagram.
    """
    n = shadow.n
    word = list(range(1, n + 1)) + list(shadow.visits)
    pos: dict[int, list[int]] = {}
    for i, s in enumerate(word):
        pos.setdefault(s, []).append(i)
    for c in range(1, n + 1):
        c1, c2 = pos[c]
        isolated = True
        for other in range(1, n + 1):
            if other == c:
                continue
            inside = sum(1 for p in pos[other] if c1 < p < c2)
            if inside == 1:
                isolated = False
                break
        if isolated:
            return True
    return False


def _r2_pairs(shadow: ShadowCode) -> list[tuple[int, int]]:
    """Adjacent-position pairs joined by an empty-span connector (bigons)."""
    pairs = []
    for a, b in shadow.connectors():
        lo, hi = min(a, b), max(a, b)
        if hi - lo == 1 and 1 <= lo and hi <= shadow.n:
            pairs.append((lo, hi))
    return pairs


def enumerate_straight(n: int, *, prune_r1: bool = True, prune_r2: bool = True):
    """All straight codes with n crossings, one per symmetry orbit.

    Prunes are sound: every skipped code reduces to a straight code with
    fewer crossings, so iterating n upward never misses a minimum.
    prune_r1 skips whole shadows containing an untwistable crossing;
    prune_r2 skips over-assignments where an empty-span bigon is removable.
    """
    for shadow in enumerate_shadows(n):
        if prune_r1 and shadow_is_reducible(shadow):
            continue
        yield from straight_codes_for_shadow(shadow, prune_r2=prune_r2)


def straight_codes_for_shadow(shadow: ShadowCode, *, prune_r2: bool = True):
    """Orbit-canonical over/under assignments for one canonical shadow."""
    n = shadow.n
    perms = _shadow_stabilizer_actions(shadow)
    r2 = _r2_pairs(shadow) if prune_r2 else []
    for bits in itertools.product((False, True), repeat=n):
        if any(bits[a - 1] == bits[b - 1] for a, b in r2):
            continue
        canonical = min(tuple(bits[i] for i in perm) for perm in perms)
        if bits != canonical:
            continue
        yield StraightCode(n, shadow.visits, shadow.sides, tuple(bits))


def _shadow_stabilizer_actions(shadow: ShadowCode) -> list[tuple[int, ...]]:
    """Position permutations of group elements fixing this shadow.

    Each returned tuple perm satisfies: transformed_overs[i] = overs[perm[i]].
    """
    n = shadow.n
    marker = StraightCode(n, shadow.visits, shadow.sides, tuple(range(n)))  # type: ignore[arg-type]
    perms = set()
    seen = {}
    frontier = [marker]
    while frontier:
        cur = frontier.pop()
        key = (cur.visits, cur.sides, cur.overs)
        if key in seen:
            continue
        seen[key] = cur
        for gen in (_apply_h, _apply_v):
            frontier.append(gen(cur))
    for (v, s, o), _ in seen.items():
        if v == shadow.visits and s == shadow.sides:
            perms.add(tuple(o))
    return sorted(perms)


# -- code-level full twists (used by the template witness) -------------------------


def insert_full_twist_at(code: StraightCode, p: int) -> StraightCode:
    """Insert one full twist on the strand just right of position p.

    Two new crossings appear at positions p+1, p+2 (everything past p is
    shifted); the arc detours through them with empty-span connectors, so the
    new crossings extend p's twist chain with alternating over bits.
    """
    n = code.n
    if not 1 <= p <= n:
        raise ValueError("position %d out of range" % p)

    def shift(q: int) -> int:
        return q + 2 if q > p else q

    k = code.visits.index(p) + 1  # connector k leaves position p
    visits = [shift(v) for v in code.visits]
    visits[k - 1 : k] = [p, p + 1, p + 2]
    sides = list(code.sides)
    leave = sides[k]
    sides[k:k] = [leave, not leave]
    overs = list(code.overs)
    overs[p:p] = [not overs[p - 1], overs[p - 1]]
    return validate_straight(
        StraightCode(n + 2, tuple(visits), tuple(sides), tuple(overs))
    )
