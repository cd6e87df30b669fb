"""Realizability of double-occurrence words (the Gauss code planarity problem).

Two independent routes are provided and cross-checked in the test suite:

* `realizable_word` — an interlacement-graph criterion, O(n^3) bit ops.
* `realizable_brute` — complete the word to a rotation system in every one of
  the 2^n ways and trace faces; exact but exponential, used as the oracle.
"""

from __future__ import annotations


def interlacement(word) -> list[set[int]]:
    """Adjacency sets of the interlacement graph of a double-occurrence word.

    Symbols x, y are interlaced when they appear in the cyclic pattern
    x..y..x..y.  Returns a list indexed by symbol order in `sorted(set(word))`.
    """
    symbols = sorted(set(word))
    index = {s: i for i, s in enumerate(symbols)}
    pos: dict[int, list[int]] = {}
    for i, s in enumerate(word):
        pos.setdefault(s, []).append(i)
    for s, ps in pos.items():
        if len(ps) != 2:
            raise ValueError("symbol %r does not occur exactly twice" % (s,))
    adj: list[set[int]] = [set() for _ in symbols]
    for a in symbols:
        a1, a2 = pos[a]
        for b in symbols:
            if b <= a:
                continue
            b1, b2 = pos[b]
            inside = (a1 < b1 < a2) + (a1 < b2 < a2)
            if inside == 1:
                adj[index[a]].add(index[b])
                adj[index[b]].add(index[a])
    return adj


def realizable_word(word) -> bool:
    """Interlacement criterion for planar realizability of a Gauss sequence.

    A word is realizable iff every vertex of its interlacement graph has even
    degree and every non-adjacent pair of vertices has an even number of
    common neighbours.  Verified exhaustively against `realizable_brute` for
    all words with up to 6 symbols in the tests.
    """
    if not word:
        return True
    adj = interlacement(word)
    m = len(adj)
    for a in range(m):
        if len(adj[a]) % 2:
            return False
    for a in range(m):
        for b in range(a + 1, m):
            if b not in adj[a] and len(adj[a] & adj[b]) % 2:
                return False
    return True


def realizable_brute(word) -> bool:
    """Oracle: try every rotation completion, accept if any traces to genus 0."""
    if not word:
        return True
    word = list(word)
    symbols = sorted(set(word))
    pos: dict[int, list[int]] = {}
    for i, s in enumerate(word):
        pos.setdefault(s, []).append(i)
    for s in symbols:
        if len(pos[s]) != 2:
            raise ValueError("symbol %r does not occur exactly twice" % (s,))
    n = len(symbols)
    two_n = len(word)

    def edge_into(j: int) -> int:
        return two_n if j == 0 else j

    for mask in range(1 << n):
        pd = []
        for k, s in enumerate(symbols):
            j1, j2 = pos[s]
            a_in, a_out = edge_into(j1), edge_into((j1 + 1) % two_n)
            b_in, b_out = edge_into(j2), edge_into((j2 + 1) % two_n)
            if mask >> k & 1:
                pd.append((a_in, b_in, a_out, b_out))
            else:
                pd.append((a_in, b_out, a_out, b_in))
        if count_faces_of_rotation(pd) == n + 2:
            return True
    return False


def count_faces_of_rotation(pd) -> int:
    """Number of face orbits of a rotation system given as PD-style 4-tuples."""
    pair: dict[tuple[int, int], tuple[int, int]] = {}
    where: dict[int, list[tuple[int, int]]] = {}
    for ci, row in enumerate(pd):
        for s, lbl in enumerate(row):
            where.setdefault(lbl, []).append((ci, s))
    for hs in where.values():
        a, b = hs
        pair[a] = b
        pair[b] = a
    seen = set()
    faces = 0
    for h in pair:
        if h in seen:
            continue
        cur = h
        while cur not in seen:
            seen.add(cur)
            nxt = pair[cur]
            cur = (nxt[0], (nxt[1] + 1) % 4)
        faces += 1
    return faces
