"""Dev check: compare interlacement-criterion variants with the brute oracle."""

import itertools
import sys

sys.path.insert(0, "src")

from straightknot.planarity import interlacement, realizable_brute


def words(n):
    """All double-occurrence words on symbols 1..n starting with symbol 1."""
    slots = 2 * n
    base = []
    for multiset in itertools.permutations(list(range(1, n + 1)) * 2):
        if multiset[0] != 1:
            continue
        first = {}
        ok = True
        for i, s in enumerate(multiset):
            if s not in first:
                first[s] = i
        # canonical: symbols appear first in increasing order (cuts duplicates)
        order = sorted(first, key=first.get)
        if order != sorted(order):
            continue
        base.append(multiset)
    return set(base)


def variant(word, adj_rule, nonadj_rule):
    adj = interlacement(word)
    m = len(adj)
    for a in range(m):
        if len(adj[a]) % 2:
            return False
    for a in range(m):
        for b in range(a + 1, m):
            common = len(adj[a] & adj[b]) % 2
            if b in adj[a]:
                if adj_rule is not None and common != adj_rule:
                    return False
            else:
                if nonadj_rule is not None and common != nonadj_rule:
                    return False
    return True


def main():
    rules = {
        "adj-odd nonadj-even": (1, 0),
        "adj-any nonadj-even": (None, 0),
        "adj-odd nonadj-any": (1, None),
        "deg-only": (None, None),
        "adj-even nonadj-even": (0, 0),
    }
    for n in range(1, 6):
        ws = words(n)
        results = {}
        for name, (ar, nr) in rules.items():
            ok = bad = 0
            mismatches = []
            for w in ws:
                b = realizable_brute(w)
                v = variant(w, ar, nr)
                if b == v:
                    ok += 1
                else:
                    bad += 1
                    if len(mismatches) < 3:
                        mismatches.append((w, b, v))
            results[name] = (ok, bad, mismatches)
        print(f"n={n}  words={len(ws)}")
        for name, (ok, bad, mm) in results.items():
            print(f"  {name:24s} ok={ok} bad={bad} {mm if bad else ''}")


if __name__ == "__main__":
    main()
