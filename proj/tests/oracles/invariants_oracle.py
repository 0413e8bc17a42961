"""Brute-force oracle for the partition combinatorics.

Enumerates every subset of the sign group directly (no basis, no search) and
prints a C++ table of pairs with their admissible-partition count, m and
witness. Run: python3 invariants_oracle.py > ../../src/invariants_corpus.inc
"""
import itertools
import random
from fractions import Fraction


def sign_group(w1, w2):
    size = len(w1)
    out = []
    for mask in range(1 << size):
        minus = [i for i in range(size) if mask >> i & 1]
        if sum(w1[i] for i in minus) % 2 == 0 and sum(w2[i] for i in minus) % 2 == 0:
            out.append(mask)
    return out


def refinement(size, masks):
    profile = {}
    for i in range(size):
        key = tuple(m >> i & 1 for m in masks)
        profile.setdefault(key, []).append(i)
    return tuple(sorted(tuple(b) for b in profile.values()))


def admissible(w1, w2):
    e = [m for m in sign_group(w1, w2) if m != 0]
    size = len(w1)
    seen = set()
    for r in range(len(e) + 1):
        for subset in itertools.combinations(e, r):
            seen.add(refinement(size, subset))
    return seen


def derived(w1, w2):
    s1, s2 = sum(w1), sum(w2)
    return [Fraction(b) - Fraction(s2, s1) * a for a, b in zip(w1, w2)]


def essential(partition, v):
    if any(sum(v[i] for i in block) != 0 for block in partition):
        return None
    return sum(len(b) - 1 for b in partition if any(v[i] != 0 for i in b))


def valid(w1, w2):
    if not any(w1) or not any(w2):
        return False
    if list(w1) != sorted(w1, reverse=True) or list(w2) != sorted(w2, reverse=True):
        return False
    if sum(w1) <= 0 or sum(w2) > 0:
        return False
    return any(x != 0 for x in derived(w1, w2))


def main():
    rng = random.Random(20240611)
    pairs = []
    while len(pairs) < 100:
        size = rng.randint(2, 6)
        w1 = sorted((rng.randint(-3, 3) for _ in range(size)), reverse=True)
        w2 = sorted((rng.randint(-3, 3) for _ in range(size)), reverse=True)
        if valid(w1, w2):
            pairs.append((w1, w2))
    print("// Generated by tests/oracles/invariants_oracle.py. Do not edit.")
    print("// {w1, w2, admissible partition count, m, witness (1-based blocks)}")
    for w1, w2 in pairs:
        adm = admissible(w1, w2)
        v = derived(w1, w2)
        best = min((essential(p, v), p) for p in adm if essential(p, v) is not None)
        witness = "[" + ",".join("[" + ",".join(str(i + 1) for i in b) + "]" for b in best[1]) + "]"
        print('{{%s}, {%s}, %d, %d, "%s"},' % (",".join(map(str, w1)), ",".join(map(str, w2)),
                                            len(adm), best[0], witness))


if __name__ == "__main__":
    main()
