"""Independent counts for dimension-2 lattices between p^2 L0 and p^-2 L0.

After scaling by p^2 these are the integer lattices between p^4 Z^2 and Z^2,
in Hermite form [[p^a, b], [0, p^c]] with 0 <= b < p^a. Counts the lattices,
those fixed by diag(1, -1) and those equal to the sum of their coordinate
intersections.
"""


def window(p):
    total = fixed = split = fixed_not_split = 0
    for a in range(5):
        for c in range(5):
            for b in range(p ** a):
                # p^4 e2 must lie in the lattice.
                if (b * p ** (4 - c)) % p ** a:
                    continue
                total += 1
                is_fixed = (2 * b) % p ** a == 0
                is_split = b == 0
                fixed += is_fixed
                split += is_split
                fixed_not_split += is_fixed and not is_split
    return total, fixed, split, fixed_not_split

for p in (2, 3):
    print(p, window(p))
