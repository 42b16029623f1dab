"""Pure-Python minimal-sufficient-set kernel.

A fire table lists a neuron's output case index for every predecessor
tuple, lexicographic with the last predecessor varying fastest.  A set of
predecessor positions is encoded as a bitmask (bit i = position i).
"""

from itertools import product

MAX_ARITY = 16


def _check(table, actual, radix):
    k = len(actual)
    if k > MAX_ARITY:
        raise ValueError(f"arity {k} exceeds kernel limit {MAX_ARITY}")
    if len(table) != radix ** k:
        raise ValueError("fire table length does not match radix ** arity")
    return k


def agreement_masks(table, actual, radix, target):
    """Distinct masks of positions where a counterexample row agrees with ``actual``.

    A counterexample row is one whose output differs from ``target``.
    """
    k = _check(table, actual, radix)
    seen = set()
    for row, digits in enumerate(product(range(radix), repeat=k)):
        if table[row] == target:
            continue
        m = 0
        for i in range(k):
            if digits[i] == actual[i]:
                m |= 1 << i
        seen.add(m)
    return sorted(seen)


def covered_closure(masks, k):
    """covered[s] is 1 iff s is a subset of some mask."""
    size = 1 << k
    covered = bytearray(size)
    for m in masks:
        covered[m] = 1
    for i in range(k):
        bit = 1 << i
        for s in range(size):
            if s & bit and covered[s]:
                covered[s ^ bit] = 1
    return covered


def minimal_sufficient(table, actual, radix, target):
    """Minimal position sets that, fixed at ``actual``, force ``target``.

    Returned as bitmasks ordered by size, then by mask value.
    """
    k = len(actual)
    covered = covered_closure(agreement_masks(table, actual, radix, target), k)
    out = []
    for s in range(1 << k):
        if covered[s]:
            continue
        minimal = True
        b = s
        while b:
            low = b & -b
            if not covered[s ^ low]:
                minimal = False
                break
            b ^= low
        if minimal:
            out.append(s)
    out.sort(key=lambda s: (bin(s).count("1"), s))
    return out
