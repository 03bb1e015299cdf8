#!/usr/bin/env python3
"""Optional experiment: hunt for smaller overlap-free odd-length words whose
complexity sits strictly below the universal bound.

The known example has length 17 over a 5-letter alphabet.  This scans
smaller alphabets and lengths for overlap-free words of odd length with
A_N < floor(n/2) + 1 and reports what it finds.  Purely exploratory;
nothing here is asserted.
"""

import argparse
from itertools import product

from acx.complexity import an_exact, hyde_bound
from acx.words import Word, is_overlap_free


def overlap_free_words(k: int, n: int):
    """Backtracking enumeration, pruning as soon as an overlap appears."""
    prefix: list[int] = []

    def tail_has_overlap() -> bool:
        m = len(prefix)
        for period in range(1, (m - 1) // 2 + 1):
            start = m - 2 * period - 1
            if start < 0:
                break
            if all(prefix[start + i] == prefix[start + i + period] for i in range(period + 1)):
                return True
        return False

    def rec():
        if len(prefix) == n:
            yield Word(tuple(prefix), k)
            return
        for a in range(k):
            prefix.append(a)
            if not tail_has_overlap():
                yield from rec()
            prefix.pop()

    yield from rec()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=4)
    parser.add_argument("--max-n", type=int, default=13, help="odd lengths up to this")
    parser.add_argument("--limit-per-length", type=int, default=2000)
    args = parser.parse_args()

    for k in range(2, args.max_k + 1):
        for n in range(3, args.max_n + 1, 2):
            bound = hyde_bound(n)
            examined = 0
            hit = None
            for w in overlap_free_words(k, n):
                examined += 1
                if examined > args.limit_per_length:
                    break
                result = an_exact(w)
                if result.value < bound:
                    hit = (w, result.value)
                    break
            if hit:
                w, value = hit
                print(f"k={k} n={n}: {w} has A_N={value} < {bound}  "
                      f"(after {examined} candidates)")
            else:
                print(f"k={k} n={n}: none among the first {examined} overlap-free words")


if __name__ == "__main__":
    main()
