#!/usr/bin/env python3
"""Run every verification suite and print one line per check.

Exits nonzero if any hard check fails.
"""

import sys
from itertools import product

from acx.experiments import (
    oracle_cross_check,
    sandwich_check,
    shuffle_family_check,
    verify_reference_word,
)
from acx.modular import rosser_sweep
from acx.words import apply_morphism, brandenburg, contains_square, enumerate_squarefree


def main() -> int:
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures += 1

    report = verify_reference_word()
    check("reference word (fixture, loop counts, exact search)", report["clause_c_exact_value"] == 8)

    m = brandenburg()
    preserved = all(
        contains_square(apply_morphism(m, u)) is None
        for n in range(7)
        for u in enumerate_squarefree(3, n)
    )
    check("squarefree-preserving morphism on words up to length 6", preserved)

    family = shuffle_family_check(8)
    check("shuffle family interchange and square structure (n=8)", family["ok"])

    oracle = oracle_cross_check(n_max=6)
    check(f"search vs full enumeration ({oracle.checked} words)", oracle.ok)

    sandwich = sandwich_check(7)
    check(f"square/repetitive sandwich ({sandwich.checked} ternary words)", sandwich.ok)

    check("theta lower bound sweep to 10^5", rosser_sweep(41, 10**5) == [])

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
