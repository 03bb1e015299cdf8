"""Low-complexity words agreeing with prescribed bits at prescribed positions.

The construction: pick a modulus m under which the constrained positions
fall in distinct residue classes, write the prescribed bits into a length-m
template at those residues, and repeat the template to the full length as
a fractional power.  The resulting word is accepted uniquely by an m-state
cycle, so its complexity is at most m.  Number-theoretic support (primorial,
Chebyshev theta, modulus existence bounds) and the exhaustive best-bound
table live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .complexity import an_exact
from .errors import Inconsistent
from .words import Word

WILDCARD = None


def _sieve(limit: int) -> list[int]:
    """Primes up to limit inclusive."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primorial(x: int) -> int:
    """Product of all primes <= x, as an exact integer (empty product is 1)."""
    if x < 1:
        raise ValueError("primorial needs x >= 1")
    return math.prod(_sieve(x))


def chebyshev_theta(x: int) -> float:
    """Sum of ln p over primes p <= x; equals ln of the primorial."""
    if x < 1:
        raise ValueError("theta needs x >= 1")
    return sum(math.log(p) for p in _sieve(x))


def rosser_check(x: float) -> bool:
    """The classical lower bound x(1 - 1/ln x) < theta(x), valid for x >= 41."""
    if x < 41:
        raise ValueError("the bound is only asserted for x >= 41")
    return x * (1 - 1 / math.log(x)) < chebyshev_theta(int(x))


def rosser_sweep(lo: int, hi: int) -> list[int]:
    """Integers in [lo, hi] violating the theta lower bound (expected: none).

    Shares one sieve across the sweep instead of re-sieving per point.
    """
    if lo < 41:
        raise ValueError("the bound is only asserted for x >= 41")
    primes = _sieve(hi)
    failures = []
    theta = 0.0
    idx = 0
    for x in range(2, hi + 1):
        if idx < len(primes) and primes[idx] == x:
            theta += math.log(x)
            idx += 1
        if x >= lo and not x * (1 - 1 / math.log(x)) < theta:
            failures.append(x)
    return failures


def _validate_positions(positions: Sequence[int]) -> tuple[int, ...]:
    positions = tuple(positions)
    for i, a in enumerate(positions):
        if a < 0:
            raise ValueError(f"positions must be nonnegative, got {a}")
        if i and positions[i - 1] >= a:
            raise ValueError(f"positions must be strictly increasing, got {positions}")
    return positions


@dataclass(frozen=True)
class ModulusSearch:
    smallest_integer: int
    smallest_prime: int


def find_modulus(positions: Sequence[int]) -> ModulusSearch:
    """Least modulus (and least prime modulus) separating the positions.

    Ascending trial division; any m greater than the largest position keeps
    the positions distinct, so both searches terminate unconditionally.
    """
    positions = _validate_positions(positions)

    def distinct(m: int) -> bool:
        return len({a % m for a in positions}) == len(positions)

    m = 1
    while not distinct(m):
        m += 1
    p = 2
    while not (_is_prime(p) and distinct(p)):
        p += 1
    return ModulusSearch(smallest_integer=m, smallest_prime=p)


def residues(positions: Sequence[int], m: int) -> list[int]:
    """The positions reduced mod m, in input order."""
    if m < 1:
        raise ValueError("modulus must be positive")
    return [a % m for a in _validate_positions(positions)]


@dataclass(frozen=True)
class PositionConstraint:
    """Prescribed letters at strictly increasing positions inside [0, n)."""

    n: int
    positions: tuple[int, ...]
    bits: tuple[int, ...]
    k: int = 2

    def __post_init__(self):
        object.__setattr__(self, "positions", _validate_positions(self.positions))
        object.__setattr__(self, "bits", tuple(self.bits))
        if self.n < 0:
            raise ValueError("word length must be nonnegative")
        if self.k < 1:
            raise ValueError("alphabet size must be positive")
        if len(self.positions) != len(self.bits):
            raise ValueError(
                f"{len(self.positions)} positions but {len(self.bits)} bits"
            )
        if self.positions and self.positions[-1] >= self.n:
            raise ValueError(
                f"position {self.positions[-1]} outside a length-{self.n} word"
            )
        for b in self.bits:
            if not 0 <= b < self.k:
                raise ValueError(f"prescribed letter {b} outside alphabet [0, {self.k})")


@dataclass(frozen=True)
class ModularWitness:
    """A modulus, a wildcard template, and the repeated word it generates."""

    modulus: int
    template: tuple[Optional[int], ...]
    word: Word
    bound: int

    @property
    def template_text(self) -> str:
        return "".join("?" if c is WILDCARD else str(c) for c in self.template)

    def to_json_dict(self) -> dict:
        return {
            "m": self.modulus,
            "z_template": self.template_text,
            "x": str(self.word),
            "bound": self.bound,
        }


def build_low_complexity_word(
    constraint: PositionConstraint,
    mode: str = "smallest_integer",
    *,
    allow_shared_residue: bool = False,
    fill: Optional[int] = 0,
) -> ModularWitness:
    """A word of length n matching the constraint with complexity at most m.

    mode picks the modulus: the least separating integer or the least
    separating prime.  With allow_shared_residue, a modulus is also accepted
    when colliding positions prescribe the same letter (a strict extension
    of the separation condition, off by default).  Template cells not fixed
    by any constraint are wildcards; they concretize to ``fill`` (letter 0
    by default), or to a fresh letter k when fill is None.
    """
    if mode not in ("smallest_integer", "smallest_prime"):
        raise ValueError(f"unknown modulus mode {mode!r}")

    def template_for(m: int) -> Optional[list[Optional[int]]]:
        cells: list[Optional[int]] = [WILDCARD] * m
        for a, b in zip(constraint.positions, constraint.bits):
            r = a % m
            if cells[r] is not WILDCARD and cells[r] != b:
                return None
            cells[r] = b
        return cells

    if allow_shared_residue:
        m = 1 if mode == "smallest_integer" else 2
        while (mode == "smallest_prime" and not _is_prime(m)) or template_for(m) is None:
            m += 1
    else:
        search = find_modulus(constraint.positions)
        m = search.smallest_integer if mode == "smallest_integer" else search.smallest_prime
    cells = template_for(m)
    if cells is None:
        raise Inconsistent(f"conflicting letters inside a residue class mod {m}")

    if fill is None:
        fill_letter = constraint.k
        word_k = constraint.k + 1
    else:
        if not 0 <= fill < constraint.k:
            raise ValueError(f"fill letter {fill} outside alphabet [0, {constraint.k})")
        fill_letter = fill
        word_k = constraint.k
    letters = tuple(
        cells[i % m] if cells[i % m] is not WILDCARD else fill_letter
        for i in range(constraint.n)
    )
    return ModularWitness(
        modulus=m,
        template=tuple(cells),
        word=Word(letters, word_k),
        bound=m,
    )


def theoretical_bound(c: int, n: float) -> float:
    """C(c,2) * ln(n): the asymptotic modulus bound, reported but not asserted."""
    if c < 2:
        raise ValueError("the bound needs at least two constrained positions")
    if n <= 1:
        raise ValueError("the bound needs n > 1")
    return math.comb(c, 2) * math.log(n)


@dataclass(frozen=True)
class AvgGapReport:
    average: float
    bound: float
    ok: bool


def avg_gap_check(values: Sequence[float]) -> AvgGapReport:
    """Average pairwise gap of an increasing tuple against c/(2(c-1)) * span.

    Arithmetic is exact (floats convert to Fractions losslessly), so the
    comparison never wobbles at the boundary.
    """
    c = len(values)
    if c < 2:
        raise ValueError("need at least two values")
    exact = [Fraction(v) for v in values]
    for x, y in zip(exact, exact[1:]):
        if x >= y:
            raise ValueError("values must be strictly increasing")
    total = sum(y - x for i, x in enumerate(exact) for y in exact[i + 1 :])
    average = total / math.comb(c, 2)
    bound = Fraction(c, 2 * (c - 1)) * (exact[-1] - exact[0])
    return AvgGapReport(average=float(average), bound=float(bound), ok=average <= bound)


def exact_values_binary(n: int) -> list[int]:
    """A_N over all binary words of length n, indexed by bitmask (LSB first)."""
    values = []
    for index in range(1 << n):
        letters = tuple((index >> i) & 1 for i in range(n))
        values.append(an_exact(Word(letters, 2)).value)
    return values


def table_best_bound(c_max: int, n_max: int) -> list[list[Optional[int]]]:
    """Worst-case best achievable complexity under c binary constraints.

    Entry (c, n) is the maximum over position sets and prescribed bits of
    the minimum complexity among binary words of length n matching them.
    Entries with c > n are undefined (None).  Row c = 0 is the unconstrained
    minimum, which the constant word always makes 1.
    """
    from itertools import combinations

    table: list[list[Optional[int]]] = [
        [None] * (n_max + 1) for _ in range(c_max + 1)
    ]
    for n in range(n_max + 1):
        values = exact_values_binary(n)
        for c in range(min(c_max, n) + 1):
            worst = 0
            for positions in combinations(range(n), c):
                posmask = 0
                for p in positions:
                    posmask |= 1 << p
                group_min: dict[int, int] = {}
                for index, value in enumerate(values):
                    key = index & posmask
                    if key not in group_min or value < group_min[key]:
                        group_min[key] = value
                worst = max(worst, max(group_min.values()))
            table[c][n] = worst
    return table


def format_table(table: list[list[Optional[int]]]) -> str:
    """Aligned text rendering with '-' for undefined entries."""
    n_max = len(table[0]) - 1
    lines = ["c\\n  " + " ".join(f"{n:>2}" for n in range(n_max + 1))]
    for c, row in enumerate(table):
        cells = " ".join(f"{v:>2}" if v is not None else " -" for v in row)
        lines.append(f"{c:>3}  {cells}")
    return "\n".join(lines) + "\n"


def table_csv(table: list[list[Optional[int]]]) -> str:
    n_max = len(table[0]) - 1
    lines = ["c/n," + ",".join(str(n) for n in range(n_max + 1))]
    for c, row in enumerate(table):
        cells = ",".join(str(v) if v is not None else "-" for v in row)
        lines.append(f"{c},{cells}")
    return "\n".join(lines) + "\n"
