"""Exact nondeterministic automatic complexity.

A_N(w) is the least number of states of an NFA that accepts w with exactly
one accepting walk of length |w|.  The search enumerates path-induced
candidates: a minimal witness can be assumed to consist of exactly the
transitions used along the accepting path, with the path endpoint as the
only final state and every state on the path.  Deleting transitions or
final states never increases the walk count, so the reduction is sound;
it is cross-validated against full transition-relation enumeration at
small sizes.

Canonical numbering removes the relabeling symmetry: the path starts at
state 0 and each newly visited state takes the smallest unused index.
Candidates are enumerated depth first in lexicographic order of the state
sequence, and a prefix is cut as soon as the committed transitions admit
two walks of the prefix length into the current state, because any such
duplicate extends along the committed path suffix into a second accepting
walk.  All comparisons are exact integer arithmetic.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import EmptyBase, NotAPower, SearchExhausted
from .nfa import Nfa, uniquely_accepts
from .words import Rational, Word, as_fraction, contains_alpha_power

_OLD_EDGE = ("old",)


def hyde_bound(n: int) -> int:
    """Universal upper bound floor(n/2) + 1 on A_N for words of length n."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return n // 2 + 1


@dataclass(frozen=True)
class SearchCertificate:
    """Evidence that every smaller candidate was enumerated and rejected.

    search_nodes counts the extensions examined while exhausting the ruled
    out state counts; the level that produced the witness is not included,
    which keeps the number independent of the parallelism degree.
    """

    states_ruled_out: int
    search_nodes: int
    search_mode: str

    def to_json_dict(self) -> dict:
        return {
            "states_ruled_out": self.states_ruled_out,
            "search_nodes": self.search_nodes,
            "search_mode": self.search_mode,
        }


@dataclass(frozen=True)
class ComplexityResult:
    value: int
    witness: Nfa
    certificate: SearchCertificate

    def to_json_dict(self) -> dict:
        from .nfa import to_json_dict as nfa_json

        return {
            "value": self.value,
            "witness": nfa_json(self.witness),
            "certificate": self.certificate.to_json_dict(),
        }


class _LevelSearch:
    """Depth-first scan of canonical q-state path candidates for one word.

    Walk counts live in two bitmasks per path position: states reached by
    at least one walk of that length, and states reached by at least two.
    Committing a transition rebuilds the row stack; reusing one appends a
    single row.  Both keep the prune exact.
    """

    __slots__ = (
        "letters", "n", "q", "in_single", "in_multi", "mult",
        "committed", "rows", "path", "nodes",
    )

    def __init__(self, letters: Sequence[int], q: int):
        self.letters = tuple(letters)
        self.n = len(letters)
        self.q = q
        self.in_single = [0] * q
        self.in_multi = [0] * q
        self.mult = [[0] * q for _ in range(q)]
        self.committed: set[tuple[int, int, int]] = set()
        self.rows: list[tuple[int, int]] = [(1, 0)]
        self.path: list[int] = [0]
        self.nodes = 0

    def _step(self, row: tuple[int, int]) -> tuple[int, int]:
        m1, m2 = row
        r1 = 0
        r2 = 0
        bit = 1
        for a, b in zip(self.in_single, self.in_multi):
            ab = a | b
            if m1 & ab:
                r1 |= bit
                singles = m1 & a
                if (m2 & ab) or (m1 & b) or (singles & (singles - 1)):
                    r2 |= bit
            bit <<= 1
        return r1, r2

    def _extend(self, depth: int, target: int):
        """Commit one step of the path; returns an undo record or None if pruned."""
        source = self.path[depth]
        key = (source, self.letters[depth], target)
        rows = self.rows
        if key in self.committed:
            row = self._step(rows[-1])
            if (row[1] >> target) & 1:
                return None
            rows.append(row)
            self.path.append(target)
            return _OLD_EDGE
        count = self.mult[source][target]
        self.mult[source][target] = count + 1
        bit = 1 << source
        if count == 0:
            self.in_single[target] |= bit
        elif count == 1:
            self.in_single[target] &= ~bit
            self.in_multi[target] |= bit
        self.committed.add(key)
        # rows before the first step that reaches the new edge's source are
        # unaffected by the commit, so only the tail needs rebuilding
        first = 0
        while not rows[first][0] & bit:
            first += 1
        saved = rows[first + 1 :]
        del rows[first + 1 :]
        row = rows[first]
        step = self._step
        for _ in range(depth - first + 1):
            row = step(row)
            rows.append(row)
        if (row[1] >> target) & 1:
            del rows[first + 1 :]
            rows.extend(saved)
            self.committed.discard(key)
            self.mult[source][target] = count
            if count == 0:
                self.in_single[target] &= ~bit
            elif count == 1:
                self.in_multi[target] &= ~bit
                self.in_single[target] |= bit
            return None
        self.path.append(target)
        return (key, saved, count, first)

    def _retract(self, record) -> None:
        self.path.pop()
        if record is _OLD_EDGE:
            self.rows.pop()
            return
        key, saved, count, first = record
        del self.rows[first + 1 :]
        self.rows.extend(saved)
        self.committed.discard(key)
        source, _, target = key
        bit = 1 << source
        self.mult[source][target] = count
        if count == 0:
            self.in_single[target] &= ~bit
        elif count == 1:
            self.in_multi[target] &= ~bit
            self.in_single[target] |= bit

    def _dfs(self, depth: int, max_state: int) -> Optional[tuple[int, ...]]:
        if depth == self.n:
            if max_state == self.q - 1 and not (self.rows[-1][1] >> self.path[-1]) & 1:
                return tuple(self.path)
            return None
        remaining = self.n - depth - 1
        limit = max_state + 1
        if limit > self.q - 1:
            limit = self.q - 1
        for target in range(limit + 1):
            new_max = max_state if target <= max_state else target
            if self.q - 1 - new_max > remaining:
                continue
            self.nodes += 1
            record = self._extend(depth, target)
            if record is None:
                continue
            result = self._dfs(depth + 1, new_max)
            self._retract(record)
            if result is not None:
                return result
        return None

    def run(self) -> tuple[Optional[tuple[int, ...]], int]:
        if self.q > self.n + 1:
            return None, 0
        return self._dfs(0, 0), self.nodes

    def run_from(self, prefix: tuple[int, ...]) -> tuple[Optional[tuple[int, ...]], int]:
        """Search the subtree below a frontier prefix (path including state 0)."""
        if self.q > self.n + 1:
            return None, 0
        max_state = 0
        records = []
        for depth, target in enumerate(prefix[1:]):
            record = self._extend(depth, target)
            if record is None:
                raise RuntimeError(f"frontier prefix {prefix} does not replay")
            records.append(record)
            if target > max_state:
                max_state = target
        result = self._dfs(len(prefix) - 1, max_state)
        for record in reversed(records):
            self._retract(record)
        return result, self.nodes

    def frontier(self, depth_cap: int) -> tuple[list[tuple[int, ...]], int]:
        """Prune-surviving prefixes of the given length, in search order."""
        prefixes: list[tuple[int, ...]] = []

        def walk(depth: int, max_state: int) -> None:
            if depth == depth_cap:
                prefixes.append(tuple(self.path))
                return
            remaining = self.n - depth - 1
            limit = min(max_state + 1, self.q - 1)
            for target in range(limit + 1):
                new_max = max_state if target <= max_state else target
                if self.q - 1 - new_max > remaining:
                    continue
                self.nodes += 1
                record = self._extend(depth, target)
                if record is None:
                    continue
                walk(depth + 1, new_max)
                self._retract(record)

        if self.q <= self.n + 1 and depth_cap < self.n:
            walk(0, 0)
        return prefixes, self.nodes


def _search_level(letters: Sequence[int], q: int) -> tuple[Optional[tuple[int, ...]], int]:
    return _LevelSearch(letters, q).run()


def _parallel_branch(args) -> tuple[Optional[tuple[int, ...]], int]:
    letters, q, prefix = args
    return _LevelSearch(letters, q).run_from(prefix)


def _search_level_parallel(
    letters: Sequence[int], q: int, jobs: int
) -> tuple[Optional[tuple[int, ...]], int]:
    """Fan the subtrees below a frontier out to worker processes.

    Workers exhaust disjoint subtrees; the reduction takes the first hit in
    prefix order, which is the lexicographically least witness, so results
    match the sequential search exactly.
    """
    n = len(letters)
    scout = _LevelSearch(letters, q)
    depth = 1
    prefixes, _ = scout.frontier(depth)
    while len(prefixes) < 4 * jobs and depth < min(n - 1, 8):
        depth += 1
        scout = _LevelSearch(letters, q)
        prefixes, _ = scout.frontier(depth)
    frontier_nodes = scout.nodes
    if len(prefixes) <= 1:
        return _search_level(letters, q)
    tasks = [(tuple(letters), q, prefix) for prefix in prefixes]
    total = frontier_nodes
    found: Optional[tuple[int, ...]] = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for seq, nodes in pool.map(_parallel_branch, tasks, chunksize=1):
            total += nodes
            if found is None and seq is not None:
                found = seq
    return found, total


def _witness_from_path(word: Word, seq: tuple[int, ...], q: int) -> Nfa:
    transitions = frozenset(
        (seq[i], word.letters[i], seq[i + 1]) for i in range(len(word))
    )
    return Nfa(q=q, k=word.k, transitions=transitions, finals=frozenset({seq[-1]}))


def an_exact(
    word: Word,
    *,
    lower_hint: Optional[int] = None,
    upper_hint: Optional[int] = None,
    jobs: int = 1,
) -> ComplexityResult:
    """Exact A_N with a uniquely-accepting witness and exhaustion certificate.

    Levels are searched in ascending state count; the first level with a
    witness is the answer, and the returned witness is the one with the
    lexicographically least canonical state sequence.  upper_hint, when
    given, must be a valid upper bound (for example from power_upper_bound);
    the default ceiling floor(n/2)+1 always admits a witness.
    """
    n = len(word)
    start = max(1, lower_hint if lower_hint is not None else 1)
    ceiling = hyde_bound(n)
    if upper_hint is not None:
        ceiling = min(ceiling, upper_hint)
    letters = word.letters
    exhausted_nodes = 0
    for q in range(start, ceiling + 1):
        if jobs > 1 and n >= 12 and q >= 4:
            seq, nodes = _search_level_parallel(letters, q, jobs)
        else:
            seq, nodes = _search_level(letters, q)
        if seq is None:
            exhausted_nodes += nodes
            continue
        witness = _witness_from_path(word, seq, q)
        if not uniquely_accepts(witness, word):
            raise RuntimeError(f"search produced a bad witness for {word}")
        certificate = SearchCertificate(
            states_ruled_out=q - start,
            search_nodes=exhausted_nodes,
            search_mode="path-induced",
        )
        return ComplexityResult(value=q, witness=witness, certificate=certificate)
    raise SearchExhausted(
        f"no witness with at most {ceiling} states; the given upper_hint was wrong"
    )


def cyclic_witness(x: Word, alpha: Rational) -> Nfa:
    """The v-state cycle NFA for x = z^alpha with |z| = v = |x|/alpha.

    The cycle digraph has one outgoing edge per state, so it has exactly
    one walk of each length from state 0; placing the final state at
    offset |x| mod v makes it accept x uniquely, giving A_N(x) <= v.
    """
    alpha = as_fraction(alpha)
    n = len(x)
    if n == 0:
        raise NotAPower("the empty word has no period prefix")
    if alpha < 1:
        raise NotAPower(f"exponent must be at least 1, got {alpha}")
    v_exact = Fraction(n) / alpha
    if v_exact.denominator != 1:
        raise NotAPower(f"|x|/alpha = {v_exact} is not an integer")
    v = int(v_exact)
    letters = x.letters
    if any(letters[i] != letters[i % v] for i in range(n)):
        raise NotAPower(f"{x} is not a {alpha}-power of its {v}-letter prefix")
    transitions = frozenset((i, letters[i], (i + 1) % v) for i in range(v))
    return Nfa(q=v, k=x.k, transitions=transitions, finals=frozenset({n % v}))


@dataclass(frozen=True)
class PowerBound:
    bound: int
    exponent: Fraction
    witness: Nfa

    def to_json_dict(self) -> dict:
        from .nfa import to_json_dict as nfa_json

        return {
            "bound": self.bound,
            "exponent": str(self.exponent),
            "witness": nfa_json(self.witness),
        }


def power_upper_bound(w: Word) -> PowerBound:
    """Best cyclic upper bound: the least v with w a power of its v-prefix.

    v = |w| always works (exponent 1), so a bound always exists; smaller v
    means a higher exponent and a smaller witness.
    """
    n = len(w)
    if n == 0:
        raise EmptyBase("the empty word has no period prefix")
    letters = w.letters
    for v in range(1, n + 1):
        if all(letters[i] == letters[i % v] for i in range(v, n)):
            alpha = Fraction(n, v)
            return PowerBound(bound=v, exponent=alpha, witness=cyclic_witness(w, alpha))
    raise AssertionError("unreachable: v = n always matches")


def complexity_exceeds(w: Word, c: int) -> bool:
    """True iff A_N(w) > |w|/c, compared exactly in the integers."""
    if c < 1:
        raise ValueError("the ratio denominator c must be at least 1")
    return an_exact(w).value * c > len(w)


def is_an_simple(w: Word) -> bool:
    """True iff A_N(w) is strictly below the universal bound floor(n/2)+1."""
    return an_exact(w).value < hyde_bound(len(w))


def power_bound_implication_holds(w: Word, alpha: Rational) -> bool:
    """Check: A_N(w) <= |w|/alpha implies w contains an alpha-power.

    Holds for every integer alpha >= 1; rational alpha are accepted so the
    known counterexamples slightly above 2 can be probed.
    """
    alpha = as_fraction(alpha)
    if alpha < 1:
        raise ValueError(f"alpha must be at least 1, got {alpha}")
    if an_exact(w).value * alpha <= len(w):
        return contains_alpha_power(w, alpha) is not None
    return True


def full_enumeration_minima(k: int, n_max: int, q_max: int) -> dict[Word, int]:
    """Minimum witness sizes by brute force over every transition relation.

    For each state count q <= q_max, every subset of Q x [k] x Q is tried.
    An automaton whose total accepting-walk count at length n is exactly
    one uniquely accepts exactly one word of length n, namely the word the
    single walk spells, so that word's minimum is recorded.  Returns a map
    from each word of length <= n_max to its least q <= q_max; words absent
    from the map need more than q_max states.  Independent of the
    path-induced search: no canonical form, no pruning.
    """
    if q_max > 3:
        raise ValueError("full enumeration beyond q = 3 is not desk feasible")
    best: dict[tuple[int, ...], int] = {}
    for q in range(1, q_max + 1):
        edges_all = [(p, a, t) for p in range(q) for a in range(k) for t in range(q)]
        n_edges = len(edges_all)
        for mask in range(1 << n_edges):
            edges = []
            m = mask
            while m:
                low = m & -m
                edges.append(edges_all[low.bit_length() - 1])
                m ^= low
            rows = [[0] * q]
            rows[0][0] = 1
            for _ in range(n_max):
                prev = rows[-1]
                step = [0] * q
                for p, _, t in edges:
                    c = prev[p]
                    if c:
                        v = step[t] + c
                        step[t] = v if v < 2 else 2
                rows.append(step)
            for n in range(n_max + 1):
                row = rows[n]
                for f in range(q):
                    if row[f] != 1:
                        continue
                    spelled = _extract_unique_walk(edges, rows, n, f)
                    if spelled not in best:
                        best[spelled] = q
    return {Word(letters, k): q for letters, q in best.items()}


def _extract_unique_walk(edges, rows, n: int, final: int) -> tuple[int, ...]:
    """Read the labels of the single length-n walk ending at ``final``."""
    letters = []
    state = final
    for step in range(n, 0, -1):
        prev_row = rows[step - 1]
        for p, a, t in edges:
            if t == state and prev_row[p] == 1:
                letters.append(a)
                state = p
                break
        else:
            raise AssertionError("unique walk extraction lost the walk")
    letters.reverse()
    return tuple(letters)


def an_exact_full(word: Word, q_cap: int = 3) -> ComplexityResult:
    """A_N by per-word full enumeration; only feasible for tiny words.

    Exists as the independent route for cross-checking the path-induced
    search.  Raises SearchExhausted when the word needs more than q_cap
    states.
    """
    n = len(word)
    letters = word.letters
    k = word.k
    ceiling = min(q_cap, hyde_bound(n))
    exhausted_nodes = 0
    for q in range(1, ceiling + 1):
        edges_all = [(p, a, t) for p in range(q) for a in range(k) for t in range(q)]
        n_edges = len(edges_all)
        if n_edges > 20:
            raise ValueError(f"transition space 2^{n_edges} too large to enumerate")
        found = None
        nodes = 0
        for mask in range(1 << n_edges):
            nodes += 1
            edges = []
            m = mask
            while m:
                low = m & -m
                edges.append(edges_all[low.bit_length() - 1])
                m ^= low
            counts = [0] * q
            counts[0] = 1
            reach = 1
            for a in letters:
                step = [0] * q
                reach_step = 0
                for p, b, t in edges:
                    c = counts[p]
                    if c:
                        v = step[t] + c
                        step[t] = v if v < 2 else 2
                    if b == a and (reach >> p) & 1:
                        reach_step |= 1 << t
                counts = step
                reach = reach_step
            for f in range(q):
                if counts[f] == 1 and (reach >> f) & 1:
                    found = Nfa(
                        q=q, k=k,
                        transitions=frozenset(edges),
                        finals=frozenset({f}),
                    )
                    break
            if found is not None:
                break
        if found is None:
            exhausted_nodes += nodes
            continue
        if not uniquely_accepts(found, word):
            raise RuntimeError("full enumeration produced a bad witness")
        certificate = SearchCertificate(
            states_ruled_out=q - 1,
            search_nodes=exhausted_nodes,
            search_mode="full-enumeration",
        )
        return ComplexityResult(value=q, witness=found, certificate=certificate)
    raise SearchExhausted(f"no witness with at most {ceiling} states")
