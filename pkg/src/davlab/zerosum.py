"""Exact zero-sum invariants by reachable-set search.

The ordered Davenport constant D(G) is 1 plus the longest sequence with no
nonempty index-increasing subsequence multiplying to the identity. The set
of all such subsequence products of a prefix (the reach set, stored as an
int bit mask) is a sufficient statistic: extending by g maps S to
S | S*g | {g}. The search is a memoized longest-path walk on reach sets,
which terminates because an identity-free extension strictly grows the set.

Variants reuse the same skeleton with richer states: per-length product sets
for E(G), weighted extension rows for D_A(G), and a verifier-driven DFS over
multisets for the unordered constant D'(G).
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass

from .errors import (BudgetExceededError, DavlabError, GroupTooLargeError,
                     InvalidWeightsError)
from .groups import FiniteGroup

DEFAULT_ORDERED_CAP = 64
DEFAULT_UNORDERED_CAP = 16
DEFAULT_EG_CAP = 8
DEFAULT_ARRANGE_CAP = 16


@dataclass(frozen=True)
class Sequence:
    """An ordered sequence of group elements (repetition allowed)."""

    group: FiniteGroup
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def labels(self) -> list[str]:
        return [self.group.labels[g] for g in self.terms]

    def compact(self) -> str:
        """Run-length display, e.g. 'y^3 x' for (y, y, y, x)."""
        out = []
        for g, run in itertools.groupby(self.terms):
            n = len(list(run))
            lab = self.group.labels[g]
            piece = lab if n == 1 else f"({lab})^{n}"
            out.append(piece)
        return " ".join(out) if out else "(empty)"


@dataclass
class SearchBudget:
    max_states: int = 10_000_000
    max_seconds: float = 60.0


@dataclass
class SearchResult:
    value: int
    witness: Sequence
    states_explored: int
    elapsed: float
    exact: bool


class _BudgetHit(Exception):
    pass


class _Clock:
    """Cheap cooperative budget checks inside recursive searches."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.start = time.perf_counter()
        self._n = 0

    def tick(self, states: int) -> None:
        self._n += 1
        if states > self.budget.max_states:
            raise _BudgetHit
        if self._n & 1023 == 0 and self.elapsed() > self.budget.max_seconds:
            raise _BudgetHit

    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def _succ_rows(group: FiniteGroup) -> list[list[int]]:
    """succ[g][x] is the bit of x*g; used to map reach sets under extension."""
    table = group.table
    n = group.order
    return [[1 << table[x][g] for x in range(n)] for g in range(n)]


def _mapped(mask: int, row: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= row[low.bit_length() - 1]
        mask ^= low
    return out


# --- reach states -------------------------------------------------------------

@dataclass(frozen=True)
class ReachState:
    """Products of all nonempty index-increasing subsequences of a prefix."""

    group: FiniteGroup
    mask: int = 0

    def products(self) -> set[int]:
        out = set()
        m = self.mask
        while m:
            low = m & -m
            out.add(low.bit_length() - 1)
            m ^= low
        return out

    @property
    def has_identity(self) -> bool:
        return self.mask & 1 == 1


def reach_extend(state: ReachState, g: int) -> ReachState:
    """State after appending g: products become S | S*g | {g}."""
    group = state.group
    row = [1 << group.table[x][g] for x in range(group.order)]
    return ReachState(group, state.mask | _mapped(state.mask, row) | (1 << g))


def is_ordered_free(seq: Sequence) -> bool:
    """True when no nonempty index-increasing subsequence multiplies to 1."""
    table = seq.group.table
    mask = 0
    for g in seq.terms:
        new = 1 << g
        m = mask
        while m:
            low = m & -m
            new |= 1 << table[low.bit_length() - 1][g]
            m ^= low
        mask |= new
        if mask & 1:
            return False
    return True


# --- ordered Davenport constant -----------------------------------------------

def davenport_ordered(group: FiniteGroup, budget: SearchBudget | None = None,
                      max_order: int = DEFAULT_ORDERED_CAP) -> SearchResult:
    """Exact D(G) by memoized longest-path search on reach sets.

    Groups above max_order are refused unless an explicit budget is passed;
    when a budget trips, the best witness found so far gives a lower bound
    and the result is flagged exact=False.
    """
    if group.order > max_order and budget is None:
        raise GroupTooLargeError(
            f"{group.name}: order {group.order} above search cap {max_order}; "
            "pass an explicit budget to attempt anyway")
    budget = budget or SearchBudget()
    clock = _Clock(budget)
    n = group.order
    succ = _succ_rows(group)
    memo: dict[int, int] = {}
    best_path: list[int] = []
    path: list[int] = []

    def extend(mask: int, g: int) -> int:
        new = mask | (1 << g)
        row = succ[g]
        m = mask
        while m:
            low = m & -m
            new |= row[low.bit_length() - 1]
            m ^= low
        return new

    def longest(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        clock.tick(len(memo))
        best = 0
        for g in range(1, n):
            nm = extend(mask, g)
            if nm & 1:
                continue
            path.append(g)
            if len(path) > len(best_path):
                best_path[:] = path
            v = 1 + longest(nm)
            path.pop()
            if v > best:
                best = v
        memo[mask] = best
        return best

    exact = True
    try:
        value = 1 + longest(0)
    except _BudgetHit:
        exact = False
        value = 1 + len(best_path)
    if exact:
        witness = _reconstruct(group, succ, memo)
    else:
        witness = Sequence(group, tuple(best_path))
    return SearchResult(value, witness, len(memo), clock.elapsed(), exact)


def _reconstruct(group: FiniteGroup, succ, memo) -> Sequence:
    """Greedy lexicographically-least optimal path through the memo table."""
    n = group.order
    terms = []
    mask = 0
    remaining = memo[0]
    while remaining > 0:
        for g in range(1, n):
            new = mask | (1 << g)
            m = mask
            row = succ[g]
            while m:
                low = m & -m
                new |= row[low.bit_length() - 1]
                m ^= low
            if new & 1:
                continue
            if 1 + memo[new] == remaining:
                terms.append(g)
                mask = new
                remaining -= 1
                break
        else:
            raise DavlabError("witness reconstruction failed")  # pragma: no cover
    return Sequence(group, tuple(terms))


def davenport_ordered_naive(group: FiniteGroup) -> int:
    """Brute-force D(G): walk every sequence, testing each prefix for an
    ordered product-one subsequence by direct enumeration of all 2^len - 1
    subsequences. Prefixes that already contain one are not extended, since
    every extension keeps the witnessing subsequence. No reach sets, no
    memoization; this is the independent oracle for the search above.
    """
    table = group.table
    n = group.order
    best = 0

    def prefix_free(seq: list[int]) -> bool:
        length = len(seq)
        prods = [0] * (1 << length)
        for m in range(1, 1 << length):
            low = m & -m
            i = low.bit_length() - 1
            rest = m ^ low
            p = table[seq[i]][prods[rest]] if rest else seq[i]
            prods[m] = p
            if p == 0:
                return False
        return True

    def walk(seq: list[int]) -> None:
        nonlocal best
        if len(seq) > best:
            best = len(seq)
        for g in range(n):
            seq.append(g)
            if prefix_free(seq):
                walk(seq)
            seq.pop()

    walk([])
    return best + 1


def olson_white_bound(group: FiniteGroup) -> int:
    """ceil((|G| + 1) / 2), valid for non-cyclic groups only."""
    if group.is_cyclic():
        raise DavlabError(f"{group.name}: bound applies to non-cyclic groups only")
    return (group.order + 2) // 2


# --- product-one predicates -----------------------------------------------------

def is_product_one(seq: Sequence, max_len: int = DEFAULT_ARRANGE_CAP) -> bool:
    """Some arrangement of all terms multiplies to the identity."""
    if len(seq) > max_len:
        raise BudgetExceededError(f"arrangement search capped at {max_len} terms")
    if not seq.terms:
        return True
    table = seq.group.table
    memo: dict[tuple, bool] = {}

    def reach(remaining: tuple[int, ...], prod: int) -> bool:
        if not remaining:
            return prod == 0
        key = (remaining, prod)
        cached = memo.get(key)
        if cached is not None:
            return cached
        out = False
        prev = None
        for i, g in enumerate(remaining):
            if g == prev:
                continue
            prev = g
            if reach(remaining[:i] + remaining[i + 1:], table[prod][g]):
                out = True
                break
        memo[key] = out
        return out

    return reach(tuple(sorted(seq.terms)), 0)


def has_proper_ordered_product_one(seq: Sequence) -> bool:
    """Any proper nonempty index-increasing subsequence with product 1?"""
    length = len(seq)
    if length > DEFAULT_ARRANGE_CAP:
        raise BudgetExceededError(f"subsequence scan capped at {DEFAULT_ARRANGE_CAP}")
    table = seq.group.table
    terms = seq.terms
    full = (1 << length) - 1
    prods = [0] * (1 << length)
    for m in range(1, 1 << length):
        low = m & -m
        i = low.bit_length() - 1
        rest = m ^ low
        prods[m] = table[terms[i]][prods[rest]] if rest else terms[i]
        if prods[m] == 0 and m != full:
            return True
    return False


def is_minimal_product_one(seq: Sequence) -> bool:
    """Product-one with no proper nonempty ordered product-one subsequence."""
    return is_product_one(seq) and not has_proper_ordered_product_one(seq)


# --- unordered Davenport constant ----------------------------------------------

def is_unordered_free(seq: Sequence) -> bool:
    """No nonempty sub-multiset admits an arrangement with product 1."""
    checker = _UnorderedChecker(seq.group)
    ms = tuple(sorted(seq.terms))
    return checker.multiset_free(ms)


class _UnorderedChecker:
    """Arrangement products of multisets, memoized over sub-multisets."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.succ = _succ_rows(group)
        self.arr: dict[tuple, int] = {(): 1}

    def arrangement_products(self, ms: tuple[int, ...]) -> int:
        """Bit mask of products over all arrangements of the full multiset."""
        cached = self.arr.get(ms)
        if cached is not None:
            return cached
        out = 0
        prev = None
        for i, g in enumerate(ms):
            if g == prev:
                continue
            prev = g
            out |= _mapped(self.arrangement_products(ms[:i] + ms[i + 1:]), self.succ[g])
        self.arr[ms] = out
        return out

    def submultisets(self, ms: tuple[int, ...]):
        items = sorted(Counter(ms).items())
        def rec(i):
            if i == len(items):
                yield ()
                return
            g, c = items[i]
            for tail in rec(i + 1):
                for k in range(c + 1):
                    yield (g,) * k + tail
        for t in rec(0):
            yield tuple(sorted(t))

    def multiset_free(self, ms: tuple[int, ...]) -> bool:
        for sub in self.submultisets(ms):
            if sub and self.arrangement_products(sub) & 1:
                return False
        return True

    def extension_free(self, ms: tuple[int, ...], g: int) -> bool:
        """Is ms + (g,) free, assuming ms already is? Only sub-multisets
        containing the new term can break freeness."""
        for sub in self.submultisets(ms):
            if self.arrangement_products(tuple(sorted(sub + (g,)))) & 1:
                return False
        return True


def davenport_unordered(group: FiniteGroup, budget: SearchBudget | None = None,
                        max_order: int = DEFAULT_UNORDERED_CAP) -> SearchResult:
    """Exact D'(G) by DFS over multisets that stay unordered-free.

    Freeness is multiset-level, so candidates are enumerated in nondecreasing
    element order; the arrangement-product sets are not prefix-summarizable,
    hence the verifier-driven walk instead of a reach-state recursion.
    """
    if group.order > max_order and budget is None:
        raise GroupTooLargeError(
            f"{group.name}: order {group.order} above unordered cap {max_order}; "
            "pass an explicit budget to attempt anyway")
    budget = budget or SearchBudget()
    clock = _Clock(budget)
    checker = _UnorderedChecker(group)
    n = group.order
    best: list[int] = []
    nodes = 0
    exact = True

    def walk(ms: tuple[int, ...], start: int) -> None:
        nonlocal nodes
        nodes += 1
        clock.tick(nodes + len(checker.arr))
        if len(ms) > len(best):
            best[:] = ms
        for g in range(start, n):
            if checker.extension_free(ms, g):
                walk(tuple(sorted(ms + (g,))), g)

    try:
        walk((), 1)
    except _BudgetHit:
        exact = False
    value = 1 + len(best)
    return SearchResult(value, Sequence(group, tuple(best)), nodes,
                        clock.elapsed(), exact)


# --- E(G): product-one subsequences of length exactly |G| ------------------------

def group_length_reach(group: FiniteGroup, terms) -> tuple[int, ...]:
    """Per-length reach: position m holds products of ordered subsequences of
    length exactly m+1, truncated at |G| (longer ones are never needed)."""
    n = group.order
    succ = _succ_rows(group)
    state = [0] * n
    for g in terms:
        row = succ[g]
        for m in range(n - 1, 0, -1):
            state[m] |= _mapped(state[m - 1], row)
        state[0] |= 1 << g
    return tuple(state)


def has_group_length_product_one(seq: Sequence) -> bool:
    """Some index-increasing subsequence of length exactly |G| multiplies to 1."""
    return group_length_reach(seq.group, seq.terms)[seq.group.order - 1] & 1 == 1


def eg_invariant(group: FiniteGroup, budget: SearchBudget | None = None,
                 max_order: int = DEFAULT_EG_CAP) -> SearchResult:
    """Exact E(G) over length-stratified reach states."""
    if group.order > max_order and budget is None:
        raise GroupTooLargeError(
            f"{group.name}: order {group.order} above E cap {max_order}; "
            "pass an explicit budget to attempt anyway")
    budget = budget or SearchBudget()
    clock = _Clock(budget)
    n = group.order
    succ = _succ_rows(group)
    memo: dict[tuple, int] = {}
    best_path: list[int] = []
    path: list[int] = []

    def extend(state: tuple, g: int) -> tuple:
        row = succ[g]
        new = list(state)
        for m in range(n - 1, 0, -1):
            prev = state[m - 1]
            if prev:
                new[m] |= _mapped(prev, row)
        new[0] |= 1 << g
        return tuple(new)

    def longest(state: tuple) -> int:
        cached = memo.get(state)
        if cached is not None:
            return cached
        clock.tick(len(memo))
        best = 0
        for g in range(n):
            ns = extend(state, g)
            if ns[n - 1] & 1:
                continue
            path.append(g)
            if len(path) > len(best_path):
                best_path[:] = path
            v = 1 + longest(ns)
            path.pop()
            if v > best:
                best = v
        memo[state] = best
        return best

    start = (0,) * n
    exact = True
    try:
        value = 1 + longest(start)
    except _BudgetHit:
        exact = False
        value = 1 + len(best_path)
        witness = Sequence(group, tuple(best_path))
        return SearchResult(value, witness, len(memo), clock.elapsed(), exact)
    # lexicographically-least optimal witness
    terms = []
    state = start
    remaining = memo[start]
    while remaining > 0:
        for g in range(n):
            ns = extend(state, g)
            if ns[n - 1] & 1:
                continue
            if 1 + memo[ns] == remaining:
                terms.append(g)
                state = ns
                remaining -= 1
                break
        else:
            raise DavlabError("witness reconstruction failed")  # pragma: no cover
    return SearchResult(value, Sequence(group, tuple(terms)), len(memo),
                        clock.elapsed(), exact)


def eg_lower_witness(group: FiniteGroup, ordered_witness: Sequence) -> Sequence:
    """A free sequence of length D-1 padded with |G|-1 identities has no
    index-ordered product-one subsequence of length exactly |G|."""
    if not is_ordered_free(ordered_witness):
        raise DavlabError("eg_lower_witness needs an ordered-product-one-free input")
    return Sequence(group, ordered_witness.terms + (0,) * (group.order - 1))


# --- weighted Davenport constant -------------------------------------------------

def _weighted_rows(group: FiniteGroup, weights) -> list[list[int]]:
    """Distinct powers g^a over the weight set, one list per element."""
    return [sorted({group.pow(g, a) for a in weights}) for g in group.elements()]


def _validate_weights(group: FiniteGroup, weights) -> tuple[int, ...]:
    A = tuple(sorted(set(weights)))
    n = group.exponent()
    if not A or any(a < 1 or a > n - 1 for a in A):
        raise InvalidWeightsError(
            f"weights must be a nonempty subset of [1, exp(G)-1] = [1, {n-1}], got {A}")
    return A


def davenport_weighted(group: FiniteGroup, weights,
                       budget: SearchBudget | None = None,
                       max_order: int = DEFAULT_ORDERED_CAP) -> SearchResult:
    """Exact D_A(G): the reach extension also ranges over the weight powers,
    S -> S | {s * g^a} | {g^a}. Identity terms hit product one immediately
    because 1^a = 1."""
    A = _validate_weights(group, weights)
    if group.order > max_order and budget is None:
        raise GroupTooLargeError(
            f"{group.name}: order {group.order} above search cap {max_order}")
    budget = budget or SearchBudget()
    clock = _Clock(budget)
    n = group.order
    succ = _succ_rows(group)
    choice = _weighted_rows(group, A)
    memo: dict[int, int] = {}
    best_path: list[int] = []
    path: list[int] = []

    def extend(mask: int, g: int) -> int:
        new = mask
        for h in choice[g]:
            new |= 1 << h
            new |= _mapped(mask, succ[h])
        return new

    def longest(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        clock.tick(len(memo))
        best = 0
        for g in range(n):
            nm = extend(mask, g)
            if nm & 1:
                continue
            path.append(g)
            if len(path) > len(best_path):
                best_path[:] = path
            v = 1 + longest(nm)
            path.pop()
            if v > best:
                best = v
        memo[mask] = best
        return best

    exact = True
    try:
        value = 1 + longest(0)
    except _BudgetHit:
        exact = False
        value = 1 + len(best_path)
        return SearchResult(value, Sequence(group, tuple(best_path)), len(memo),
                            clock.elapsed(), exact)
    terms = []
    mask = 0
    remaining = memo[0]
    while remaining > 0:
        for g in range(n):
            nm = extend(mask, g)
            if nm & 1:
                continue
            if 1 + memo[nm] == remaining:
                terms.append(g)
                mask = nm
                remaining -= 1
                break
        else:
            raise DavlabError("witness reconstruction failed")  # pragma: no cover
    return SearchResult(value, Sequence(group, tuple(terms)), len(memo),
                        clock.elapsed(), exact)


def is_weighted_free(seq: Sequence, weights) -> bool:
    """No index-increasing subsequence with per-term weight choices hits 1."""
    group = seq.group
    A = _validate_weights(group, weights)
    succ = _succ_rows(group)
    choice = _weighted_rows(group, A)
    mask = 0
    for g in seq.terms:
        new = mask
        for h in choice[g]:
            new |= 1 << h
            new |= _mapped(mask, succ[h])
        mask = new
        if mask & 1:
            return False
    return True


def davenport_weighted_naive(group: FiniteGroup, weights) -> int:
    """Brute-force D_A(G): extends every sequence whose weighted subsequence
    products (enumerated directly over subsets and weight assignments) avoid
    the identity."""
    A = _validate_weights(group, weights)
    table = group.table
    n = group.order
    best = 0

    def products(seq: tuple[int, ...]) -> set[int]:
        out = set()
        length = len(seq)
        for msk in range(1, 1 << length):
            picked = [seq[i] for i in range(length) if msk >> i & 1]
            for assign in itertools.product(A, repeat=len(picked)):
                p = 0
                for g, a in zip(picked, assign):
                    p = table[p][group.pow(g, a)]
                out.add(p)
        return out

    def walk(seq: tuple[int, ...]) -> None:
        nonlocal best
        if len(seq) > best:
            best = len(seq)
        for g in range(n):
            cand = seq + (g,)
            if 0 not in products(cand):
                walk(cand)

    walk(())
    return best + 1


def min_weight_set(group: FiniteGroup, k: int, max_order: int = 16,
                   max_exponent: int = 16) -> int | None:
    """min |A| over weight sets with D_A(G) <= k, or None when no A works.

    Exhausts subsets of [1, exp(G)-1] by size, smallest first; D_A shrinks as
    A grows, so the first success is optimal.
    """
    if k < 1:
        raise DavlabError("min_weight_set needs k >= 1")
    if group.order > max_order or group.exponent() > max_exponent:
        raise GroupTooLargeError(
            f"{group.name}: weight-set exhaustion capped at order {max_order}, "
            f"exponent {max_exponent}")
    universe = list(range(1, group.exponent()))
    if not universe:
        return None
    for size in range(1, len(universe) + 1):
        for A in itertools.combinations(universe, size):
            if davenport_weighted(group, A).value <= k:
                return size
    return None
