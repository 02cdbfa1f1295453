"""Explicit finite groups built from presentations as full multiplication tables.

Every family is realized on normal-form tuples with a collection rule for
products; the table is materialized once and all later work is table lookups.
Element 0 is always the identity and labels are the normal-form words.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .descriptors import GroupDescriptor, validate_descriptor
from .errors import GroupTooLargeError, InternalConsistencyError
from .numtheory import prime_power
from .report import Report

ORDER_CAP = 4096

# Full associativity is checked up to this order; a random sample above it.
_FULL_ASSOC_CAP = 512
_ASSOC_SAMPLES = 100_000


class FiniteGroup:
    """A finite group as a complete multiplication table on 0..order-1.

    Immutable after construction; instances are safe to share. ``table[x][y]``
    is the product x*y, index 0 is the identity, ``prime`` is set when the
    order is a prime power.
    """

    __slots__ = ("name", "order", "table", "inverse", "labels", "generators",
                 "prime", "_exponent", "_max_element_order")

    def __init__(self, name: str, table: list[list[int]], labels: list[str],
                 generators: dict[str, int], prime: int | None = None):
        self.name = name
        self.order = len(table)
        self.table = table
        self.labels = labels
        self.generators = generators
        self.prime = prime
        self._exponent: int | None = None
        self._max_element_order: int | None = None
        inverse = [-1] * self.order
        for x in range(self.order):
            row = table[x]
            for y in range(self.order):
                if row[y] == 0:
                    inverse[x] = y
                    break
            if inverse[x] < 0:
                raise InternalConsistencyError(f"{name}: element {x} has no inverse")
        self.inverse = inverse

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def pow(self, x: int, k: int) -> int:
        """x**k by square and multiply; k may be negative."""
        if k < 0:
            x = self.inverse[x]
            k = -k
        result = 0
        base = x
        table = self.table
        while k:
            if k & 1:
                result = table[result][base]
            base = table[base][base]
            k >>= 1
        return result

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y (left-normed convention)."""
        t = self.table
        return t[t[self.inverse[x]][self.inverse[y]]][t[x][y]]

    def product(self, terms) -> int:
        """Left-to-right product of a term sequence; empty product is 1."""
        result = 0
        t = self.table
        for g in terms:
            result = t[result][g]
        return result

    def element_order(self, x: int) -> int:
        k = 1
        y = x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def exponent(self) -> int:
        if self._exponent is None:
            self._exponent = math.lcm(*(self.element_order(x) for x in self.elements()))
            self._max_element_order = max(self.element_order(x) for x in self.elements())
        return self._exponent

    def max_element_order(self) -> int:
        if self._max_element_order is None:
            self.exponent()
        return self._max_element_order

    def is_cyclic(self) -> bool:
        # exponent == order is not enough outside abelian groups (S_3 has
        # exponent 6), so test for an element of full order.
        return self.max_element_order() == self.order

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in self.elements() for y in self.elements())

    def center(self) -> list[int]:
        t = self.table
        n = self.order
        return [z for z in range(n) if all(t[z][g] == t[g][z] for g in range(n))]

    def word(self, spec: list[tuple[str, int]]) -> int:
        """Evaluate a word in the named generators, e.g. [("a",-1),("b",1)]."""
        result = 0
        for name, exp in spec:
            result = self.table[result][self.pow(self.generators[name], exp)]
        return result


def _word_label(parts: list[tuple[str, int]]) -> str:
    bits = []
    for name, e in parts:
        if e == 0:
            continue
        bits.append(name if e == 1 else f"{name}^{e}")
    return " ".join(bits) if bits else "1"


# --- per-family normal-form systems -----------------------------------------
# Each _sys_* returns (elements, mult, label, generators, prime) where
# elements is the ordered tuple list (identity first), mult multiplies two
# tuples, label renders a tuple, generators maps names to tuples.

def _sys_cyclic(d: GroupDescriptor):
    n = d["n"]
    elems = list(range(n))
    mult = lambda x, y: (x + y) % n
    label = lambda x: _word_label([("g", x)])
    gens = {"g": 1 % n}
    pp = prime_power(n)
    return elems, mult, label, gens, pp[0] if pp else None


def _sys_abelian(d: GroupDescriptor):
    import itertools
    factors = d.values()
    elems = list(itertools.product(*(range(k) for k in factors)))
    def mult(x, y):
        return tuple((a + b) % k for a, b, k in zip(x, y, factors))
    names = [f"g{i+1}" for i in range(len(factors))]
    label = lambda x: _word_label(list(zip(names, x)))
    gens = {}
    for i, name in enumerate(names):
        g = [0] * len(factors)
        g[i] = 1 % factors[i]
        gens[name] = tuple(g)
    pp = prime_power(math.prod(factors))
    return elems, mult, label, gens, pp[0] if pp else None


def _sys_semidirect2(order: int, t: int):
    """<x, y | x^2 = 1, y^m = 1, x^-1 y x = y^t> with m = order/2.

    Covers dihedral (t = -1), semidihedral (t = m/2 - 1) and the modular
    maximal-cyclic family (t = m/2 + 1); elements are x^i y^j.
    """
    m = order // 2
    elems = [(i, j) for i in range(2) for j in range(m)]
    def mult(e1, e2):
        i1, j1 = e1
        i2, j2 = e2
        # y^j x = x y^(j t), so x^i1 y^j1 x^i2 y^j2 = x^(i1+i2) y^(j1 t^i2 + j2)
        return ((i1 + i2) % 2, (j1 * (t if i2 else 1) + j2) % m)
    label = lambda e: _word_label([("x", e[0]), ("y", e[1])])
    gens = {"x": (1, 0), "y": (0, 1)}
    return elems, mult, label, gens


def _sys_dihedral(d: GroupDescriptor):
    order = d["order"]
    e, m, l, g = _sys_semidirect2(order, -1)
    pp = prime_power(order)
    return e, m, l, g, pp[0] if pp else None


def _sys_semidihedral(d: GroupDescriptor):
    order = d["order"]
    # conjugation exponent 2n - 1 for order 8n equals 2^(r-2) - 1 when 8n = 2^r
    e, m, l, g = _sys_semidirect2(order, order // 4 - 1)
    pp = prime_power(order)
    return e, m, l, g, pp[0] if pp else None


def _sys_modular2(d: GroupDescriptor):
    order = d["order"]
    e, m, l, g = _sys_semidirect2(order, order // 4 + 1)
    return e, m, l, g, 2


def _sys_dicyclic(d: GroupDescriptor):
    order = d["order"]
    n = order // 4
    m = 2 * n
    elems = [(i, j) for i in range(2) for j in range(m)]
    def mult(e1, e2):
        i1, j1 = e1
        i2, j2 = e2
        j = (j1 * (-1 if i2 else 1)) + j2
        if i1 and i2:
            j += n  # x^2 = y^n, central since y^n = y^-n
        return ((i1 + i2) % 2, j % m)
    label = lambda e: _word_label([("x", e[0]), ("y", e[1])])
    gens = {"x": (1, 0), "y": (0, 1)}
    pp = prime_power(order)
    return elems, mult, label, gens, pp[0] if pp else None


def _sys_g1(d: GroupDescriptor):
    """Central-commutator family: [a,b] = c central, componentwise otherwise.

    Triples (i, j, t) stand for a^i b^j c^t; collecting b^j1 past a^i2 with
    b a = a b c^-1 gives the cocycle term -j1*i2 on the c exponent.
    """
    p = d["p"]
    pa, pb, pg = p ** d["alpha"], p ** d["beta"], p ** d["gamma"]
    elems = [(i, j, t) for i in range(pa) for j in range(pb) for t in range(pg)]
    def mult(e1, e2):
        i1, j1, t1 = e1
        i2, j2, t2 = e2
        return ((i1 + i2) % pa, (j1 + j2) % pb, (t1 + t2 - j1 * i2) % pg)
    label = lambda e: _word_label([("a", e[0]), ("b", e[1]), ("c", e[2])])
    gens = {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)}
    return elems, mult, label, gens, p


def _sys_g2(d: GroupDescriptor):
    """Split metacyclic family: b^-1 a b = a^u with u = 1 + p^(alpha-gamma)."""
    p = d["p"]
    pa, pb = p ** d["alpha"], p ** d["beta"]
    u = 1 + p ** (d["alpha"] - d["gamma"])
    v = pow(u, -1, pa)
    # v^j for j in [0, p^beta); u is a unit of order p^gamma dividing p^beta
    vpow = [1]
    for _ in range(pb - 1):
        vpow.append(vpow[-1] * v % pa)
    elems = [(i, j) for i in range(pa) for j in range(pb)]
    def mult(e1, e2):
        i1, j1 = e1
        i2, j2 = e2
        # b^j1 a^i2 = a^(i2 * u^-j1) b^j1
        return ((i1 + i2 * vpow[j1]) % pa, (j1 + j2) % pb)
    label = lambda e: _word_label([("a", e[0]), ("b", e[1])])
    gens = {"a": (1, 0), "b": (0, 1)}
    return elems, mult, label, gens, p


def _mat_mul(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def _sys_g3(d: GroupDescriptor):
    """Family with [a,b] = a^e c and [c,b] = a^(-e^2) c^(-e), e = p^(alpha-gamma).

    Built as (C_{p^alpha} x C_{p^sigma}) extended by b acting through the
    automorphism phi(a) = a^(1+e) c, phi(c) = a^(-e^2) c^(1-e); triples
    (i, t, j) stand for a^i c^t b^j and products use phi^(-j1) on the middle.
    The action matrix has determinant 1 and its p^beta-th power must be the
    identity, which is verified here before any table is built.
    """
    p = d["p"]
    pa, pb, ps = p ** d["alpha"], p ** d["beta"], p ** d["sigma"]
    e = p ** (d["alpha"] - d["gamma"])
    # phi as a matrix on exponent columns (i, t); phi^-1 = [[1-e, e^2], [-1, 1+e]]
    minv = ((1 - e, e * e), (-1, 1 + e))
    powers = [((1, 0), (0, 1))]
    for _ in range(pb - 1):
        m = _mat_mul(powers[-1], minv)
        powers.append(((m[0][0] % pa, m[0][1] % pa), (m[1][0] % pa, m[1][1] % pa)))
    closing = _mat_mul(powers[-1], minv)
    if (closing[0][0] % pa, closing[0][1] % pa) != (1, 0) or (
        closing[1][0] % ps, closing[1][1] % ps) != (0, 1):
        raise InternalConsistencyError(
            f"{d.canonical()}: conjugation action is not of order dividing p^beta")
    elems = [(i, t, j) for i in range(pa) for t in range(ps) for j in range(pb)]
    def mult(e1, e2):
        i1, t1, j1 = e1
        i2, t2, j2 = e2
        A = powers[j1]  # phi^(-j1)
        i2b = (A[0][0] * i2 + A[0][1] * t2) % pa
        t2b = (A[1][0] * i2 + A[1][1] * t2) % ps
        return ((i1 + i2b) % pa, (t1 + t2b) % ps, (j1 + j2) % pb)
    label = lambda e_: _word_label([("a", e_[0]), ("c", e_[1]), ("b", e_[2])])
    gens = {"a": (1, 0, 0), "c": (0, 1, 0), "b": (0, 0, 1)}
    return elems, mult, label, gens, p


def _sys_g4(d: GroupDescriptor):
    """Carry family: [a,b] = c central, a^(p^alpha) = c^(p^rho), b^(p^beta) = c^(p^sigma).

    Same cocycle as the g1 family plus carry contributions when the a or b
    exponent wraps. The smallest admissible parameters already give order
    p^8, so tables for this family always exceed the order cap; the rule is
    exercised at tuple level.
    """
    p = d["p"]
    pa, pb, pg = p ** d["alpha"], p ** d["beta"], p ** d["gamma"]
    pr, psg = p ** d["rho"], p ** d["sigma"]
    elems = [(i, j, t) for i in range(pa) for j in range(pb) for t in range(pg)]
    def mult(e1, e2):
        i1, j1, t1 = e1
        i2, j2, t2 = e2
        t = t1 + t2 - j1 * i2
        if i1 + i2 >= pa:
            t += pr
        if j1 + j2 >= pb:
            t += psg
        return ((i1 + i2) % pa, (j1 + j2) % pb, t % pg)
    label = lambda e: _word_label([("a", e[0]), ("b", e[1]), ("c", e[2])])
    gens = {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)}
    return elems, mult, label, gens, p


_SYSTEMS = {
    "c": _sys_cyclic,
    "ab": _sys_abelian,
    "d": _sys_dihedral,
    "q": _sys_dicyclic,
    "sd": _sys_semidihedral,
    "m2": _sys_modular2,
    "g1": _sys_g1,
    "g2": _sys_g2,
    "g3": _sys_g3,
    "g4": _sys_g4,
}


def check_group_axioms(group: FiniteGroup, seed: int = 0) -> None:
    """Identity, inverses, Latin square, associativity; raises on failure.

    Associativity is checked on every triple up to order 512 and on 10^5
    random triples above that.
    """
    n = group.order
    T = np.asarray(group.table, dtype=np.int32)
    rng = np.arange(n, dtype=np.int32)
    if not (np.array_equal(T[0], rng) and np.array_equal(T[:, 0], rng)):
        raise InternalConsistencyError(f"{group.name}: identity row/column broken")
    if not (np.array_equal(np.sort(T, axis=1), np.tile(rng, (n, 1)))
            and np.array_equal(np.sort(T.T, axis=1), np.tile(rng, (n, 1)))):
        raise InternalConsistencyError(f"{group.name}: table is not a Latin square")
    for x in range(n):
        if group.table[x][group.inverse[x]] != 0:
            raise InternalConsistencyError(f"{group.name}: inverse broken at {x}")
    if n <= _FULL_ASSOC_CAP:
        for x in range(n):
            if not np.array_equal(T[T[x]], T[x][T]):
                raise InternalConsistencyError(
                    f"{group.name}: associativity fails in row {x}")
    else:
        rnd = np.random.default_rng(seed)
        xs = rnd.integers(0, n, _ASSOC_SAMPLES)
        ys = rnd.integers(0, n, _ASSOC_SAMPLES)
        zs = rnd.integers(0, n, _ASSOC_SAMPLES)
        if not np.array_equal(T[T[xs, ys], zs], T[xs, T[ys, zs]]):
            raise InternalConsistencyError(
                f"{group.name}: associativity fails on random sample")


@functools.lru_cache(maxsize=32)
def build(desc: GroupDescriptor) -> FiniteGroup:
    """Construct the group for a validated descriptor.

    Refuses orders above ORDER_CAP. The built table passes the group axioms
    and every relation of the presentation, otherwise an
    InternalConsistencyError is raised.
    """
    validate_descriptor(desc)
    order = desc.theoretical_order()
    if order > ORDER_CAP:
        raise GroupTooLargeError(
            f"{desc.canonical()}: order {order} exceeds cap {ORDER_CAP}")
    elems, mult, label, gens, prime = _SYSTEMS[desc.family](desc)
    index = {e: k for k, e in enumerate(elems)}
    table = [[index[mult(x, y)] for y in elems] for x in elems]
    if len(table) != order:
        raise InternalConsistencyError(
            f"{desc.canonical()}: built order {len(table)} != expected {order}")
    group = FiniteGroup(
        desc.canonical(), table, [label(e) for e in elems],
        {name: index[g] for name, g in gens.items()}, prime=prime)
    check_group_axioms(group)
    report = verify_presentation(group, desc)
    if not report.ok:
        raise InternalConsistencyError(
            f"{desc.canonical()}: presentation check failed: {report.failures()}")
    return group


def build_from_string(text: str) -> FiniteGroup:
    from .descriptors import parse_descriptor
    return build(parse_descriptor(text))


# --- presentation verification -----------------------------------------------

def _relations(group: FiniteGroup, desc: GroupDescriptor):
    """Yield (name, lhs, rhs) element triples for every displayed relation."""
    f = desc.family
    G = group
    if f == "c":
        n = desc["n"]
        yield (f"g^{n} = 1", G.pow(G.generators["g"], n), 0)
        return
    if f == "ab":
        names = [name for name, _ in desc.params]
        for i, nk in enumerate(desc.values()):
            g = G.generators[f"g{i+1}"]
            yield (f"g{i+1}^{nk} = 1", G.pow(g, nk), 0)
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                gi, gj = G.generators[f"g{i+1}"], G.generators[f"g{j+1}"]
                yield (f"g{i+1} g{j+1} = g{j+1} g{i+1}", G.mul(gi, gj), G.mul(gj, gi))
        return
    if f in ("d", "q", "sd", "m2"):
        order = desc["order"]
        x, y = G.generators["x"], G.generators["y"]
        xyx = G.mul(G.inv(x), G.mul(y, x))
        if f == "d":
            m = order // 2
            yield ("x^2 = 1", G.pow(x, 2), 0)
            yield (f"y^{m} = 1", G.pow(y, m), 0)
            yield ("x^-1 y x = y^-1", xyx, G.inv(y))
        elif f == "q":
            n = order // 4
            yield (f"x^2 = y^{n}", G.pow(x, 2), G.pow(y, n))
            yield (f"y^{2*n} = 1", G.pow(y, 2 * n), 0)
            yield ("x^-1 y x = y^-1", xyx, G.inv(y))
        elif f == "sd":
            n = order // 8
            yield ("x^2 = 1", G.pow(x, 2), 0)
            yield (f"y^{4*n} = 1", G.pow(y, 4 * n), 0)
            yield (f"x^-1 y x = y^{2*n-1}", xyx, G.pow(y, 2 * n - 1))
            if order & (order - 1) == 0:
                r = order.bit_length() - 1
                yield (f"x^-1 y x = y^(2^{r-2}-1)", xyx, G.pow(y, 2 ** (r - 2) - 1))
        else:
            r = order.bit_length() - 1
            yield ("x^2 = 1", G.pow(x, 2), 0)
            yield (f"y^(2^{r-1}) = 1", G.pow(y, 2 ** (r - 1)), 0)
            yield (f"x^-1 y x = y^(2^{r-2}+1)", xyx, G.pow(y, 2 ** (r - 2) + 1))
        return

    p = desc["p"]
    pa, pb, pg = p ** desc["alpha"], p ** desc["beta"], p ** desc["gamma"]
    a, b = G.generators["a"], G.generators["b"]
    c_ab = G.commutator(a, b)
    if f == "g1":
        c = G.generators["c"]
        yield ("[a,b] = c", c_ab, c)
        yield ("[a,c] = 1", G.commutator(a, c), 0)
        yield ("[b,c] = 1", G.commutator(b, c), 0)
        yield (f"o(a) = {pa}", G.element_order(a), pa)
        yield (f"o(b) = {pb}", G.element_order(b), pb)
        yield (f"o(c) = {pg}", G.element_order(c), pg)
    elif f == "g2":
        e = p ** (desc["alpha"] - desc["gamma"])
        yield (f"[a,b] = a^{e}", c_ab, G.pow(a, e))
        yield (f"o(a) = {pa}", G.element_order(a), pa)
        yield (f"o(b) = {pb}", G.element_order(b), pb)
        yield (f"o([a,b]) = {pg}", G.element_order(c_ab), pg)
    elif f == "g3":
        ps = p ** desc["sigma"]
        e = p ** (desc["alpha"] - desc["gamma"])
        c = G.generators["c"]
        yield (f"[a,b] = a^{e} c", c_ab, G.mul(G.pow(a, e), c))
        yield (f"[c,b] = a^-{e*e} c^-{e}", G.commutator(c, b),
               G.mul(G.pow(a, -e * e), G.pow(c, -e)))
        yield ("[a,c] = 1", G.commutator(a, c), 0)
        yield (f"o(a) = {pa}", G.element_order(a), pa)
        yield (f"o(b) = {pb}", G.element_order(b), pb)
        yield (f"o(c) = {ps}", G.element_order(c), ps)
    elif f == "g4":
        pr, psg = p ** desc["rho"], p ** desc["sigma"]
        yield (f"[a,b]^{pg} = 1", G.pow(c_ab, pg), 0)
        yield ("[[a,b],a] = 1", G.commutator(c_ab, a), 0)
        yield ("[[a,b],b] = 1", G.commutator(c_ab, b), 0)
        yield (f"a^{pa} = [a,b]^{pr}", G.pow(a, pa), G.pow(c_ab, pr))
        yield (f"b^{pb} = [a,b]^{psg}", G.pow(b, pb), G.pow(c_ab, psg))


def verify_presentation(group: FiniteGroup, desc: GroupDescriptor) -> Report:
    """Check every displayed relation of the descriptor's presentation."""
    report = Report(f"presentation of {desc.canonical()}")
    for name, lhs, rhs in _relations(group, desc):
        report.add(name, lhs == rhs, f"lhs={lhs} rhs={rhs}")
    return report


@dataclass
class GroupInfo:
    descriptor: str
    order: int
    exponent: int
    center_size: int
    commutator_size: int
    nilpotency_class: int | None
    generator_orders: dict[str, int]
    prime: int | None


def group_info(group: FiniteGroup) -> GroupInfo:
    """Summary invariants used by the CLI info command."""
    from .subgroups import commutator_subgroup, nilpotency_class, whole_subgroup
    G = whole_subgroup(group)
    gamma2 = commutator_subgroup(group, G, G)
    return GroupInfo(
        descriptor=group.name,
        order=group.order,
        exponent=group.exponent(),
        center_size=len(group.center()),
        commutator_size=len(gamma2),
        nilpotency_class=nilpotency_class(group),
        generator_orders={n: group.element_order(g) for n, g in group.generators.items()},
        prime=group.prime,
    )
