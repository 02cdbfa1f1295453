"""Subgroups as bit vectors over element indices, with closure machinery."""

from __future__ import annotations

from .errors import DavlabError
from .groups import FiniteGroup


class Subgroup:
    """Sorted element set of a parent group, backed by an int bit mask."""

    __slots__ = ("group", "mask")

    def __init__(self, group: FiniteGroup, mask: int):
        self.group = group
        self.mask = mask

    @classmethod
    def from_elements(cls, group: FiniteGroup, elements) -> "Subgroup":
        mask = 0
        for x in elements:
            mask |= 1 << x
        return cls(group, mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return (self.mask >> x) & 1 == 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.group is self.group
                and other.mask == self.mask)

    def __hash__(self) -> int:
        return hash((id(self.group), self.mask))

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def elements(self) -> list[int]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    @property
    def is_trivial(self) -> bool:
        return self.mask == 1

    def __repr__(self) -> str:
        return f"Subgroup(|H|={len(self)} of {self.group.name})"


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, 1)


def whole_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, (1 << group.order) - 1)


def subgroup_closure(group: FiniteGroup, gens) -> Subgroup:
    """Least subgroup containing gens, by breadth-first closure under the table.

    Finiteness makes closure under right multiplication by the generators
    enough; inverses come for free. Empty gens yields the trivial subgroup.
    """
    table = group.table
    gen_list = sorted(set(gens))
    seen = 1
    frontier = [0]
    for g in gen_list:
        if not (seen >> g) & 1:
            seen |= 1 << g
            frontier.append(g)
    while frontier:
        x = frontier.pop()
        row = table[x]
        for g in gen_list:
            y = row[g]
            if not (seen >> y) & 1:
                seen |= 1 << y
                frontier.append(y)
    return Subgroup(group, seen)


def commutator_subgroup(group: FiniteGroup, H: Subgroup, K: Subgroup) -> Subgroup:
    """Closure of all pairwise commutators [h, k], h in H, k in K."""
    table = group.table
    inv = group.inverse
    gens = set()
    k_elems = K.elements()
    k_invs = [inv[k] for k in k_elems]
    for h in H.elements():
        row_ih = table[inv[h]]
        row_h = table[h]
        for k, ik in zip(k_elems, k_invs):
            gens.add(table[row_ih[ik]][row_h[k]])
    gens.discard(0)
    return subgroup_closure(group, gens)


def power_subgroup(group: FiniteGroup, H: Subgroup, k: int) -> Subgroup:
    """Subgroup generated by the k-th powers of the members of H."""
    if k < 1:
        raise DavlabError(f"power_subgroup needs k >= 1, got {k}")
    return subgroup_closure(group, {group.pow(h, k) for h in H.elements()})


def power_set(group: FiniteGroup, H: Subgroup, k: int) -> set[int]:
    """The raw set of k-th powers (not necessarily a subgroup in general)."""
    return {group.pow(h, k) for h in H.elements()}


def product_subgroup(group: FiniteGroup, H: Subgroup, K: Subgroup) -> Subgroup:
    return subgroup_closure(group, set(H.elements()) | set(K.elements()))


def is_normal(group: FiniteGroup, H: Subgroup) -> bool:
    table = group.table
    inv = group.inverse
    mask = H.mask
    h_elems = H.elements()
    for g in range(group.order):
        row_ig = table[inv[g]]
        for h in h_elems:
            if not (mask >> table[row_ig[h]][g]) & 1:  # g^-1 h g
                return False
    return True


def quotient_order(H: Subgroup, K: Subgroup) -> int:
    """|H| / |K| for K a normal subgroup of H; raises otherwise."""
    group = H.group
    if not K <= H:
        raise DavlabError("quotient_order: K is not contained in H")
    table = group.table
    inv = group.inverse
    kmask = K.mask
    k_elems = K.elements()
    for h in H.elements():
        ih = inv[h]
        row = table[ih]
        for k in k_elems:
            if not (kmask >> table[row[k]][h]) & 1:
                raise DavlabError("quotient_order: K is not normal in H")
    return len(H) // len(K)


def lower_central_series(group: FiniteGroup) -> list[Subgroup]:
    """gamma_1 = G, gamma_{i+1} = [gamma_i, G], until it stabilizes."""
    G = whole_subgroup(group)
    series = [G]
    while True:
        nxt = commutator_subgroup(group, series[-1], G)
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.is_trivial:
            break
    return series


def nilpotency_class(group: FiniteGroup) -> int | None:
    """Class c when gamma_{c+1} = 1; None for non-nilpotent groups."""
    series = lower_central_series(group)
    if not series[-1].is_trivial:
        return None
    return len(series) - 1
