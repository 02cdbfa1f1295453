"""Jennings machinery: M-series, Loewy polynomial coefficients, Loewy length.

The M-series is the Brauer-Jennings-Zassenhaus chain

    M_1 = G,   M_n = [M_{n-1}, G] * M_{ceil(n/p)}^(p)   for n >= 2,

computed literally from the multiplication table. The sizes of consecutive
quotients give exponents e_i with |M_i / M_{i+1}| = p^{e_i}; the Loewy
length of the modular group algebra is L = 1 + (p-1) * sum(i * e_i), and the
radical layer dimensions are the coefficients of
prod_i (1 + x^i + ... + x^((p-1) i))^{e_i}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .descriptors import GroupDescriptor, validate_descriptor
from .errors import InternalConsistencyError, NoFormulaError, NotAPGroupError
from .groups import FiniteGroup
from .numtheory import prime_power
from .report import Report
from .subgroups import (Subgroup, commutator_subgroup, power_set, power_subgroup,
                        product_subgroup, subgroup_closure, whole_subgroup)


def _check_p_group(group: FiniteGroup, p: int | None) -> int:
    pp = prime_power(group.order)
    if pp is None:
        raise NotAPGroupError(f"{group.name}: order {group.order} is not a prime power")
    if p is not None and p != pp[0]:
        raise NotAPGroupError(f"{group.name}: order {group.order} is not a power of {p}")
    return pp[0]


def m_series(group: FiniteGroup, p: int | None = None) -> list[Subgroup]:
    """The chain M_1, M_2, ... down to and including the first trivial term."""
    p = _check_p_group(group, p)
    G = whole_subgroup(group)
    series = [G]
    while not series[-1].is_trivial:
        n = len(series) + 1
        lower = commutator_subgroup(group, series[-1], G)
        upper = power_subgroup(group, series[(n + p - 1) // p - 1], p)
        series.append(product_subgroup(group, lower, upper))
    return series


def jennings_exponents(series: list[Subgroup], p: int) -> list[int]:
    """e_i with |M_i / M_{i+1}| = p^{e_i}; zeros where the chain repeats."""
    exponents = []
    for i in range(len(series) - 1):
        quotient = len(series[i]) // len(series[i + 1])
        pp = prime_power(quotient) if quotient > 1 else None
        if quotient == 1:
            exponents.append(0)
        elif pp is None or pp[0] != p:
            raise InternalConsistencyError(
                f"|M_{i+1}/M_{i+2}| = {quotient} is not a power of {p}")
        else:
            exponents.append(pp[1])
    return exponents


def loewy_polynomial(exponents: list[int], p: int) -> list[int]:
    """Coefficients of prod_i (1 + x^i + ... + x^((p-1)i))^(e_i)."""
    coeffs = [1]
    for i, e in enumerate(exponents, start=1):
        factor = [0] * ((p - 1) * i + 1)
        for k in range(p):
            factor[k * i] = 1
        for _ in range(e):
            out = [0] * (len(coeffs) + len(factor) - 1)
            for j, cj in enumerate(coeffs):
                if cj:
                    for k, fk in enumerate(factor):
                        if fk:
                            out[j + k] += cj
            coeffs = out
    return coeffs


def loewy_length(group: FiniteGroup, p: int | None = None) -> int:
    """1 + (p-1) * sum(i * e_i) over the computed chain."""
    p = _check_p_group(group, p)
    exps = jennings_exponents(m_series(group, p), p)
    return 1 + (p - 1) * sum(i * e for i, e in enumerate(exps, start=1))


@dataclass
class JenningsData:
    prime: int
    series: list[Subgroup]
    exponents: list[int]
    coefficients: list[int]
    loewy_length: int

    @property
    def chain_sizes(self) -> list[int]:
        return [len(s) for s in self.series]


def jennings_data(group: FiniteGroup, p: int | None = None) -> JenningsData:
    p = _check_p_group(group, p)
    series = m_series(group, p)
    exps = jennings_exponents(series, p)
    coeffs = loewy_polynomial(exps, p)
    L = 1 + (p - 1) * sum(i * e for i, e in enumerate(exps, start=1))
    return JenningsData(p, series, exps, coeffs, L)


def quotient_elementary_abelian_report(group: FiniteGroup,
                                       series: list[Subgroup], p: int) -> Report:
    """Each M_i / M_{i+1} must be elementary abelian: p-th powers and
    commutators of M_i land in M_{i+1} (checked by membership, no cosets)."""
    report = Report(f"elementary abelian quotients of {group.name}")
    for i in range(len(series) - 1):
        upper, lower = series[i], series[i + 1]
        elems = upper.elements()
        ok_pow = all(group.pow(h, p) in lower for h in elems)
        ok_comm = True
        for h in elems:
            if not ok_comm:
                break
            for k in elems:
                if group.commutator(h, k) not in lower:
                    ok_comm = False
                    break
        report.add(f"M_{i+1}^(p) <= M_{i+2}", ok_pow)
        report.add(f"[M_{i+1}, M_{i+1}] <= M_{i+2}", ok_comm)
    return report


def loewy_formula(desc: GroupDescriptor) -> int:
    """Closed-form Loewy length for the families that have one.

    g1: p^a + p^b + 2 p^g - 3;  g2: p^a + p^b - 1;  g3: p^a + p^b + 2 p^s - 3;
    d/q of order 2^r (r >= 3) and sd/m2 of order 2^r (r >= 4): 2^(r-1) + 1.
    """
    validate_descriptor(desc)
    f = desc.family
    if f in ("g1", "g2", "g3"):
        p = desc["p"]
        pa, pb = p ** desc["alpha"], p ** desc["beta"]
        if f == "g1":
            return pa + pb + 2 * p ** desc["gamma"] - 3
        if f == "g2":
            return pa + pb - 1
        return pa + pb + 2 * p ** desc["sigma"] - 3
    if f in ("d", "q", "sd", "m2"):
        order = desc["order"]
        if order & (order - 1) != 0:
            raise NoFormulaError(
                f"{desc.canonical()}: no closed form, order is not a power of 2")
        r = order.bit_length() - 1
        if f in ("d", "q") and r < 3:
            raise NoFormulaError(f"{desc.canonical()}: closed form needs r >= 3")
        if f in ("sd", "m2") and r < 4:
            raise NoFormulaError(f"{desc.canonical()}: closed form needs r >= 4")
        return 2 ** (r - 1) + 1
    raise NoFormulaError(f"{desc.canonical()}: no closed-form Loewy length known here")


_CLASS_TWO_FAMILIES = ("g1", "g2", "g3", "g4")


def mseries_closed_form_check(group: FiniteGroup, desc: GroupDescriptor) -> Report:
    """Compare the computed chain with the closed form for two-generator
    class-two p-groups:

        M_i = gamma2^(p^s) G^(p^s)      for 2 p^(s-1) + 1 <= i <= p^s,
        M_i = gamma2^(p^s) G^(p^(s+1))  for p^s + 1 <= i <= 2 p^s,

    with M_1 = G and M_2 = gamma2 * G^(p).
    """
    if desc.family not in _CLASS_TWO_FAMILIES:
        raise NotAPGroupError(
            f"{desc.canonical()}: closed-form chain applies to g1..g4 only")
    p = desc["p"]
    series = m_series(group, p)
    G = whole_subgroup(group)
    gamma2 = commutator_subgroup(group, G, G)
    report = Report(f"M-series closed form for {desc.canonical()}")
    for i in range(1, len(series) + 1):
        computed = series[i - 1]
        if i == 1:
            predicted = G
        elif i == 2:
            predicted = product_subgroup(group, gamma2, power_subgroup(group, G, p))
        else:
            s = 1
            while True:
                if 2 * p ** (s - 1) + 1 <= i <= p ** s:
                    predicted = product_subgroup(
                        group,
                        power_subgroup(group, gamma2, p ** s),
                        power_subgroup(group, G, p ** s))
                    break
                if p ** s + 1 <= i <= 2 * p ** s:
                    predicted = product_subgroup(
                        group,
                        power_subgroup(group, gamma2, p ** s),
                        power_subgroup(group, G, p ** (s + 1)))
                    break
                s += 1
        report.add(f"M_{i}", predicted.mask == computed.mask,
                   f"predicted size {len(predicted)}, computed {len(computed)}")
    return report


def power_generators_check(group: FiniteGroup, desc: GroupDescriptor) -> Report:
    """For G = <a, b> of class two: G^(p^s) = <a^(p^s), b^(p^s), [a,b]^(p^s)>,
    and that subgroup must equal the raw set of p^s-th powers."""
    if desc.family not in _CLASS_TWO_FAMILIES:
        raise NotAPGroupError(
            f"{desc.canonical()}: power-generator form applies to g1..g4 only")
    p = desc["p"]
    G = whole_subgroup(group)
    a, b = group.generators["a"], group.generators["b"]
    c = group.commutator(a, b)
    report = Report(f"power subgroup generators for {desc.canonical()}")
    s = 1
    while True:
        q = p ** s
        full = power_subgroup(group, G, q)
        gens = subgroup_closure(group, {group.pow(a, q), group.pow(b, q), group.pow(c, q)})
        raw = power_set(group, G, q)
        report.add(f"G^({q}) = <a^{q}, b^{q}, [a,b]^{q}>", full.mask == gens.mask,
                   f"sizes {len(full)} vs {len(gens)}")
        report.add(f"G^({q}) equals the set of {q}-th powers",
                   raw == set(full.elements()),
                   f"set size {len(raw)} vs subgroup size {len(full)}")
        if full.is_trivial:
            break
        s += 1
    return report
