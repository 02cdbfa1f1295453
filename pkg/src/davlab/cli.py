"""Command-line surface: info, loewy, davenport, witness, oracle, scan.

Every command accepts --json and then emits exactly one JSON document on
stdout. Exit code 0 means no assertion failed; parse errors exit 2.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import os
import re
import sys
import time

from . import jennings as jn
from . import witnesses as wt
from . import zerosum as zs
from .cache import ResultRecord, cache_get, cache_path, cache_put
from .descriptors import (GRAMMAR_HINT, GroupDescriptor, make_descriptor,
                          parse_descriptor, validate_descriptor)
from .errors import DavlabError, DescriptorError
from .groups import build, group_info
from .numtheory import prime_power
from .version import __version__

ENV_THREADS = "DAVLAB_THREADS"

_VARIANT_INVARIANT = {"ordered": "D", "unordered": "Dprime", "E": "E", "weighted": "DA"}


def _emit(doc: dict, json_mode: bool, lines: list[str]) -> None:
    if json_mode:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _budget_from(args) -> zs.SearchBudget | None:
    if args.budget_states is None and args.budget_seconds is None:
        return None
    return zs.SearchBudget(
        max_states=args.budget_states or zs.SearchBudget().max_states,
        max_seconds=args.budget_seconds or zs.SearchBudget().max_seconds)


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise DescriptorError(f"bad weight list {text!r}; expected e.g. --weights=1,4")


# --- subcommand bodies ----------------------------------------------------------

def _cmd_info(args) -> int:
    desc = parse_descriptor(args.descriptor)
    t0 = time.perf_counter()
    info = group_info(build(desc))
    elapsed_ms = int(1000 * (time.perf_counter() - t0))
    doc = {
        "descriptor": desc.canonical(),
        "invariant": "info",
        "value": info.order,
        "exact": True,
        "exponent": info.exponent,
        "center_size": info.center_size,
        "commutator_size": info.commutator_size,
        "nilpotency_class": info.nilpotency_class,
        "generator_orders": info.generator_orders,
        "prime": info.prime,
        "elapsed_ms": elapsed_ms,
        "version": __version__,
    }
    gens = " ".join(f"{k}={v}" for k, v in info.generator_orders.items())
    _emit(doc, args.json, [
        f"descriptor: {desc.canonical()}",
        f"order: {info.order}",
        f"exponent: {info.exponent}",
        f"center: {info.center_size}",
        f"commutator_subgroup: {info.commutator_size}",
        f"nilpotency_class: {info.nilpotency_class}",
        f"generator_orders: {gens}",
    ])
    return 0


def _cmd_loewy(args) -> int:
    desc = parse_descriptor(args.descriptor)
    t0 = time.perf_counter()
    direct = formula = None
    chain = coeffs = None
    if args.method in ("direct", "both"):
        data = jn.jennings_data(build(desc))
        direct = data.loewy_length
        chain = data.chain_sizes
        coeffs = data.coefficients
    if args.method in ("formula", "both"):
        formula = jn.loewy_formula(desc)
    elapsed_ms = int(1000 * (time.perf_counter() - t0))
    agree = direct == formula if args.method == "both" else True
    value = direct if direct is not None else formula
    doc = {
        "descriptor": desc.canonical(),
        "invariant": "L" if direct is not None else "L_formula",
        "value": value,
        "exact": True,
        "method": args.method,
        "agreement": agree,
        "elapsed_ms": elapsed_ms,
        "version": __version__,
    }
    lines = [f"descriptor: {desc.canonical()}"]
    if direct is not None:
        doc["chain_sizes"] = chain
        doc["coefficients"] = coeffs
        lines.append(f"loewy_length(direct): {direct}")
    if formula is not None:
        doc["formula_value"] = formula
        lines.append(f"loewy_length(formula): {formula}")
    if args.method == "both":
        lines.append(f"agreement: {'yes' if agree else 'NO'}")
        lines.append("chain_sizes: " + " ".join(map(str, chain)))
        lines.append("coefficients: " + " ".join(map(str, coeffs)))
    _emit(doc, args.json, lines)
    return 0 if agree else 1


def _cmd_davenport(args) -> int:
    desc = parse_descriptor(args.descriptor)
    invariant = _VARIANT_INVARIANT[args.variant]
    weights = _parse_weights(args.weights) if args.weights else None
    if args.variant == "weighted" and weights is None:
        raise DescriptorError("--variant=weighted needs --weights=a1,a2,...")
    path = cache_path(args.cache)
    t0 = time.perf_counter()
    cached = None
    if not args.no_cache:
        cached = cache_get(path, desc.canonical(), invariant, weights)
    if cached is not None:
        elapsed_ms = int(1000 * (time.perf_counter() - t0))
        doc = {
            "descriptor": desc.canonical(),
            "invariant": invariant,
            "value": cached.value,
            "exact": cached.exact,
            "witness": cached.witness,
            "cached": True,
            "elapsed_ms": elapsed_ms,
            "version": __version__,
        }
        _emit(doc, args.json, [
            f"descriptor: {desc.canonical()}",
            f"invariant: {invariant}",
            f"value: {cached.value}",
            f"exact: {str(cached.exact).lower()}",
            f"witness: {' '.join(cached.witness) if cached.witness else '(none)'}",
            f"cache: hit ({elapsed_ms} ms)",
        ])
        return 0
    group = build(desc)
    budget = _budget_from(args)
    if args.variant == "ordered":
        result = zs.davenport_ordered(group, budget)
    elif args.variant == "unordered":
        result = zs.davenport_unordered(group, budget)
    elif args.variant == "E":
        result = zs.eg_invariant(group, budget)
    else:
        result = zs.davenport_weighted(group, weights, budget)
    elapsed_ms = int(1000 * (time.perf_counter() - t0))
    witness_labels = result.witness.labels()
    if not args.no_cache:
        cache_put(path, ResultRecord(
            descriptor=desc.canonical(), invariant=invariant, value=result.value,
            exact=result.exact, weight_set=list(weights) if weights else None,
            witness=witness_labels, elapsed_ms=elapsed_ms))
    doc = {
        "descriptor": desc.canonical(),
        "invariant": invariant,
        "value": result.value,
        "exact": result.exact,
        "witness": witness_labels,
        "states": result.states_explored,
        "cached": False,
        "elapsed_ms": elapsed_ms,
        "version": __version__,
    }
    _emit(doc, args.json, [
        f"descriptor: {desc.canonical()}",
        f"invariant: {invariant}",
        f"value: {result.value}",
        f"exact: {str(result.exact).lower()}",
        f"witness: {result.witness.compact()}",
        f"states: {result.states_explored}",
        f"elapsed_ms: {elapsed_ms}",
    ])
    return 0


def _cmd_witness(args) -> int:
    desc = parse_descriptor(args.descriptor)
    spec = wt.witness_for_theorem(desc, args.theorem, args.unverified_explore)
    group = build(desc)
    seq = spec.sequence(group)
    in_scope = True
    if desc.family == "g1":
        in_scope = desc["gamma"] == 1
    elif desc.family == "g3":
        in_scope = desc["sigma"] == 1
    free = oracle = None
    if args.verify:
        free = zs.is_ordered_free(seq)
        if desc.family in ("g1", "g3") and in_scope:
            oracle = wt.congruence_oracle(wt.congruence_system(desc))
    verified = bool(args.verify and free and (oracle is None or oracle == free))
    # outside the proven parameter scope a non-free sequence is a finding,
    # not a failure
    failed = bool(args.verify and in_scope and not verified)
    lower = spec.length + 1 if free is not False else 1
    doc = {
        "descriptor": desc.canonical(),
        "invariant": "witness_check",
        "value": lower,
        "exact": verified,
        "witness": [f"{group.labels[el]} ^{spec.multiplicities[name]}"
                    for name, el in spec.elements.items()],
        "case": spec.case_tag,
        "length": spec.length,
        "ordered_free": free,
        "oracle": oracle,
        "in_proven_scope": in_scope,
        "bounds": {"lower": lower, "upper": None,
                   "lower_source": "witness", "upper_source": None},
        "elapsed_ms": 0,
        "version": __version__,
    }
    lines = [
        f"descriptor: {desc.canonical()}",
        f"construction: {args.theorem} ({spec.case_tag})",
        f"witness: {spec.describe(group)}",
        f"length: {spec.length}",
    ]
    if args.verify:
        lines.append(f"ordered_free: {str(free).lower()}")
        lines.append(f"oracle: {str(oracle).lower() if oracle is not None else 'n/a'}")
        lines.append(f"implied: D >= {lower}" if free else "implied: nothing (not free)")
        if not in_scope:
            lines.append("note: outside the proven parameter scope, reported only")
    _emit(doc, args.json, lines)
    return 1 if failed else 0


def _cmd_oracle(args) -> int:
    desc = parse_descriptor(args.descriptor)
    t0 = time.perf_counter()
    system = wt.congruence_system(desc)
    verdict = wt.congruence_oracle(system)
    disc = wt.discriminant_check(system.prime, system.case_tag)
    elapsed_ms = int(1000 * (time.perf_counter() - t0))
    tuples = 1
    for r in system.ranges:
        tuples *= r
    doc = {
        "descriptor": desc.canonical(),
        "invariant": "oracle_check",
        "value": verdict,
        "exact": True,
        "case": system.case_tag,
        "least_non_residue": system.q,
        "discriminant_check": disc,
        "tuples": tuples,
        "elapsed_ms": elapsed_ms,
        "version": __version__,
    }
    _emit(doc, args.json, [
        f"descriptor: {desc.canonical()}",
        f"case: {system.case_tag}",
        f"least_non_residue: {system.q if system.q is not None else 'n/a'}",
        f"discriminant_check: {str(disc).lower()}",
        f"only_trivial_solution: {str(verdict).lower()}",
        f"tuples: {tuples}",
        f"elapsed_ms: {elapsed_ms}",
    ])
    return 0 if verdict and disc else 1


# --- scan ------------------------------------------------------------------------

_RANGE_RE = re.compile(r"^([a-z]+)(<=|>=|=)(\d+)$")


def _parse_param_ranges(text: str | None):
    if not text:
        return []
    out = []
    for token in text.split(","):
        m = _RANGE_RE.match(token.strip())
        if not m:
            raise DescriptorError(
                f"bad param range {token!r}; expected name=val, name<=val or name>=val")
        out.append((m.group(1), m.group(2), int(m.group(3))))
    return out


def _range_ok(desc: GroupDescriptor, ranges) -> bool:
    pmap = desc.pmap
    for name, op, value in ranges:
        if name not in pmap:
            continue  # constraint applies only to families carrying the parameter
        have = pmap[name]
        if op == "=" and have != value:
            return False
        if op == "<=" and have > value:
            return False
        if op == ">=" and have < value:
            return False
    return True


def _grid(families: list[str], primes: list[int], max_order: int, ranges):
    """All valid descriptors of the requested families up to max_order."""
    out: list[GroupDescriptor] = []
    for family in families:
        if family in ("d", "q", "sd", "m2"):
            order = 8
            while order <= max_order:
                candidates = [order]
                for n in candidates:
                    for desc in _two_group_descs(family, n):
                        out.append(desc)
                order *= 2
            if family in ("q", "sd"):
                # non-2-power orders covered by the dicyclic/semidihedral result
                step = 4 if family == "q" else 8
                start = 2 * step
                for n in range(start, max_order + 1, step):
                    if n & (n - 1) == 0:
                        continue
                    out.append(make_descriptor(family, n))
        elif family in ("g1", "g2", "g3", "g4"):
            for p in primes:
                out.extend(_p_family_descs(family, p, max_order))
        else:
            raise DescriptorError(f"scan does not cover family {family!r}")
    seen = set()
    grid = []
    for desc in out:
        try:
            validate_descriptor(desc)
        except DavlabError:
            continue
        if not _range_ok(desc, ranges):
            continue
        key = desc.canonical()
        if key not in seen and desc.theoretical_order() <= max_order:
            seen.add(key)
            grid.append(desc)
    return grid


def _two_group_descs(family: str, order: int):
    if family == "d" and order >= 8:
        yield make_descriptor("d", order)
    elif family == "q" and order >= 8:
        yield make_descriptor("q", order)
    elif family == "sd" and order >= 16:
        yield make_descriptor("sd", order)
    elif family == "m2" and order >= 16:
        yield make_descriptor("m2", order)


def _p_family_descs(family: str, p: int, max_order: int):
    import itertools
    max_e = 1
    while p ** (max_e + 1) <= max_order:
        max_e += 1
    exps = range(1, max_e + 1)
    if family == "g1":
        for a, b, g in itertools.product(exps, repeat=3):
            if a >= b >= g >= 1 and p ** (a + b + g) <= max_order:
                yield make_descriptor("g1", p, a, b, g)
    elif family == "g2":
        for a, b, g in itertools.product(exps, repeat=3):
            if a >= 2 * g and b >= g >= 1 and p ** (a + b) <= max_order:
                yield make_descriptor("g2", p, a, b, g)
    elif family == "g3":
        for a, b, g, s in itertools.product(exps, repeat=4):
            if (b >= g > s >= 1 and a + s >= 2 * g
                    and p ** (a + b + s) <= max_order):
                yield make_descriptor("g3", p, a, b, g, s)
    elif family == "g4":
        for a, b, g in itertools.product(exps, repeat=3):
            for r in range(1, g):
                for s in range(0, r):
                    if (a > b >= g >= 1 and r < min(g, s + a - b)
                            and p ** (a + b + g) <= max_order):
                        yield make_descriptor("g4", p, a, b, g, r, s)


def _witness_plan(desc: GroupDescriptor) -> tuple[int, bool] | None:
    """(theorem label, scope-verified) for families with a known construction."""
    f = desc.family
    if f in ("d", "q", "sd", "m2"):
        order = desc["order"]
        if order & (order - 1) == 0:
            r = order.bit_length() - 1
            if (f in ("d", "q") and r >= 3) or (f in ("sd", "m2") and r >= 4):
                return (7, True)
        if f in ("q", "sd"):
            return (1, True)
        return None
    if f == "g1":
        return (6, desc["gamma"] == 1)
    if f == "g2":
        return (6, True)
    if f == "g3":
        return (6, desc["sigma"] == 1)
    return None


def _proven_claim(desc: GroupDescriptor) -> int | None:
    """The D(G) value the covered results pin for this descriptor, if any."""
    plan = _witness_plan(desc)
    if plan is None or not plan[1]:
        return None
    return wt.expected_davenport(desc)


def _row_status(desc: GroupDescriptor, is_p: bool, lower: int, upper: int,
                exact_D: int | None) -> str:
    claim = _proven_claim(desc)
    if exact_D is not None:
        if exact_D == upper:
            return "CONFIRMED"
        if claim is not None and exact_D != claim:
            return "REFUTED"
        if is_p and exact_D != upper:
            return "REFUTED"  # an exact value off the Loewy length refutes the row
        return "CONSISTENT"
    if lower > upper:
        return "REFUTED"
    return "CONFIRMED" if lower == upper else "CONSISTENT"


def _upper_without_build(desc: GroupDescriptor, order: int, is_p: bool):
    """Upper bound derivable from the descriptor alone (non-p-group families
    in the scan grid are dicyclic/semidihedral, never cyclic)."""
    if is_p:
        return None
    if desc.family in ("q", "sd"):
        return ((order + 2) // 2, "olson_white")
    return (order, "order")


def compute_scan_row(desc: GroupDescriptor, search_max_order: int,
                     budget: zs.SearchBudget | None = None
                     ) -> tuple[dict, list[ResultRecord]]:
    """Bounds and verdict for one row, plus the records to persist."""
    canonical = desc.canonical()
    t0 = time.perf_counter()
    order = desc.theoretical_order()
    is_p = prime_power(order) is not None and order > 1
    plan = _witness_plan(desc)
    records: list[ResultRecord] = []
    group = build(desc)

    if is_p:
        upper, upper_source = jn.loewy_length(group), "loewy_length"
        records.append(ResultRecord(canonical, "L", upper, True))
    else:
        upper, upper_source = _upper_without_build(desc, order, is_p)

    lower, lower_source = 1, "trivial"
    if plan is not None:
        theorem, in_scope = plan
        spec = wt.witness_for_theorem(desc, theorem, allow_unverified=True)
        free = zs.is_ordered_free(spec.sequence(group))
        bound = spec.length + 1 if free else 1
        records.append(ResultRecord(
            canonical, "witness_check", bound, free,
            witness=[f"{group.labels[el]} ^{spec.multiplicities[nm]}"
                     for nm, el in spec.elements.items()]))
        if free and bound > lower:
            lower = bound
            lower_source = "witness" if in_scope else "witness(out-of-scope)"

    exact_D = None
    if order <= search_max_order:
        result = zs.davenport_ordered(group, budget)
        if result.exact:
            exact_D = result.value
        records.append(ResultRecord(
            canonical, "D", result.value, result.exact,
            witness=result.witness.labels(),
            elapsed_ms=int(1000 * result.elapsed)))
        if exact_D is not None and exact_D > lower:
            lower = exact_D
            lower_source = "search"

    row = {
        "descriptor": canonical,
        "order": order,
        "lower": lower,
        "lower_source": lower_source,
        "upper": upper,
        "upper_source": upper_source,
        "exact_value": exact_D,
        "status": _row_status(desc, is_p, lower, upper, exact_D),
        "cached": False,
        "elapsed_ms": int(1000 * (time.perf_counter() - t0)),
    }
    return row, records


def row_from_cache(desc: GroupDescriptor, search_max_order: int, path) -> dict | None:
    """Assemble a row purely from cached records; None when anything is missing."""
    canonical = desc.canonical()
    t0 = time.perf_counter()
    order = desc.theoretical_order()
    is_p = prime_power(order) is not None and order > 1
    plan = _witness_plan(desc)
    want_search = order <= search_max_order

    if is_p:
        rec_L = cache_get(path, canonical, "L")
        if rec_L is None:
            return None
        upper, upper_source = int(rec_L.value), "loewy_length"
    else:
        upper, upper_source = _upper_without_build(desc, order, is_p)

    lower, lower_source = 1, "trivial"
    if plan is not None:
        rec_w = cache_get(path, canonical, "witness_check")
        if rec_w is None:
            return None
        if rec_w.exact and int(rec_w.value) > lower:
            lower = int(rec_w.value)
            lower_source = "witness" if plan[1] else "witness(out-of-scope)"

    exact_D = None
    if want_search:
        rec_D = cache_get(path, canonical, "D")
        if rec_D is None or not rec_D.exact:
            return None
        exact_D = int(rec_D.value)
        if exact_D > lower:
            lower = exact_D
            lower_source = "search"

    return {
        "descriptor": canonical,
        "order": order,
        "lower": lower,
        "lower_source": lower_source,
        "upper": upper,
        "upper_source": upper_source,
        "exact_value": exact_D,
        "status": _row_status(desc, is_p, lower, upper, exact_D),
        "cached": True,
        "elapsed_ms": int(1000 * (time.perf_counter() - t0)),
    }


def _scan_worker(payload):
    text, search_max_order, states, seconds = payload
    budget = None
    if states is not None or seconds is not None:
        budget = zs.SearchBudget(states or zs.SearchBudget().max_states,
                                 seconds or zs.SearchBudget().max_seconds)
    return compute_scan_row(parse_descriptor(text), search_max_order, budget)


def _cmd_scan(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    primes = [int(p) for p in args.primes.split(",") if p.strip()]
    ranges = _parse_param_ranges(args.param_ranges)
    grid = _grid(families, primes, args.max_order, ranges)
    path = cache_path(args.cache)
    budget = _budget_from(args)
    t0 = time.perf_counter()
    try:
        threads = int(os.environ.get(ENV_THREADS, "1") or "1")
    except ValueError:
        threads = 1

    rows: list[dict | None] = [None] * len(grid)
    misses: list[int] = []
    for i, desc in enumerate(grid):
        if not args.no_cache:
            rows[i] = row_from_cache(desc, args.search_max_order, path)
        if rows[i] is None:
            misses.append(i)

    if threads > 1 and len(misses) > 1:
        payloads = [(grid[i].canonical(), args.search_max_order,
                     args.budget_states, args.budget_seconds) for i in misses]
        workers = min(threads, len(misses))
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for i, (row, records) in zip(misses, pool.map(_scan_worker, payloads)):
                rows[i] = row
                if not args.no_cache:
                    for record in records:
                        cache_put(path, record)
    else:
        for i in misses:
            row, records = compute_scan_row(grid[i], args.search_max_order, budget)
            rows[i] = row
            if not args.no_cache:
                for record in records:
                    cache_put(path, record)
    elapsed_ms = int(1000 * (time.perf_counter() - t0))
    refuted = sum(1 for r in rows if r["status"] == "REFUTED")
    confirmed = sum(1 for r in rows if r["status"] == "CONFIRMED")
    consistent = sum(1 for r in rows if r["status"] == "CONSISTENT")

    if args.json:
        print(json.dumps({"rows": rows, "elapsed_ms": elapsed_ms,
                          "version": __version__}, indent=2, sort_keys=True))
    elif args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0].keys()) if rows
                                else ["descriptor"])
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    else:
        header = f"{'descriptor':<18} {'order':>5} {'lower':>5} {'upper':>5} " \
                 f"{'status':<10} sources"
        print(header)
        for r in rows:
            print(f"{r['descriptor']:<18} {r['order']:>5} {r['lower']:>5} "
                  f"{r['upper']:>5} {r['status']:<10} "
                  f"{r['lower_source']}/{r['upper_source']}"
                  + (" [cached]" if r["cached"] else ""))
        print(f"summary: {len(rows)} rows, {confirmed} CONFIRMED, "
              f"{consistent} CONSISTENT, {refuted} REFUTED ({elapsed_ms} ms)")
    return 1 if refuted else 0


# --- output schema -----------------------------------------------------------------

_OUTPUT_INVARIANTS = {"D", "Dprime", "E", "DA", "L", "L_formula",
                      "witness_check", "oracle_check", "info"}
_STATUSES = {"CONFIRMED", "CONSISTENT", "REFUTED"}


def validate_output(doc) -> list[str]:
    """Structural check of a CLI JSON document against the shipped schema;
    returns a list of problems, empty when valid."""
    problems: list[str] = []
    if not isinstance(doc, dict):
        return ["document is not an object"]
    if "rows" in doc:
        for key, kind in (("rows", list), ("elapsed_ms", int), ("version", str)):
            if not isinstance(doc.get(key), kind):
                problems.append(f"scan document field {key} missing or mistyped")
        for i, row in enumerate(doc.get("rows", [])):
            if not isinstance(row, dict):
                problems.append(f"row {i} is not an object")
                continue
            for key, kind in (("descriptor", str), ("order", int),
                              ("lower", int), ("upper", int)):
                if not isinstance(row.get(key), kind):
                    problems.append(f"row {i} field {key} missing or mistyped")
            if row.get("status") not in _STATUSES:
                problems.append(f"row {i} has bad status {row.get('status')!r}")
        return problems
    for key, kind in (("descriptor", str), ("exact", bool),
                      ("elapsed_ms", int), ("version", str)):
        if not isinstance(doc.get(key), kind):
            problems.append(f"field {key} missing or mistyped")
    if doc.get("invariant") not in _OUTPUT_INVARIANTS:
        problems.append(f"bad invariant {doc.get('invariant')!r}")
    if not isinstance(doc.get("value"), (int, bool)):
        problems.append("field value must be integer or boolean")
    return problems


# --- entry point ------------------------------------------------------------------

def _add_common(sub, cache_flags: bool = False, budget_flags: bool = False):
    sub.add_argument("--json", action="store_true", help="emit one JSON document")
    if cache_flags:
        sub.add_argument("--cache", default=None,
                         help="cache file (default $DAVLAB_CACHE or ./davlab-cache.jsonl)")
        sub.add_argument("--no-cache", action="store_true",
                         help="skip cache reads and writes")
    if budget_flags:
        sub.add_argument("--budget-states", type=int, default=None,
                         help="search state budget (allows larger groups; inexact on trip)")
        sub.add_argument("--budget-seconds", type=float, default=None,
                         help="search time budget in seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="davlab",
        description="Zero-sum invariants and Loewy lengths of small finite groups.",
        epilog=GRAMMAR_HINT)
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="order, exponent, center, class of a group")
    p.add_argument("descriptor")
    _add_common(p)
    p.set_defaults(func=_cmd_info)

    p = subs.add_parser("loewy", help="Loewy length, by chain and/or closed form")
    p.add_argument("descriptor")
    p.add_argument("--method", choices=("direct", "formula", "both"), default="direct")
    _add_common(p)
    p.set_defaults(func=_cmd_loewy)

    p = subs.add_parser("davenport", help="Davenport-type constants by exact search")
    p.add_argument("descriptor")
    p.add_argument("--variant", choices=tuple(_VARIANT_INVARIANT), default="ordered")
    p.add_argument("--weights", default=None, help="weight set for --variant=weighted")
    _add_common(p, cache_flags=True, budget_flags=True)
    p.set_defaults(func=_cmd_davenport)

    p = subs.add_parser("witness", help="extremal product-one-free constructions")
    p.add_argument("descriptor")
    p.add_argument("--theorem", type=int, choices=(1, 6, 7), required=True,
                   help="construction family: 1 dicyclic/semidihedral, "
                        "6 odd-prime class two, 7 order 2^r")
    p.add_argument("--verify", action="store_true",
                   help="check freeness (and the congruence oracle where it applies)")
    p.add_argument("--unverified-explore", action="store_true",
                   help="allow g1 gamma>1 / g3 sigma>1 exploration")
    _add_common(p)
    p.set_defaults(func=_cmd_witness)

    p = subs.add_parser("oracle", help="congruence-system enumeration for g1/g3")
    p.add_argument("descriptor")
    _add_common(p)
    p.set_defaults(func=_cmd_oracle)

    p = subs.add_parser("scan", help="conjecture scan over descriptor grids")
    p.add_argument("--families", default="d,q,sd,m2,g1,g2,g3")
    p.add_argument("--primes", default="3,5")
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--search-max-order", type=int, default=16,
                   help="exact search only at or below this order")
    p.add_argument("--param-ranges", default=None,
                   help="comma list of filters, e.g. gamma=1,alpha<=3 "
                        "(ignored by families lacking the parameter)")
    p.add_argument("--csv", action="store_true", help="CSV table output")
    _add_common(p, cache_flags=True, budget_flags=True)
    p.set_defaults(func=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DescriptorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DavlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
