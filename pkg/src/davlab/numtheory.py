"""Small number-theory helpers: primality, Legendre symbols, least non-residues."""

import math

from .errors import DavlabError


def is_prime(n: int) -> bool:
    """Deterministic trial division, sufficient for the sizes handled here."""
    if n <= 1:
        return False
    if n <= 3:
        return True
    if n % 2 == 0:
        return False
    r = math.isqrt(n)
    i = 3
    while i <= r:
        if n % i == 0:
            return False
        i += 2
    return True


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p: 1, -1, or 0."""
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def least_qnr(p: int) -> int:
    """Least quadratic non-residue modulo an odd prime p.

    The result is always prime and below sqrt(p) + 1; both facts are
    asserted because downstream constructions rely on them.
    """
    if p < 3 or not is_prime(p):
        raise DavlabError(f"least_qnr requires an odd prime, got {p}")
    q = 2
    while legendre_symbol(q, p) != -1:
        q += 1
    if not is_prime(q) or not q < math.isqrt(p) + 2:
        raise DavlabError(f"least non-residue {q} of {p} violates expected bounds")
    return q


def half_exponent(x: int, modulus: int) -> int:
    """x times the inverse of 2 modulo an odd modulus.

    Resolves exponents written with a denominator of 2 against the order of
    the base element; inv(2) = (modulus + 1) / 2.
    """
    if modulus % 2 == 0:
        raise DavlabError(f"half_exponent needs an odd modulus, got {modulus}")
    inv2 = (modulus + 1) // 2
    return (x * inv2) % modulus


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and p prime, or None."""
    if n <= 1:
        return None
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return (n, 1)
