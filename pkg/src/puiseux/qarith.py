"""Exact rational arithmetic, prime generation, and p-adic valuations.

Everything downstream builds on this module.  There is deliberately no
floating point anywhere: all quantities are arbitrary-precision integers
or reduced fractions, so valuation arguments stay valid.
"""

from __future__ import annotations

import math
import re
import threading
from bisect import bisect_left
from fractions import Fraction
from typing import Iterable

from .errors import InputError

#: Exact reduced fraction: stored with gcd(|num|, den) = 1 and den >= 1,
#: zero represented as 0/1, ordered like the reals.  The stdlib type already
#: maintains exactly these invariants.
Rational = Fraction

RationalLike = Fraction | int | str

_RAT_RE = re.compile(r"^([+-]?\d+)\s*(?:/\s*([+-]?\d+))?$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "n/d" string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse the wire format "n/d" (or plain "n"); decimals are rejected."""
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise InputError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in rational literal {text!r}")
    return Fraction(num, den)


def format_rational(q: RationalLike) -> str:
    """Render as "n/d", omitting "/d" when the denominator is 1."""
    return str(as_rational(q))


def reduce(numerator: int, denominator: int) -> Fraction:
    """Reduced fraction numerator/denominator with positive denominator."""
    if denominator == 0:
        raise InputError("denominator must be nonzero")
    return Fraction(numerator, denominator)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


# Shared prime table.  It only ever grows, and growth happens under a lock;
# readers take a reference once and index into it, which is safe because
# entries never move.
_primes: list[int] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
_primes_lock = threading.Lock()


def _grow_primes(count: int) -> list[int]:
    with _primes_lock:
        table = _primes
        candidate = table[-1]
        while len(table) < count:
            candidate += 2
            if is_prime(candidate):
                table.append(candidate)
        return table


def nth_prime(n: int, lower_bound: int = 0) -> int:
    """The n-th prime that is >= lower_bound.

    lower_bound 0 or 2 gives the ordinary prime sequence, 3 the odd
    primes, 5 the primes excluding 2 and 3.
    """
    if n < 1:
        raise InputError("prime index must be positive")
    table = _primes
    while True:
        start = bisect_left(table, lower_bound)
        if len(table) - start >= n:
            return table[start + n - 1]
        table = _grow_primes(len(table) + n + 16)


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of |n| in increasing order."""
    n = abs(n)
    out = []
    for p in (2, 3):
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                out.append(p)
                while n % p == 0:
                    n //= p
        f += 6
    if n > 1:
        out.append(n)
    return out


def _int_valuation(m: int, p: int) -> int:
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def padic(q: RationalLike, p: int) -> int:
    """Exponent of the prime p in the nonzero rational q.

    The value is the exponent of p in the numerator minus the exponent of
    p in the denominator, so q * p**(-padic(q, p)) has p dividing neither.
    """
    q = as_rational(q)
    if q == 0:
        raise InputError("p-adic valuation is undefined at zero")
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def lcm_den(values: Iterable[RationalLike]) -> int:
    """Least common multiple of the denominators of a nonempty list."""
    dens = [as_rational(v).denominator for v in values]
    if not dens:
        raise InputError("need at least one value")
    return math.lcm(*dens)
