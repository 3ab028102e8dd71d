"""Shared brute-force oracles and instance generators.

The oracles here are deliberately independent of the library's search
paths: factorization vectors come from plain cartesian-product enumeration,
and family membership from a depth-first scan whose only pruning is the
elementary fact that a residual's denominator must divide what the
remaining generators can produce.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from puiseux import FgMonoid


def oracle_vectors(int_gens: list[int], target: int) -> list[tuple[int, ...]]:
    """All vectors x with sum x_i * g_i == target, by product enumeration."""
    ranges = [range(target // g + 1) for g in int_gens]
    return sorted(
        xs
        for xs in itertools.product(*ranges)
        if sum(x * g for x, g in zip(xs, int_gens)) == target
    )


def oracle_member(int_gens: list[int], target: int) -> bool:
    return target == 0 or bool(oracle_vectors(int_gens, target))


def oracle_atoms(int_gens: list[int]) -> list[int]:
    """Generators that are not combinations of the other generators."""
    out = []
    for g in int_gens:
        others = [h for h in int_gens if h != g]
        if not others or not oracle_member(others, g):
            out.append(g)
    return sorted(out)


def oracle_value_buckets(int_gens: list[int], limit: int) -> dict[int, list[tuple[int, ...]]]:
    """Every vector with value <= limit, bucketed by value."""
    buckets: dict[int, list[tuple[int, ...]]] = {}
    ranges = [range(limit // g + 1) for g in int_gens]
    for xs in itertools.product(*ranges):
        v = sum(x * g for x, g in zip(xs, int_gens))
        if v <= limit:
            buckets.setdefault(v, []).append(xs)
    return buckets


def oracle_fraction_member(gens: list[Fraction], target: Fraction) -> bool:
    """Exhaustive membership over rational generators.

    Complete: branches on every multiplicity of each generator in order.
    The only prunes are nonnegativity and that the residual's denominator
    must divide the lcm of the remaining generators' denominators.
    """
    gens = list(gens)
    suffix_den = [1] * (len(gens) + 1)
    for i in range(len(gens) - 1, -1, -1):
        suffix_den[i] = math.lcm(suffix_den[i + 1], gens[i].denominator)

    def descend(i: int, rest: Fraction) -> bool:
        if rest == 0:
            return True
        if rest < 0 or i == len(gens):
            return False
        if suffix_den[i] % rest.denominator != 0:
            return False
        top = int(rest // gens[i])
        return any(descend(i + 1, rest - m * gens[i]) for m in range(top + 1))

    return descend(0, target)


def random_extension_instances(seed: int, count: int) -> list[tuple[FgMonoid, Fraction]]:
    """Pairs (M, r) with M a small random monoid and r outside M."""
    rng = random.Random(seed)
    out: list[tuple[FgMonoid, Fraction]] = []
    while len(out) < count:
        k = rng.randint(2, 4)
        gens = {Fraction(rng.randint(1, 12), rng.randint(1, 10)) for _ in range(k)}
        m = FgMonoid(gens)
        r = Fraction(rng.randint(1, 12), rng.randint(1, 10))
        if m.contains(r):
            continue
        out.append((m, r))
    return out


def random_member(rng: random.Random, m: FgMonoid, max_parts: int = 5) -> Fraction:
    """A random element of m as a small combination of its atoms."""
    total = Fraction(0)
    for _ in range(rng.randint(0, max_parts)):
        total += rng.choice(m.atoms)
    return total
