"""Seeded rational specialization points for the equivariant parameters."""

from __future__ import annotations

import random
from fractions import Fraction

MAX_ENTRY = 10**4
MAX_REDRAWS = 32


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, MAX_ENTRY), rng.randint(1, MAX_ENTRY))


def random_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    return random_rational(rng), random_rational(rng)
