from __future__ import annotations

import random

from semigraphoids.ci import gamma
from semigraphoids.semigraphoid import StatementSet


def random_subset(rng: random.Random, n: int, density: float | None = None) -> StatementSet:
    p = rng.random() if density is None else density
    bits = sum(1 << k for k in range(gamma(n)) if rng.random() < p)
    return StatementSet(n, bits)


def sample_semigraphoids(masks, count: int, seed: int) -> list[StatementSet]:
    rng = random.Random(seed)
    return [StatementSet(4, int(masks[rng.randrange(len(masks))])) for _ in range(count)]
