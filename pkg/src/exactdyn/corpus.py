"""Seeded, reproducible corpora of problem files for tests and batch runs."""
from __future__ import annotations

import json
import os
import random
from typing import Optional, Sequence

from .common import InputError
from .linalg import bareiss_det, identity, mat_mul


def _random_matrix(rng: random.Random, n: int, bound: int) -> list[list[int]]:
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def random_abelian_specs(count: int, seed: int, n: int = 3,
                         bound: int = 3) -> list[dict]:
    """Integer matrices with det != 0, deterministic in the seed."""
    if n > 6 or bound > 9:
        raise InputError("corpus bounds: dimension <= 6, entries <= 9")
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        m = _random_matrix(rng, n, bound)
        if bareiss_det(m) != 0:
            specs.append({"kind": "abelian", "n": n, "matrix": m,
                          "has_translation": False})
    return specs


def _reflection(gram, v) -> Optional[list[list[int]]]:
    """The integer reflection x -> x - 2 q(x,v)/q(v) v, when it is integral."""
    n = len(gram)
    qv = sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))
    if qv == 0:
        return None
    # build column by column: image of e_j
    mat = [[0] * n for _ in range(n)]
    for j in range(n):
        pair = sum(gram[j][k] * v[k] for k in range(n))  # q(e_j, v)
        for i in range(n):
            val = (1 if i == j else 0) * qv - 2 * pair * v[i]
            if val % qv != 0:
                return None
            mat[i][j] = val // qv
    return mat


def random_lattice_isometries(count: int, seed: int,
                              gram: Sequence[Sequence[int]] = ((1, 0), (0, -2)),
                              factors: int = 4) -> list[dict]:
    """Products of integer reflections of the Gram, so every output is a
    certified isometry; deterministic in the seed."""
    rng = random.Random(seed)
    gram = [list(r) for r in gram]
    n = len(gram)
    specs = []
    guard = 0
    while len(specs) < count:
        guard += 1
        if guard > 10000 * (count + 1):
            raise InputError("could not build enough integer reflections")
        g = identity(n)
        built = 0
        while built < factors:
            v = [rng.randint(-3, 3) for _ in range(n)]
            if all(x == 0 for x in v):
                continue
            refl = _reflection(gram, v)
            if refl is None:
                continue
            g = mat_mul(g, refl)
            built += 1
        specs.append({"kind": "lattice", "gram": gram,
                      "matrix": [list(r) for r in g]})
    return specs


def random_cone_systems(count: int, seed: int, dim: int = 2) -> list[dict]:
    """Diagonal endos on the orthant with a mix of fixed and expanding axes,
    plus a big class vanishing on the fixed axes: descent-ready systems."""
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        factors = [1 if rng.random() < 0.4 else rng.randint(2, 4)
                   for _ in range(dim)]
        if all(f == 1 for f in factors):
            factors[rng.randrange(dim)] = 2
        big = [1 if f > 1 else 0 for f in factors]
        gens = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        matrix = [[factors[i] if i == j else 0 for j in range(dim)]
                  for i in range(dim)]
        specs.append({"kind": "cone", "dim": dim, "generators": gens,
                      "matrix": matrix, "big": big})
    return specs


def write_corpus(specs: list[dict], directory: str, prefix: str) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    paths = []
    for i, spec in enumerate(specs):
        path = os.path.join(directory, f"{prefix}{i:04d}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(spec, fh, separators=(",", ":"))
            fh.write("\n")
        paths.append(path)
    return paths


def generate(kind: str, count: int, seed: int, directory: str,
             n: int = 2) -> list[str]:
    if count < 0:
        raise InputError("count must be nonnegative")
    if kind == "abelian":
        specs = random_abelian_specs(count, seed, n=n)
    elif kind == "lattice":
        specs = random_lattice_isometries(count, seed)
    elif kind == "cone":
        specs = random_cone_systems(count, seed, dim=max(n, 2))
    else:
        raise InputError(f"cannot generate corpus of kind {kind!r}")
    return write_corpus(specs, directory, f"{kind}-")
