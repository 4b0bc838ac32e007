"""Seeded random knowledge bases and queries for the property suites."""
from __future__ import annotations

import random

from .concepts import And, Concept, Exists, Forall, Name, Not, Or, Top
from .kb import DefModule, ModularKB, StrictInclusion, TypicalityInclusion
from .tableau import TBoxView

NAMES = ("A", "B", "C", "D", "E")


def random_concept(rng: random.Random, names=NAMES, depth: int = 2, roles=()) -> Concept:
    if depth <= 0 or rng.random() < 0.35:
        c = Name(rng.choice(names))
        return Not(c) if rng.random() < 0.3 else c
    pick = rng.random()
    if roles and pick < 0.2:
        ctor = Exists if rng.random() < 0.5 else Forall
        return ctor(rng.choice(roles), random_concept(rng, names, depth - 1, roles))
    if pick < 0.3:
        return Not(random_concept(rng, names, depth - 1, roles))
    ctor = And if pick < 0.65 else Or
    return ctor(random_concept(rng, names, depth - 1, roles), random_concept(rng, names, depth - 1, roles))


def random_default(rng, names=NAMES, roles=()) -> TypicalityInclusion:
    return TypicalityInclusion(random_concept(rng, names, 1, roles), random_concept(rng, names, 1, roles))


def _consistent(strict) -> bool:
    return TBoxView(strict).satisfiable(Top()).satisfiable


def random_prop_kb(
    rng: random.Random, max_atoms: int = 5, max_defaults: int = 6, max_strict: int = 3
) -> ModularKB:
    """Role-free KB with all defaults in one module whose subject is Top."""
    names = NAMES[: rng.randint(2, max_atoms)]
    while True:
        strict = tuple(
            StrictInclusion(random_concept(rng, names, 1), random_concept(rng, names, 1))
            for _ in range(rng.randint(0, max_strict))
        )
        if _consistent(strict):
            break
    defaults = tuple(dict.fromkeys(random_default(rng, names) for _ in range(rng.randint(0, max_defaults))))
    return ModularKB(strict, (DefModule("all", Top(), defaults),))


def random_modular_kb(
    rng: random.Random,
    max_modules: int = 2,
    names=NAMES[:4],
    roles=(),
    max_defaults: int = 5,
    max_strict: int = 2,
) -> ModularKB:
    """Small KB with up to ``max_modules`` modules; defaults may be shared."""
    while True:
        strict = tuple(
            StrictInclusion(random_concept(rng, names, 1, roles), random_concept(rng, names, 1, roles))
            for _ in range(rng.randint(0, max_strict))
        )
        if _consistent(strict):
            break
    k = rng.randint(1, max_modules)
    buckets: list[list[TypicalityInclusion]] = [[] for _ in range(k)]
    for _ in range(rng.randint(1, max_defaults)):
        d = random_default(rng, names, roles)
        homes = rng.sample(range(k), rng.randint(1, k))
        for h in homes:
            if d not in buckets[h]:
                buckets[h].append(d)
    modules = []
    for i, defaults in enumerate(buckets):
        subject = Top() if rng.random() < 0.3 else Name(rng.choice(names))
        modules.append(DefModule(f"m{i + 1}", subject, tuple(defaults)))
    return ModularKB(strict, tuple(modules))


def random_query(rng: random.Random, names=NAMES, roles=()) -> TypicalityInclusion:
    return TypicalityInclusion(random_concept(rng, names, 2, roles), random_concept(rng, names, 1, roles))
