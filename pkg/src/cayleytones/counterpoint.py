"""Consonant/dissonant dichotomies and exhaustive affine witness searches."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .cayley import CayleyGraph, GeneratorSet, is_isometry_by_generators
from .modular import (
    AffineMap,
    Automorphism,
    ModRing,
    fixed_points,
    is_involution,
    units,
)

SORT_ENV_VAR = "CAYLEYTONES_SEED_SORT"


class NoStrongDichotomyError(ValueError):
    """Raised when a full half/half partition is impossible (odd n)."""


class AmbiguousRefinementError(ValueError):
    """Raised when no single partition minimizes the oriented lengths."""

    def __init__(self, ties: list[tuple[int, ...]]):
        super().__init__(f"tied partitions: {ties}")
        self.ties = ties


def _sorting_enabled() -> bool:
    return os.environ.get(SORT_ENV_VAR, "1") != "0"


@dataclass(frozen=True)
class Dichotomy:
    """Disjoint consonant/dissonant subsets of Z_n.

    A strong dichotomy partitions all of Z_n into equal halves; weaker
    ones may leave residues unassigned.
    """

    ring: ModRing
    consonant: frozenset[int]
    dissonant: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "consonant", frozenset(self.consonant))
        object.__setattr__(self, "dissonant", frozenset(self.dissonant))
        universe = range(self.ring.n)
        if not self.consonant <= set(universe) or not self.dissonant <= set(universe):
            raise ValueError("dichotomy members must be residues")
        if self.consonant & self.dissonant:
            raise ValueError("consonant and dissonant sets must be disjoint")

    @property
    def is_full_partition(self) -> bool:
        return len(self.consonant) + len(self.dissonant) == self.ring.n

    def to_dict(self) -> dict:
        return {
            "n": self.ring.n,
            "K": sorted(self.consonant),
            "D": sorted(self.dissonant),
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def fux_dichotomy() -> Dichotomy:
    """The classical twelve-note consonant/dissonant split."""
    return Dichotomy(
        ModRing(12),
        frozenset({0, 3, 4, 7, 8, 9}),
        frozenset({1, 2, 5, 6, 10, 11}),
    )


@dataclass(frozen=True)
class ConsonantSeed:
    """The minimal consonances {0} union S for a symmetric generating S."""

    generators: GeneratorSet

    def __post_init__(self) -> None:
        if not self.generators.is_symmetric:
            raise ValueError("seed requires a symmetric generator set")
        if not self.generators.is_generating():
            raise ValueError("seed requires a generating set")

    @property
    def ring(self) -> ModRing:
        return self.generators.ring

    @property
    def members(self) -> frozenset[int]:
        return frozenset({0} | set(self.generators.elements))

    @classmethod
    def from_system(cls, system) -> "ConsonantSeed":
        return cls(system.symmetric_generator_set)


def sumset(A: Iterable[int], B: Iterable[int], ring: ModRing) -> frozenset[int]:
    """All pairwise sums a+b mod n."""
    return frozenset((a + b) % ring.n for a in A for b in B)


def _metric_generators(G: CayleyGraph) -> GeneratorSet:
    if G.oriented:
        raise ValueError("counterpoint checks run on the unoriented graph")
    return GeneratorSet(G.ring, G.steps)


def _is_affine_isometry(T: AffineMap, S: GeneratorSet) -> bool:
    # A translate of an automorphism preserves the metric exactly when
    # the automorphism part does, so only the multiplier matters.
    return is_isometry_by_generators(T.automorphism, S)


def satisfies_strong(T: AffineMap, dichotomy: Dichotomy, G: CayleyGraph) -> bool:
    """The strong condition: T an isometric involution with T(K) = D."""
    S = _metric_generators(G)
    if not dichotomy.is_full_partition:
        raise ValueError("strong condition needs a full partition of Z_n")
    if not is_involution(T):
        return False
    if not _is_affine_isometry(T, S):
        return False
    return {T(x) for x in dichotomy.consonant} == set(dichotomy.dissonant)


def satisfies_weak(T: AffineMap, seed: ConsonantSeed, G: CayleyGraph) -> bool:
    """The weak condition: T an isometric involution moving the seed
    consonances entirely off themselves."""
    S = _metric_generators(G)
    if not is_involution(T):
        return False
    if not _is_affine_isometry(T, S):
        return False
    members = seed.members
    return not ({T(x) for x in members} & members)


@dataclass(frozen=True)
class PartitionRecord:
    """One consonant/dissonant split found by a search, with its witness."""

    consonant: tuple[int, ...]
    dissonant: tuple[int, ...]
    multiplier: int
    offset: int
    strong_witness_count: int

    def to_dict(self) -> dict:
        return {
            "K": list(self.consonant),
            "D": list(self.dissonant),
            "h": self.multiplier,
            "w": self.offset,
            "strong_witness_count": self.strong_witness_count,
        }


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive affine search, ordered deterministically."""

    n: int
    generators: tuple[int, ...]
    examined: int
    witnesses: tuple[AffineMap, ...]
    partitions: tuple[PartitionRecord, ...]
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "S": list(self.generators),
            "examined": self.examined,
            "witnesses": [
                {"h": T.multiplier, "w": T.offset} for T in self.witnesses
            ],
            "partitions": [record.to_dict() for record in self.partitions],
            "notes": list(self.notes),
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _sorted_witnesses(witnesses: list[AffineMap]) -> tuple[AffineMap, ...]:
    if _sorting_enabled():
        return tuple(sorted(witnesses, key=AffineMap.sort_key))
    return tuple(witnesses)


def _preserving_multipliers(S: GeneratorSet) -> set[int]:
    """Units whose automorphism maps S onto itself (the isometries)."""
    ring = S.ring
    return {
        h
        for h in units(ring)
        if is_isometry_by_generators(Automorphism(ring, h), S)
    }


def find_affine_for_partition(
    dichotomy: Dichotomy, G: CayleyGraph
) -> list[AffineMap]:
    """Scan all |U(n)|*n affine maps for strong witnesses.

    The multiplier-side isometry test is hoisted out of the offset loop;
    results match filtering the full scan through satisfies_strong.
    """
    S = _metric_generators(G)
    if not dichotomy.is_full_partition:
        raise ValueError("strong condition needs a full partition of Z_n")
    ring = G.ring
    n = ring.n
    preserving = _preserving_multipliers(S)
    K = dichotomy.consonant
    D = set(dichotomy.dissonant)
    found = []
    for h in units(ring):
        if h not in preserving or (h * h) % n != 1:
            continue
        for w in range(n):
            if ((h + 1) * w) % n != 0:
                continue
            if {(h * x + w) % n for x in K} == D:
                found.append(AffineMap(ring, h, w))
    return list(_sorted_witnesses(found))


def strong_search_report(dichotomy: Dichotomy, G: CayleyGraph) -> SearchReport:
    """Full-scan report of the strong witnesses for one partition."""
    S = _metric_generators(G)
    witnesses = find_affine_for_partition(dichotomy, G)
    n = G.ring.n
    records = []
    if witnesses:
        first = witnesses[0]
        records.append(
            PartitionRecord(
                tuple(sorted(dichotomy.consonant)),
                tuple(sorted(dichotomy.dissonant)),
                first.multiplier,
                first.offset,
                len(witnesses),
            )
        )
    notes = (
        f"strong witnesses for K={sorted(dichotomy.consonant)}: {len(witnesses)}",
    )
    return SearchReport(
        n,
        S.elements,
        len(units(G.ring)) * n,
        tuple(witnesses),
        tuple(records),
        notes,
    )


def enumerate_weak_witnesses(n: int, S: Iterable[int]) -> SearchReport:
    """Scan all |U(n)|*n affine maps for weak witnesses.

    The report cross-checks the sufficient criterion: every offset
    outside the seed sumset must yield a witness with multiplier n-1.
    """
    ring = ModRing(n)
    seed = ConsonantSeed(GeneratorSet(ring, tuple(S)))
    unit_list = units(ring)
    examined = len(unit_list) * n
    members = seed.members
    preserving = _preserving_multipliers(seed.generators)
    witnesses = []
    involutive_isometries = 0
    for h in unit_list:
        if h not in preserving or (h * h) % n != 1:
            continue
        for w in range(n):
            if ((h + 1) * w) % n != 0:
                continue
            involutive_isometries += 1
            image = {(h * x + w) % n for x in members}
            if not (image & members):
                witnesses.append(AffineMap(ring, h, w))
    outside = sorted(set(range(n)) - set(sumset(members, members, ring)))
    witness_keys = {(T.multiplier, T.offset) for T in witnesses}
    missing = [w for w in outside if (n - 1, w) not in witness_keys]
    if missing:
        raise AssertionError(
            f"offsets {missing} outside the seed sumset failed the weak check"
        )
    notes = (
        f"seed consonances: {sorted(members)}",
        f"involutive isometries among candidates: {involutive_isometries}",
        f"offsets outside seed sumset (all confirmed with multiplier {n - 1}): {outside}",
    )
    return SearchReport(
        n,
        seed.generators.elements,
        examined,
        _sorted_witnesses(witnesses),
        (),
        notes,
    )


def _extensions(
    T: AffineMap, base: frozenset[int], pool: list[int], needed: int
) -> list[frozenset[int]]:
    """All supersets base + (needed picks from pool) kept off their T-image.

    Backtracking in ascending order; choosing z removes T(z) from play.
    """
    results = []

    def step(start: int, chosen: list[int]) -> None:
        if len(chosen) == needed:
            results.append(base | set(chosen))
            return
        for i in range(start, len(pool)):
            z = pool[i]
            image = T(z)
            if image in base or image in chosen or image == z:
                continue
            chosen.append(z)
            step(i + 1, chosen)
            chosen.pop()

    step(0, [])
    return results


def extend_to_partitions(seed: ConsonantSeed, G: CayleyGraph) -> SearchReport:
    """Grow the seed to full half/half partitions under each weak witness.

    Every returned partition is re-verified by counting its strong
    witnesses over the full affine scan rather than trusting the search.
    """
    n = seed.ring.n
    if n % 2 == 1:
        raise NoStrongDichotomyError(
            f"n={n} is odd: halves of equal size cannot partition Z_n"
        )
    weak_report = enumerate_weak_witnesses(n, seed.generators.elements)
    members = seed.members
    needed = n // 2 - len(members)
    if needed < 0:
        raise ValueError("seed larger than half of Z_n")
    found: dict[frozenset[int], list[AffineMap]] = {}
    subsets_examined = 0
    for T in weak_report.witnesses:
        image = {T(x) for x in members}
        pool = sorted(set(range(n)) - members - image)
        extensions = _extensions(T, members, pool, needed)
        subsets_examined += len(extensions)
        for K in extensions:
            found.setdefault(frozenset(K), []).append(T)
    records = []
    for K, producers in found.items():
        D = frozenset(range(n)) - K
        dichotomy = Dichotomy(seed.ring, K, D)
        strong = find_affine_for_partition(dichotomy, G)
        best = min(strong or producers, key=AffineMap.sort_key)
        records.append(
            PartitionRecord(
                tuple(sorted(K)),
                tuple(sorted(D)),
                best.multiplier,
                best.offset,
                len(strong),
            )
        )
    if _sorting_enabled():
        records.sort(key=lambda r: (r.multiplier, r.offset, r.consonant))
    notes = weak_report.notes + (
        f"half-partition extensions found: {len(records)}",
        f"extension subsets accepted across witnesses: {subsets_examined}",
    )
    return SearchReport(
        n,
        seed.generators.elements,
        weak_report.examined,
        weak_report.witnesses,
        tuple(records),
        notes,
    )


def maximal_consonant_extension(
    seed: ConsonantSeed, T: AffineMap, G: CayleyGraph
) -> SearchReport:
    """All maximal supersets of the seed kept disjoint from their T-image.

    Fixed points of T can never join, so for odd n the consonances stop
    at (n-1)/2 elements.
    """
    if not satisfies_weak(T, seed, G):
        raise ValueError("the supplied map does not satisfy the weak condition")
    n = seed.ring.n
    members = seed.members
    fixed = sorted(fixed_points(T))
    image = {T(x) for x in members}
    pool = sorted(set(range(n)) - members - image - set(fixed))
    # The pool splits into pairs {z, T(z)}; a maximal set picks one of each.
    orbits = sorted({tuple(sorted((z, T(z)))) for z in pool})
    results: list[frozenset[int]] = []

    def choose(index: int, chosen: list[int]) -> None:
        if index == len(orbits):
            results.append(members | set(chosen))
            return
        for z in orbits[index]:
            chosen.append(z)
            choose(index + 1, chosen)
            chosen.pop()

    choose(0, [])
    records = []
    for K in results:
        D = frozenset(T(x) for x in K)
        strong = 0
        if len(K) + len(D) == n:
            strong = len(find_affine_for_partition(Dichotomy(seed.ring, K, D), G))
        records.append(
            PartitionRecord(
                tuple(sorted(K)), tuple(sorted(D)), T.multiplier, T.offset, strong
            )
        )
    if _sorting_enabled():
        records.sort(key=lambda r: r.consonant)
    notes = (
        f"seed consonances: {sorted(members)}",
        f"fixed points excluded from candidates: {fixed}",
        f"free orbit pairs under the involution: {[list(o) for o in orbits]}",
        f"maximal consonant sets: {len(records)} of size {len(members) + len(orbits)}",
    )
    return SearchReport(
        n,
        seed.generators.elements,
        len(results),
        (T,),
        tuple(records),
        notes,
    )


def minimal_oriented_refinement(
    report: SearchReport, oriented_graph: CayleyGraph
) -> Dichotomy:
    """Pick the partition whose added consonances are closest to 0 along
    directed edges; ties are an error rather than a silent choice."""
    if not oriented_graph.oriented:
        raise ValueError("refinement requires an oriented graph")
    if oriented_graph.ring.n != report.n:
        raise ValueError("graph and report disagree on the modulus")
    if not report.partitions:
        raise ValueError("no partitions to refine")
    seed_members = {0} | set(report.generators)
    scored = []
    for record in report.partitions:
        added = sorted(set(record.consonant) - seed_members)
        score = sum(oriented_graph.oriented_path_length(0, z) for z in added)
        scored.append((score, record))
    best_score = min(score for score, _ in scored)
    best = [record for score, record in scored if score == best_score]
    if len(best) > 1:
        raise AmbiguousRefinementError([record.consonant for record in best])
    winner = best[0]
    ring = ModRing(report.n)
    return Dichotomy(ring, frozenset(winner.consonant), frozenset(winner.dissonant))
