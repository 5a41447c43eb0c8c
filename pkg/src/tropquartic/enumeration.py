"""Orbit-level enumeration pipeline: flip-graph closure, S3-orbit
deduplication, regularity certification, and c-genericity flags."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import CorpusEntry
from .regularity import c_genericity_flag, is_regular
from .triangulation import (
    Triangulation,
    canonical_form,
    enumerate_full,
    orbit,
)


@dataclass(frozen=True)
class EnumerationResult:
    entries: list[CorpusEntry]  # orbit representatives, canonical order
    total_triangulations: int
    regular_orbits: int
    c_degenerate_orbits: int


def enumerate_orbits(
    seed: Triangulation | None = None, cap: int = 10**6
) -> EnumerationResult:
    """Enumerate all full triangulations, group into S3 orbits, certify
    regularity of each orbit representative, and flag c-degeneracy.

    Orbits are numbered in lexicographic order of their canonical
    representative, so the numbering is seed-independent.
    """
    full = enumerate_full(seed, cap)
    reps: dict[Triangulation, int] = {}
    for T in full:
        canon, _ = canonical_form(T)
        reps.setdefault(canon, 0)
    for canon in reps:
        reps[canon] = len(orbit(canon))
    entries: list[CorpusEntry] = []
    regular_orbits = 0
    c_degenerate = 0
    for n, canon in enumerate(sorted(reps, key=lambda T: T.triangles)):
        witness = is_regular(canon)
        c_generic = True
        if witness is not None:
            regular_orbits += 1
            c_generic = c_genericity_flag(canon, witness)
            if not c_generic:
                c_degenerate += 1
        entries.append(
            CorpusEntry(
                orbit=n,
                size=reps[canon],
                regular=witness is not None,
                c_generic=c_generic,
                triangulation=canon,
            )
        )
    return EnumerationResult(
        entries=entries,
        total_triangulations=len(full),
        regular_orbits=regular_orbits,
        c_degenerate_orbits=c_degenerate,
    )
