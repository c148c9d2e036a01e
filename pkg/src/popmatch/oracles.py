"""Brute-force ground truth at desk scale.

Everything here works by exhaustive enumeration and definition-level
pairwise elections, independently of the structural characterizations
used by the fast verifiers.  Guarded by an edge-count limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

import numpy as np

from .instance import Instance, Matching

DEFAULT_MAX_EDGES = 36

_UNMATCHED_RANK = 30000


class EnumerationGuardError(RuntimeError):
    """The instance exceeds the exhaustive-enumeration guard."""


def enumerate_matchings(inst: Instance, max_edges: Optional[int] = None) -> List[Matching]:
    """All matchings of the instance, including the empty one, in
    lexicographic order of their sorted pair lists."""
    limit = DEFAULT_MAX_EDGES if max_edges is None else max_edges
    edges = sorted(inst.edges)
    if len(edges) > limit:
        raise EnumerationGuardError(
            f"{len(edges)} edges exceed the enumeration guard of {limit}"
        )
    out: List[frozenset] = []

    def extend(start: int, used: Set[str], chosen: list) -> None:
        out.append(frozenset(chosen))
        for i in range(start, len(edges)):
            m, w = edges[i]
            if m in used or w in used:
                continue
            used.update((m, w))
            chosen.append((m, w))
            extend(i + 1, used, chosen)
            chosen.pop()
            used.difference_update((m, w))

    extend(0, set(), [])
    family = [Matching(pairs) for pairs in out]
    family.sort(key=lambda matching: matching.sorted_pairs())
    return family


def _partner_ranks(inst: Instance, family: List[Matching]) -> np.ndarray:
    """Rank-of-partner array, one row per matching, one column per vertex;
    unmatched vertices get a sentinel worse than any rank."""
    vertices = inst.men + inst.women
    index = {v: i for i, v in enumerate(vertices)}
    pr = np.full((len(family), len(vertices)), _UNMATCHED_RANK, dtype=np.int16)
    for i, matching in enumerate(family):
        for m, w in matching.pairs:
            pr[i, index[m]] = inst.rank[m][w]
            pr[i, index[w]] = inst.rank[w][m]
    return pr


@dataclass(frozen=True)
class OracleReport:
    """Definition-level classification of every matching of an instance."""

    family: List[Matching]
    popular: List[bool]
    dominant: List[bool]
    stable: List[bool]

    def popular_set(self) -> List[Matching]:
        return [m for m, ok in zip(self.family, self.popular) if ok]

    def dominant_set(self) -> List[Matching]:
        return [m for m, ok in zip(self.family, self.dominant) if ok]

    def stable_set(self) -> List[Matching]:
        return [m for m, ok in zip(self.family, self.stable) if ok]


def classify(inst: Instance, max_edges: Optional[int] = None) -> OracleReport:
    """Run every pairwise election among all matchings and mark the
    popular (never beaten) and dominant (never defeated) ones."""
    family = enumerate_matchings(inst, max_edges)
    k = len(family)
    pr = _partner_ranks(inst, family)
    sizes = np.array([len(m) for m in family], dtype=np.int16)
    popular = np.ones(k, dtype=bool)
    dominant = np.ones(k, dtype=bool)
    chunk = max(1, (1 << 24) // max(1, k * max(1, pr.shape[1])))
    for lo in range(0, k, chunk):
        hi = min(k, lo + chunk)
        # deficit[i, j] = (#vertices preferring j) - (#vertices preferring i):
        # a vertex prefers the matching ranking its partner lower (better).
        diff = pr[lo:hi, None, :] - pr[None, :, :]
        deficit = np.sign(diff, out=diff).sum(axis=2, dtype=np.int16)
        popular[lo:hi] = (deficit <= 0).all(axis=1)
        defeated = (deficit > 0) | (
            (deficit == 0) & (sizes[None, :] > sizes[lo:hi, None])
        )
        dominant[lo:hi] = ~defeated.any(axis=1)
    stable = [_is_stable_by_definition(inst, m) for m in family]
    return OracleReport(
        family=family,
        popular=list(popular),
        dominant=list(dominant),
        stable=stable,
    )


def _is_stable_by_definition(inst: Instance, matching: Matching) -> bool:
    for a, b in inst.edges:
        if (a, b) in matching.pairs:
            continue
        pa = matching.partner_of(a)
        pb = matching.partner_of(b)
        if (pa is None or inst.rank[a][b] < inst.rank[a][pa]) and (
            pb is None or inst.rank[b][a] < inst.rank[b][pb]
        ):
            return False
    return True


def popular_set(inst: Instance, max_edges: Optional[int] = None) -> List[Matching]:
    """Matchings that never lose a pairwise election."""
    return classify(inst, max_edges).popular_set()


def dominant_set(inst: Instance, max_edges: Optional[int] = None) -> List[Matching]:
    """Matchings never defeated (beaten outright, or tied by something larger)."""
    return classify(inst, max_edges).dominant_set()


def stable_set(inst: Instance, max_edges: Optional[int] = None) -> List[Matching]:
    """Matchings with no blocking pair, by direct edge scan."""
    return [
        m
        for m in enumerate_matchings(inst, max_edges)
        if _is_stable_by_definition(inst, m)
    ]


def popular_edges(inst: Instance, max_edges: Optional[int] = None) -> Set[Tuple[str, str]]:
    """Edges contained in at least one popular matching."""
    out: Set[Tuple[str, str]] = set()
    for matching in popular_set(inst, max_edges):
        out.update(matching.pairs)
    return out


def maximum_matching_size(inst: Instance) -> int:
    """Size of a maximum matching, by alternating-path augmentation."""
    match: dict = {}

    def try_augment(m: str, seen: Set[str]) -> bool:
        for w in inst.pref[m]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match or try_augment(match[w], seen):
                match[w] = m
                return True
        return False

    size = 0
    for m in inst.men:
        if try_augment(m, set()):
            size += 1
    return size
