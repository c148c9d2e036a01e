"""Certificate-producing verifiers for popularity and dominance.

Popularity is checked by alternating-walk reachability in the pruned
subgraph: a matching fails exactly when some (+,+) edge sits on an
alternating cycle, on an alternating path from an unmatched vertex, or
on an alternating path together with a second (+,+) edge.  Dominance
additionally requires the absence of an augmenting path in the pruned
subgraph.  Every negative verdict carries a replayable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .elections import MINUS, PLUS, LabeledGraph, label_edges
from .instance import Instance, Matching

Edge = Tuple[str, str]


@dataclass(frozen=True)
class Certificate:
    """A replayable witness of a popularity or dominance violation.

    kind: blocking-pair | pp-cycle | pp-path-from-unmatched |
    two-pp-path | augmenting-path | partition-overlap.  path is the
    vertex sequence of the witness walk (first == last for a cycle);
    pp_edges names the (+,+) edges the walk uses.
    """

    kind: str
    path: Tuple[str, ...]
    pp_edges: Tuple[Edge, ...] = ()


@dataclass(frozen=True)
class Partition:
    """The alternating-reachability closure seeded by blocking pairs
    (and optionally by unmatched vertices)."""

    a0: FrozenSet[str]
    a1: FrozenSet[str]
    b0: FrozenSet[str]
    b1: FrozenSet[str]
    via_unmatched: FrozenSet[str]
    via_blocking: FrozenSet[str]


def partition(inst: Instance, matching: Matching, seed_unmatched: bool) -> Partition:
    """Seed the four sets and close them under adjacency in the pruned
    subgraph.  Deterministic: vertices are scanned in declared order."""
    labeled = label_edges(inst, matching)
    a0: set = set()
    a1: set = set()
    b0: set = set()
    b1: set = set()
    via_unmatched: set = set()
    via_blocking: set = set()

    if seed_unmatched:
        for a in inst.men:
            if not matching.is_matched(a):
                a1.add(a)
                via_unmatched.add(a)
        for b in inst.women:
            if not matching.is_matched(b):
                b0.add(b)
                via_unmatched.add(b)
    for (y, z), lab in sorted(labeled.label.items()):
        if lab != (PLUS, PLUS):
            continue
        a0.add(y)
        b1.add(z)
        via_blocking.update((y, z))
        py = matching.partner_of(y)
        if py is not None:
            b0.add(py)
            via_blocking.add(py)
        pz = matching.partner_of(z)
        if pz is not None:
            a1.add(pz)
            via_blocking.add(pz)

    adj = labeled.gm_adj
    changed = True
    while changed:
        changed = False
        for a in inst.men:
            if a in a0 or not matching.is_matched(a):
                continue
            if any(w in b0 for w in adj[a]):
                a0.add(a)
                partner = matching.partner_of(a)
                b0.add(partner)
                origin = via_unmatched if any(
                    w in b0 and w in via_unmatched for w in adj[a]
                ) else via_blocking
                origin.update((a, partner))
                changed = True
        for b in inst.women:
            if b in b1 or not matching.is_matched(b):
                continue
            if any(m in a1 for m in adj[b]):
                b1.add(b)
                partner = matching.partner_of(b)
                a1.add(partner)
                origin = via_unmatched if any(
                    m in a1 and m in via_unmatched for m in adj[b]
                ) else via_blocking
                origin.update((b, partner))
                changed = True
    return Partition(
        a0=frozenset(a0),
        a1=frozenset(a1),
        b0=frozenset(b0),
        b1=frozenset(b1),
        via_unmatched=frozenset(via_unmatched),
        via_blocking=frozenset(via_blocking),
    )


def _reach_men(
    inst: Instance,
    matching: Matching,
    labeled: LabeledGraph,
    sources: List[str],
) -> Tuple[Dict[str, Optional[Tuple[str, str]]], List[str]]:
    """Men reachable by an alternating walk that is ready to leave along
    a non-matching edge (walk direction man -> woman).  Returns parent
    links (man -> (previous man, woman crossed)) and the BFS order."""
    parent: Dict[str, Optional[Tuple[str, str]]] = {}
    order: List[str] = []
    for s in sources:
        if s not in parent:
            parent[s] = None
            order.append(s)
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for w in labeled.gm_adj[x]:
            if matching.partner_of(x) == w:
                continue
            nxt = matching.partner_of(w)
            if nxt is None or nxt in parent:
                continue
            parent[nxt] = (x, w)
            order.append(nxt)
    return parent, order


def _reach_women(
    inst: Instance,
    matching: Matching,
    labeled: LabeledGraph,
    sources: List[str],
) -> Dict[str, Optional[Tuple[str, str]]]:
    """Mirror image of _reach_men for walks directed woman -> man."""
    parent: Dict[str, Optional[Tuple[str, str]]] = {}
    order: List[str] = []
    for s in sources:
        if s not in parent:
            parent[s] = None
            order.append(s)
    i = 0
    while i < len(order):
        z = order[i]
        i += 1
        for m in labeled.gm_adj[z]:
            if matching.partner_of(z) == m:
                continue
            nxt = matching.partner_of(m)
            if nxt is None or nxt in parent:
                continue
            parent[nxt] = (z, m)
            order.append(nxt)
    return parent


def _chain_to(parent: Dict[str, Optional[Tuple[str, str]]], target: str) -> List[str]:
    """Unwind parent links into the vertex sequence source ... target."""
    out: List[str] = [target]
    cur = target
    while parent[cur] is not None:
        prev, via = parent[cur]
        out.append(via)
        out.append(prev)
        cur = prev
    out.reverse()
    return out


def is_popular(
    inst: Instance, matching: Matching
) -> Tuple[bool, Optional[Certificate]]:
    """Check the three alternating-walk conditions in the pruned
    subgraph; on failure return the first certificate found, scanning
    (+,+) edges lexicographically and preferring unmatched-path, then
    two-edge-path, then cycle witnesses."""
    labeled = label_edges(inst, matching)
    pp = sorted(e for e, lab in labeled.label.items() if lab == (PLUS, PLUS))
    if not pp:
        return True, None

    for a, b in pp:
        if not matching.is_matched(a):
            return False, Certificate("pp-path-from-unmatched", (a, b), ((a, b),))
        if not matching.is_matched(b):
            return False, Certificate("pp-path-from-unmatched", (b, a), ((a, b),))

    unmatched_men = [m for m in inst.men if not matching.is_matched(m)]
    unmatched_women = [w for w in inst.women if not matching.is_matched(w)]
    men_parent, _ = _reach_men(inst, matching, labeled, unmatched_men)
    women_parent = _reach_women(inst, matching, labeled, unmatched_women)
    for a, b in pp:
        if a in men_parent:
            chain = _chain_to(men_parent, a)
            if b in chain:
                # the walk closes on itself: the suffix from b is an
                # alternating cycle through the (+,+) edge
                cycle = tuple(chain[chain.index(b) :]) + (b,)
                return False, Certificate("pp-cycle", cycle, ((a, b),))
            path = tuple(chain) + (b,)
            return False, Certificate("pp-path-from-unmatched", path, ((a, b),))
        if b in women_parent:
            chain = _chain_to(women_parent, b)
            if a in chain:
                cycle = tuple(chain[chain.index(a) :]) + (a,)
                return False, Certificate("pp-cycle", cycle, ((a, b),))
            path = tuple(chain) + (a,)
            return False, Certificate("pp-path-from-unmatched", path, ((a, b),))

    # Reachability forward from the woman side of each (+,+) edge; reused
    # for the two-edge-path and cycle checks.
    reach: Dict[Edge, Dict[str, Optional[Tuple[str, str]]]] = {}
    for a, b in pp:
        parent, _ = _reach_men(inst, matching, labeled, [matching.partner_of(b)])
        reach[(a, b)] = parent

    for a, b in pp:
        parent = reach[(a, b)]
        for a2, b2 in pp:
            if (a2, b2) == (a, b) or a2 not in parent:
                continue
            path = (a, b) + tuple(_chain_to(parent, a2)) + (b2,)
            if len(set(path)) == len(path):
                return False, Certificate(
                    "two-pp-path", path, ((a, b), (a2, b2))
                )
            # A repeated vertex means the walk closes on itself; the
            # cycle check below reports that violation instead.

    for a, b in pp:
        parent = reach[(a, b)]
        if a in parent:
            cycle = (b,) + tuple(_chain_to(parent, a)) + (b,)
            return False, Certificate("pp-cycle", cycle, ((a, b),))
    return True, None


def is_dominant(
    inst: Instance, matching: Matching
) -> Tuple[bool, Optional[Certificate]]:
    """Popularity plus the absence of an augmenting path in the pruned
    subgraph."""
    ok, cert = is_popular(inst, matching)
    if not ok:
        return False, cert
    labeled = label_edges(inst, matching)
    unmatched_men = [m for m in inst.men if not matching.is_matched(m)]
    parent, order = _reach_men(inst, matching, labeled, unmatched_men)
    for x in order:
        for w in labeled.gm_adj[x]:
            if matching.partner_of(w) is None and matching.partner_of(x) != w:
                path = tuple(_chain_to(parent, x)) + (w,)
                return False, Certificate("augmenting-path", path)
    return True, None
