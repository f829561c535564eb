"""Simultaneous pre-fixed, post-fixed, and fixed pairs of a mutual
generator pair, their fibers, and the four component projections.

Everything is computed by exhaustive scan with no caching: at desk scale
the scan is cheap, and it doubles as the oracle the solvers are checked
against.
"""
from __future__ import annotations

from dataclasses import dataclass

from .genfun import MutualPair
from .lattice import CapacityError

PAIR_SCAN_CAP = 1 << 20


@dataclass(frozen=True)
class PairPoint:
    """One point of the product carrier: o in the first lattice, p in the second."""
    o: int
    p: int


@dataclass(frozen=True)
class ComponentSets:
    """Projections of the simultaneous point classes.

    c and d are the first/second components over pre-fixed pairs, e and
    fset over post-fixed pairs. None of the four can be empty: the top
    pair is always pre-fixed and the bottom pair always post-fixed.
    """
    c: frozenset[int]
    d: frozenset[int]
    e: frozenset[int]
    fset: frozenset[int]


@dataclass(frozen=True)
class FiberSet:
    """Partners of one anchored element; may be empty, which is a value
    and not an error."""
    anchor: int
    side: str  # "O" anchors in the first lattice, "P" in the second
    kind: str  # "pre" | "post"
    fiber: frozenset[int]


def _check_point(mp: MutualPair, pt: PairPoint):
    mp.dom_o._check_id(pt.o)
    mp.dom_p._check_id(pt.p)


def is_sim_prefixed(mp: MutualPair, pt: PairPoint) -> bool:
    'F(o) below p and G(p) below o.'
    _check_point(mp, pt)
    return bool(mp.dom_p.poset.leq[mp.f[pt.o], pt.p] and mp.dom_o.poset.leq[mp.g[pt.p], pt.o])


def is_sim_postfixed(mp: MutualPair, pt: PairPoint) -> bool:
    'p below F(o) and o below G(p).'
    _check_point(mp, pt)
    return bool(mp.dom_p.poset.leq[pt.p, mp.f[pt.o]] and mp.dom_o.poset.leq[pt.o, mp.g[pt.p]])


def is_sim_fixed(mp: MutualPair, pt: PairPoint) -> bool:
    'F(o) is exactly p and G(p) is exactly o.'
    _check_point(mp, pt)
    return mp.f[pt.o] == pt.p and mp.g[pt.p] == pt.o


def _check_side(side: str):
    if side not in ("O", "P"):
        raise ValueError(f"side must be 'O' or 'P', got {side!r}")


def prefp_fiber(mp: MutualPair, anchor: int, side: str = "O") -> FiberSet:
    'All partners forming a simultaneous pre-fixed pair with the anchor.'
    _check_side(side)
    leq_o, leq_p = mp.dom_o.poset.leq, mp.dom_p.poset.leq
    if side == "O":
        mp.dom_o._check_id(anchor)
        members = frozenset(
            p for p in range(mp.dom_p.size)
            if leq_p[mp.f[anchor], p] and leq_o[mp.g[p], anchor])
    else:
        mp.dom_p._check_id(anchor)
        members = frozenset(
            o for o in range(mp.dom_o.size)
            if leq_p[mp.f[o], anchor] and leq_o[mp.g[anchor], o])
    return FiberSet(int(anchor), side, "pre", members)


def postfp_fiber(mp: MutualPair, anchor: int, side: str = "O") -> FiberSet:
    'All partners forming a simultaneous post-fixed pair with the anchor.'
    _check_side(side)
    leq_o, leq_p = mp.dom_o.poset.leq, mp.dom_p.poset.leq
    if side == "O":
        mp.dom_o._check_id(anchor)
        members = frozenset(
            p for p in range(mp.dom_p.size)
            if leq_p[p, mp.f[anchor]] and leq_o[anchor, mp.g[p]])
    else:
        mp.dom_p._check_id(anchor)
        members = frozenset(
            o for o in range(mp.dom_o.size)
            if leq_p[anchor, mp.f[o]] and leq_o[o, mp.g[anchor]])
    return FiberSet(int(anchor), side, "post", members)


def _scan_guard(mp: MutualPair):
    if mp.dom_o.size * mp.dom_p.size > PAIR_SCAN_CAP:
        raise CapacityError(
            f"{mp.dom_o.size}x{mp.dom_p.size} pairs exceeds the scan cap {PAIR_SCAN_CAP}")


def component_sets(mp: MutualPair) -> ComponentSets:
    'Project the pre-/post-fixed pair classes onto both carriers by full scan.'
    _scan_guard(mp)
    leq_o, leq_p = mp.dom_o.poset.leq, mp.dom_p.poset.leq
    c, d, e, fs = set(), set(), set(), set()
    for o in range(mp.dom_o.size):
        fo = mp.f[o]
        for p in range(mp.dom_p.size):
            if leq_p[fo, p] and leq_o[mp.g[p], o]:
                c.add(o)
                d.add(p)
            if leq_p[p, fo] and leq_o[o, mp.g[p]]:
                e.add(o)
                fs.add(p)
    return ComponentSets(frozenset(c), frozenset(d), frozenset(e), frozenset(fs))


def enumerate_sim_fixed(mp: MutualPair) -> list[PairPoint]:
    'All simultaneous fixed pairs in lexicographic order; the pairing is one-to-one.'
    _scan_guard(mp)
    out = [PairPoint(o, mp.f[o]) for o in range(mp.dom_o.size) if mp.g[mp.f[o]] == o]
    # each o pairs only with f[o], and g maps each p back to one o, so
    # components can never repeat across the list
    assert len({pt.o for pt in out}) == len(out)
    assert len({pt.p for pt in out}) == len(out)
    return out
