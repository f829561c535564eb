"""Mutual generator pairs between finite lattices: total mapping tables,
composition, and monotonicity/continuity checks with minimal witnesses.

Witnesses are the smallest failing subsets, ordered by cardinality and
then lexicographically, so every check is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import FiniteLattice


@dataclass(frozen=True)
class ContinuityMode:
    """How subset preservation is sampled.

    binary: binary meets/joins over nonempty subsets; on a finite lattice
    this is equivalent to preserving every nonempty subset bound.
    with-empty: binary plus the empty subset, which pins top to top for
    meets and bottom to bottom for joins.
    capped: brute force over every nonempty subset of at most cap elements.
    """
    kind: str
    cap: int | None = None

    def __post_init__(self):
        if self.kind not in ("binary", "with-empty", "capped"):
            raise ValueError(f"unknown continuity mode {self.kind!r}")
        if self.kind == "capped":
            if self.cap is None or self.cap < 2:
                raise ValueError("capped mode needs cap >= 2")
        elif self.cap is not None:
            raise ValueError("only capped mode takes a cap")

    @property
    def label(self) -> str:
        return self.kind if self.cap is None else f"capped:{self.cap}"


BINARY = ContinuityMode("binary")
WITH_EMPTY = ContinuityMode("with-empty")


def capped(n: int) -> ContinuityMode:
    return ContinuityMode("capped", n)


def parse_mode(text: str) -> ContinuityMode:
    'Parse a mode label: binary | with-empty | capped:N.'
    if text == "binary":
        return BINARY
    if text == "with-empty":
        return WITH_EMPTY
    if text.startswith("capped:"):
        try:
            return capped(int(text.split(":", 1)[1]))
        except ValueError as e:
            raise ValueError(f"bad capped mode {text!r}: {e}") from None
    raise ValueError(f"unknown continuity mode {text!r}")


@dataclass(frozen=True)
class LatticeFn:
    """A total function between lattice carriers as an image table."""
    dom: FiniteLattice
    cod: FiniteLattice
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(x) for x in self.table))
        if len(self.table) != self.dom.size:
            raise ValueError("table must cover every domain element")
        for x in self.table:
            self.cod._check_id(x)

    @classmethod
    def endo(cls, lat: FiniteLattice, table) -> "LatticeFn":
        return cls(lat, lat, table)

    @classmethod
    def identity(cls, lat: FiniteLattice) -> "LatticeFn":
        return cls(lat, lat, tuple(range(lat.size)))

    @classmethod
    def constant(cls, dom: FiniteLattice, cod: FiniteLattice, value: int) -> "LatticeFn":
        return cls(dom, cod, (value,) * dom.size)

    @property
    def is_endo(self) -> bool:
        return self.dom is self.cod

    def __call__(self, x: int) -> int:
        self.dom._check_id(x)
        return self.table[x]


@dataclass(frozen=True)
class MutualPair:
    """Two mutual generators as tables: f maps O into P and g maps P into O."""
    dom_o: FiniteLattice
    dom_p: FiniteLattice
    f: tuple[int, ...]
    g: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        if len(self.f) != self.dom_o.size or len(self.g) != self.dom_p.size:
            raise ValueError("generator tables must be total")
        for x in self.f:
            self.dom_p._check_id(x)
        for x in self.g:
            self.dom_o._check_id(x)

    @property
    def f_fn(self) -> LatticeFn:
        return LatticeFn(self.dom_o, self.dom_p, self.f)

    @property
    def g_fn(self) -> LatticeFn:
        return LatticeFn(self.dom_p, self.dom_o, self.g)


def apply_f(mp: MutualPair, o: int) -> int:
    mp.dom_o._check_id(o)
    return mp.f[o]


def apply_g(mp: MutualPair, p: int) -> int:
    mp.dom_p._check_id(p)
    return mp.g[p]


def compose_gf(mp: MutualPair) -> LatticeFn:
    'The round trip through P, an endofunction on O.'
    return LatticeFn.endo(mp.dom_o, tuple(mp.g[x] for x in mp.f))


def compose_fg(mp: MutualPair) -> LatticeFn:
    'The round trip through O, an endofunction on P.'
    return LatticeFn.endo(mp.dom_p, tuple(mp.f[x] for x in mp.g))


def monotone_witness(fn: LatticeFn):
    'First comparable pair whose images break the order, or None.'
    dom_leq = fn.dom.poset.leq
    cod_leq = fn.cod.poset.leq
    t = fn.table
    for a in range(fn.dom.size):
        for b in range(fn.dom.size):
            if dom_leq[a, b] and not cod_leq[t[a], t[b]]:
                return (a, b)
    return None


def is_monotone(fn: LatticeFn) -> bool:
    return monotone_witness(fn) is None


def _subset_stream(size: int, mode: ContinuityMode):
    # singletons preserve bounds trivially and are never witnesses
    if mode.kind == "with-empty":
        yield ()
    if mode.kind in ("binary", "with-empty"):
        yield from combinations(range(size), 2)
    else:
        for k in range(2, min(mode.cap, size) + 1):
            yield from combinations(range(size), k)


def meet_continuity_witness(fn: LatticeFn, mode: ContinuityMode = BINARY):
    'Smallest subset (size, then lex) breaking meet preservation, or None.'
    dom, cod, t = fn.dom, fn.cod, fn.table
    for s in _subset_stream(dom.size, mode):
        if not s:
            if t[dom.top] != cod.top:
                return ()
            continue
        if t[dom.meet_set(s)] != cod.meet_set([t[x] for x in s]):
            return s
    return None


def join_continuity_witness(fn: LatticeFn, mode: ContinuityMode = BINARY):
    'Smallest subset (size, then lex) breaking join preservation, or None.'
    dom, cod, t = fn.dom, fn.cod, fn.table
    for s in _subset_stream(dom.size, mode):
        if not s:
            if t[dom.bottom] != cod.bottom:
                return ()
            continue
        if t[dom.join_set(s)] != cod.join_set([t[x] for x in s]):
            return s
    return None


def is_meet_continuous(fn: LatticeFn, mode: ContinuityMode = BINARY) -> bool:
    return meet_continuity_witness(fn, mode) is None


def is_join_continuous(fn: LatticeFn, mode: ContinuityMode = BINARY) -> bool:
    return join_continuity_witness(fn, mode) is None


def pair_continuity_witness(mp: MutualPair, mode: ContinuityMode = BINARY):
    'First (side, law, subset) continuity failure over f then g, or None.'
    for side, fn in (("F", mp.f_fn), ("G", mp.g_fn)):
        w = meet_continuity_witness(fn, mode)
        if w is not None:
            return (side, "meet", w)
        w = join_continuity_witness(fn, mode)
        if w is not None:
            return (side, "join", w)
    return None


def is_continuous_pair(mp: MutualPair, mode: ContinuityMode = BINARY) -> bool:
    'Both generators preserve meets and joins under the given mode.'
    return pair_continuity_witness(mp, mode) is None
