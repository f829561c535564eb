"""Finite posets and complete lattices with explicit order and bound tables.

Elements are dense integer ids 0..size-1 with a label table. The order is a
read-only boolean matrix whose rows are up-sets and whose columns are
down-sets, so bound searches are row intersections. Every finite bounded
lattice is complete, which is why subset meets and joins reduce to folds
over the binary tables. All values here are immutable after construction
and safe to share between threads.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

DEFAULT_CAP = 4096
CAP_ENV = "MUCOFIX_CAP"


class LatticeError(Exception):
    """Base class for structural order failures."""


class NotAPosetError(LatticeError):
    def __init__(self, axiom: str, witness: tuple[int, ...], labels=None):
        self.axiom = axiom
        self.witness = tuple(int(i) for i in witness)
        shown = self.witness if labels is None else tuple(labels[i] for i in self.witness)
        super().__init__(f"NotAPoset: {axiom} fails at {shown}")


class NotALatticeError(LatticeError):
    def __init__(self, kind: str, pair: tuple[int, int], labels):
        self.kind = kind
        self.pair = (int(pair[0]), int(pair[1]))
        a, b = (labels[i] for i in self.pair)
        super().__init__("NotALattice: {%s,%s} lacks %s" % (a, b, kind))


class CapacityError(LatticeError):
    """A size cap was exceeded; raise rather than grind on huge tables."""


def explicit_cap() -> int:
    'Size cap for explicit lattices; the MUCOFIX_CAP env var overrides.'
    raw = os.environ.get(CAP_ENV)
    return DEFAULT_CAP if raw is None else int(raw)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class FinitePoset:
    """Distinct labels plus a boolean order matrix; leq[i, j] means i <= j.

    The constructor checks shape and label sanity only. The order axioms
    are checked by validate_lattice so that a bad order can be diagnosed
    with a witness instead of rejected opaquely.
    """
    labels: tuple[str, ...]
    leq: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        n = len(self.labels)
        if n == 0:
            raise ValueError("a poset needs at least one element")
        if len(set(self.labels)) != n:
            raise ValueError("labels must be distinct")
        leq = np.array(self.leq, dtype=bool)
        if leq.shape != (n, n):
            raise ValueError(f"order matrix must be {n}x{n}")
        object.__setattr__(self, "leq", _frozen(leq))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown element label {label!r}") from None


def poset_violation(p: FinitePoset):
    'First order-axiom violation as (axiom, witness ids), or None.'
    leq = p.leq
    n = p.size
    diag = np.diagonal(leq)
    if not diag.all():
        return ("reflexivity", (int(np.argmin(diag)),))
    anti = leq & leq.T & ~np.eye(n, dtype=bool)
    if anti.any():
        i, j = np.argwhere(anti)[0]
        return ("antisymmetry", (int(i), int(j)))
    reach2 = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
    gaps = reach2 & ~leq
    if gaps.any():
        i, k = (int(x) for x in np.argwhere(gaps)[0])
        j = int(np.argmax(leq[i] & leq[:, k]))
        return ("transitivity", (i, j, k))
    return None


@dataclass(frozen=True)
class SubsetHandle:
    """A subset of a lattice carrier, pinned to its parent."""
    parent: "FiniteLattice"
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(int(x) for x in self.members))
        for x in self.members:
            self.parent._check_id(x)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))


@dataclass(frozen=True)
class FiniteLattice:
    """A valid finite poset plus binary meet/join tables and both bounds.

    Built by validate_lattice or by the direct constructors below; the
    direct routes are cross-checked against validate_lattice in the test
    suite. Treat instances as immutable.
    """
    poset: FinitePoset
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int

    def __post_init__(self):
        n = self.poset.size
        meet = np.array(self.meet, dtype=np.int32)
        join = np.array(self.join, dtype=np.int32)
        if meet.shape != (n, n) or join.shape != (n, n):
            raise ValueError("bound tables must match the carrier")
        object.__setattr__(self, "meet", _frozen(meet))
        object.__setattr__(self, "join", _frozen(join))
        object.__setattr__(self, "bottom", int(self.bottom))
        object.__setattr__(self, "top", int(self.top))

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def labels(self) -> tuple[str, ...]:
        return self.poset.labels

    def label(self, i: int) -> str:
        self._check_id(i)
        return self.poset.labels[i]

    def index(self, label: str) -> int:
        return self.poset.index(label)

    def _check_id(self, a: int):
        if not 0 <= int(a) < self.size:
            raise ValueError(f"element id {a} out of range 0..{self.size - 1}")

    def leq(self, a: int, b: int) -> bool:
        'Order test by table lookup; ids are bounds-checked.'
        self._check_id(a)
        self._check_id(b)
        return bool(self.poset.leq[a, b])

    def up_set(self, a: int) -> np.ndarray:
        self._check_id(a)
        return self.poset.leq[a]

    def down_set(self, a: int) -> np.ndarray:
        self._check_id(a)
        return self.poset.leq[:, a]

    def subset(self, ids: Iterable[int]) -> SubsetHandle:
        return SubsetHandle(self, frozenset(ids))

    def _ids(self, s) -> tuple[int, ...]:
        if isinstance(s, SubsetHandle):
            if s.parent is not self:
                raise ValueError("subset belongs to a different lattice")
            return tuple(sorted(s.members))
        ids = sorted({int(x) for x in s})
        for x in ids:
            self._check_id(x)
        return tuple(ids)

    def meet_set(self, s) -> int:
        'Greatest lower bound of a subset; the empty meet is top.'
        out = self.top
        for x in self._ids(s):
            out = int(self.meet[out, x])
        return out

    def join_set(self, s) -> int:
        'Least upper bound of a subset; the empty join is bottom.'
        out = self.bottom
        for x in self._ids(s):
            out = int(self.join[out, x])
        return out

    def sublattice_violation(self, s):
        'First pair of members whose meet or join escapes, or None.'
        ids = self._ids(s)
        members = set(ids)
        for ai in range(len(ids)):
            for bi in range(ai, len(ids)):
                a, b = ids[ai], ids[bi]
                m = int(self.meet[a, b])
                if m not in members:
                    return ("meet", a, b, m)
                j = int(self.join[a, b])
                if j not in members:
                    return ("join", a, b, j)
        return None

    def is_complete_sublattice(self, s) -> bool:
        """Closure under binary meet and join; in a finite lattice that is
        exactly closure under arbitrary nonempty bounds, and the subset's
        own bounds are then members. The empty set is not a lattice."""
        ids = self._ids(s)
        if not ids:
            raise ValueError("the empty set is not a complete sublattice")
        return self.sublattice_violation(ids) is None


def validate_lattice(p: FinitePoset) -> FiniteLattice:
    """Check the order axioms and fill the bound tables.

    Raises NotAPosetError or NotALatticeError carrying the first failing
    witness in scan order, and CapacityError above the explicit cap. This
    search accepts exactly the posets accepted by brute-force bound
    existence, which the test suite checks against directly.
    """
    if p.size > explicit_cap():
        raise CapacityError(f"{p.size} elements exceeds the explicit cap {explicit_cap()}")
    bad = poset_violation(p)
    if bad is not None:
        raise NotAPosetError(bad[0], bad[1], p.labels)
    n = p.size
    leq = p.leq
    down = leq.T.copy()
    # an element is recoverable from its up-set (or down-set) row, so the
    # least upper bound of i,j exists iff their up-set intersection is
    # itself the up-set of some element
    up_key = {leq[i].tobytes(): i for i in range(n)}
    down_key = {down[i].tobytes(): i for i in range(n)}
    meet = np.zeros((n, n), dtype=np.int32)
    join = np.zeros((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(i, n):
            above = up_key.get((leq[i] & leq[j]).tobytes())
            if above is None:
                raise NotALatticeError("lub", (i, j), p.labels)
            join[i, j] = join[j, i] = above
            below = down_key.get((down[i] & down[j]).tobytes())
            if below is None:
                raise NotALatticeError("glb", (i, j), p.labels)
            meet[i, j] = meet[j, i] = below
    bottom = 0
    top = 0
    for x in range(1, n):
        bottom = int(meet[bottom, x])
        top = int(join[top, x])
    return FiniteLattice(p, meet, join, bottom, top)


def product(lat_a: FiniteLattice, lat_b: FiniteLattice) -> FiniteLattice:
    'Component-wise product lattice; pair (i, j) gets id i*|B| + j.'
    n = lat_a.size * lat_b.size
    if n > explicit_cap():
        raise CapacityError(f"product size {n} exceeds the explicit cap {explicit_cap()}")
    labels = tuple(f"({x},{y})" for x in lat_a.labels for y in lat_b.labels)
    leq = np.kron(lat_a.poset.leq.astype(np.uint8), lat_b.poset.leq.astype(np.uint8)).astype(bool)
    return validate_lattice(FinitePoset(labels, leq))


_GROUND_NAMES = "abcdefghijklmnop"


def powerset_lattice(n: int, cap: int = 5) -> FiniteLattice:
    'Subsets of an n-member ground set under inclusion; ids are bitmasks.'
    if n < 0:
        raise ValueError("ground set size must be nonnegative")
    if n > cap or n > len(_GROUND_NAMES):
        raise CapacityError(f"2^{n} explicit subsets exceeds the cap (ground size {cap})")
    ground = _GROUND_NAMES[:n]
    labels = []
    for mask in range(1 << n):
        members = [ground[i] for i in range(n) if mask >> i & 1]
        labels.append("{" + ",".join(members) + "}")
    masks = np.arange(1 << n)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    meet = (masks[:, None] & masks[None, :]).astype(np.int32)
    join = (masks[:, None] | masks[None, :]).astype(np.int32)
    return FiniteLattice(FinitePoset(tuple(labels), leq), meet, join, 0, (1 << n) - 1)


def dual(lat: FiniteLattice) -> FiniteLattice:
    'Order-dual lattice: transpose the order, swap the tables and bounds.'
    poset = FinitePoset(lat.labels, lat.poset.leq.T)
    return FiniteLattice(poset, lat.join, lat.meet, lat.top, lat.bottom)


def cover_edges(lat: FiniteLattice) -> list[tuple[int, int]]:
    'Immediate-successor pairs of the order, in lexicographic id order.'
    lt = lat.poset.leq & ~np.eye(lat.size, dtype=bool)
    via = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
    return [(int(i), int(j)) for i, j in np.argwhere(lt & ~via)]


def hasse_text(lat: FiniteLattice) -> str:
    'Plain-text adjacency dump of the cover relation, one edge per line.'
    lines = [f"{lat.label(i)} < {lat.label(j)}" for i, j in cover_edges(lat)]
    return "\n".join(lines)
