"""Solvers for least and greatest simultaneous fixed points.

Three strategies are kept deliberately separate so they can check each
other: direct (meets/joins of the component sets), product (Kleene
iteration of the paired step on the product lattice), and a brute-force
bound over every pre-/post-fixed pair of the product lattice, which
serves as the oracle for the other two. Monotonicity of both generators
is required and checked; continuity never is.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable

from .genfun import LatticeFn, MutualPair, monotone_witness
from .lattice import CapacityError, FiniteLattice
from .simpoints import PairPoint, component_sets, is_sim_postfixed, is_sim_prefixed

DEFAULT_BUDGET = 10_000
IMPLICIT_GROUND_CAP = 16
TRACE_TAIL = 64


class NotMonotoneError(Exception):
    def __init__(self, side: str, witness: tuple[int, int], labels):
        self.side = side
        self.witness = witness
        a, b = (labels[i] for i in witness)
        super().__init__(f"NotMonotone: {side} breaks the order at ({a},{b})")


class NonTerminationError(Exception):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"NonTermination: no fixed point within {budget} steps")


class Verdict(Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class SolveResult:
    """One solver run. The side that was not solved stays None; the trace
    carries full pair iterates only for the explicit product engine."""
    strategy: str
    mu_f: int | None
    mu_g: int | None
    nu_f: int | None
    nu_g: int | None
    trace: tuple[PairPoint, ...]
    iterations: int

    @property
    def mu(self):
        return None if self.mu_f is None else PairPoint(self.mu_f, self.mu_g)

    @property
    def nu(self):
        return None if self.nu_f is None else PairPoint(self.nu_f, self.nu_g)


def ensure_monotone(mp: MutualPair):
    'Raise NotMonotoneError naming the offending side and witness pair.'
    w = monotone_witness(mp.f_fn)
    if w is not None:
        raise NotMonotoneError("F", w, mp.dom_o.labels)
    w = monotone_witness(mp.g_fn)
    if w is not None:
        raise NotMonotoneError("G", w, mp.dom_p.labels)


def lsfp_direct(mp: MutualPair) -> SolveResult:
    """Least pair as the meets of the pre-fixed component sets.

    The results must pair up exactly under f and g; with monotone
    generators that is a theorem, so a violation is an internal error.
    """
    ensure_monotone(mp)
    cs = component_sets(mp)
    mf = mp.dom_o.meet_set(cs.c)
    mg = mp.dom_p.meet_set(cs.d)
    if mp.f[mf] != mg or mp.g[mg] != mf:
        raise AssertionError("least components fail the fixed-point identities")
    return SolveResult("direct", mf, mg, None, None, (), 0)


def gsfp_direct(mp: MutualPair) -> SolveResult:
    'Greatest pair as the joins of the post-fixed component sets.'
    ensure_monotone(mp)
    cs = component_sets(mp)
    nf = mp.dom_o.join_set(cs.e)
    ng = mp.dom_p.join_set(cs.fset)
    if mp.f[nf] != ng or mp.g[ng] != nf:
        raise AssertionError("greatest components fail the fixed-point identities")
    return SolveResult("direct", None, None, nf, ng, (), 0)


def _paired_step(mp: MutualPair) -> Callable[[tuple[int, int]], tuple[int, int]]:
    # the single-function encoding on the product: (o, p) -> (g[p], f[o])
    return lambda op: (mp.g[op[1]], mp.f[op[0]])


def _product_iterate(mp: MutualPair, start: tuple[int, int]):
    step = _paired_step(mp)
    cur = start
    trace = [PairPoint(*cur)]
    # iterates from a bound form a chain, so a strict run is capped by the
    # product carrier size
    bound = mp.dom_o.size * mp.dom_p.size + 1
    for i in range(1, bound + 1):
        nxt = step(cur)
        trace.append(PairPoint(*nxt))
        if nxt == cur:
            return cur, tuple(trace), i
        cur = nxt
    raise AssertionError("Kleene chain exceeded the product height")


def lsfp_product(mp: MutualPair, engine: str = "explicit",
                 budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Kleene-iterate the paired step from the bottom pair upward.

    The explicit engine walks the tables and keeps the whole trace; the
    implicit engine runs the same step through kleene_implicit under a
    budget and keeps only the serialized tail.
    """
    ensure_monotone(mp)
    if engine == "explicit":
        (mf, mg), trace, its = _product_iterate(mp, (mp.dom_o.bottom, mp.dom_p.bottom))
        return SolveResult("product-explicit", mf, mg, None, None, trace, its)
    if engine == "implicit":
        il = implicit_product(implicit_from_explicit(mp.dom_o), implicit_from_explicit(mp.dom_p))
        run = kleene_implicit(il, _paired_step(mp), "up", budget)
        mf, mg = run.limit
        return SolveResult("product-implicit", mf, mg, None, None, (), run.iterations)
    raise ValueError(f"unknown engine {engine!r}")


def gsfp_product(mp: MutualPair, engine: str = "explicit",
                 budget: int = DEFAULT_BUDGET) -> SolveResult:
    'Kleene-iterate the paired step from the top pair downward.'
    ensure_monotone(mp)
    if engine == "explicit":
        (nf, ng), trace, its = _product_iterate(mp, (mp.dom_o.top, mp.dom_p.top))
        return SolveResult("product-explicit", None, None, nf, ng, trace, its)
    if engine == "implicit":
        il = implicit_product(implicit_from_explicit(mp.dom_o), implicit_from_explicit(mp.dom_p))
        run = kleene_implicit(il, _paired_step(mp), "down", budget)
        nf, ng = run.limit
        return SolveResult("product-implicit", None, None, nf, ng, (), run.iterations)
    raise ValueError(f"unknown engine {engine!r}")


def lsfp_tarski_oracle(mp: MutualPair) -> PairPoint:
    """Brute force: fold the component-wise meet over every simultaneous
    pre-fixed pair of the product carrier. Kept free of the component-set
    and solver code paths on purpose."""
    ensure_monotone(mp)
    leq_o, leq_p = mp.dom_o.poset.leq, mp.dom_p.poset.leq
    meet_o, meet_p = mp.dom_o.meet, mp.dom_p.meet
    mo, mpp = mp.dom_o.top, mp.dom_p.top
    for o in range(mp.dom_o.size):
        fo = mp.f[o]
        for p in range(mp.dom_p.size):
            if leq_p[fo, p] and leq_o[mp.g[p], o]:
                mo = meet_o[mo, o]
                mpp = meet_p[mpp, p]
    # the top pair is always pre-fixed, so the fold never stays empty
    return PairPoint(int(mo), int(mpp))


def gsfp_tarski_oracle(mp: MutualPair) -> PairPoint:
    'Dual brute force: fold the join over every simultaneous post-fixed pair.'
    ensure_monotone(mp)
    leq_o, leq_p = mp.dom_o.poset.leq, mp.dom_p.poset.leq
    join_o, join_p = mp.dom_o.join, mp.dom_p.join
    jo, jpp = mp.dom_o.bottom, mp.dom_p.bottom
    for o in range(mp.dom_o.size):
        fo = mp.f[o]
        for p in range(mp.dom_p.size):
            if leq_p[p, fo] and leq_o[o, mp.g[p]]:
                jo = join_o[jo, o]
                jpp = join_p[jpp, p]
    return PairPoint(int(jo), int(jpp))


def check_mutual_induction(mp: MutualPair, pt: PairPoint) -> Verdict:
    """The induction principle: any simultaneous pre-fixed pair bounds the
    least pair from above. Pairs that are not pre-fixed are out of scope,
    which is a verdict and not an error."""
    if not is_sim_prefixed(mp, pt):
        return Verdict.NOT_APPLICABLE
    r = lsfp_direct(mp)
    ok = mp.dom_o.leq(r.mu_f, pt.o) and mp.dom_p.leq(r.mu_g, pt.p)
    return Verdict.PASS if ok else Verdict.FAIL


def check_mutual_coinduction(mp: MutualPair, pt: PairPoint) -> Verdict:
    'Dual principle: any simultaneous post-fixed pair sits below the greatest pair.'
    if not is_sim_postfixed(mp, pt):
        return Verdict.NOT_APPLICABLE
    r = gsfp_direct(mp)
    ok = mp.dom_o.leq(pt.o, r.nu_f) and mp.dom_p.leq(pt.p, r.nu_g)
    return Verdict.PASS if ok else Verdict.FAIL


def standard_embed(lat: FiniteLattice, f) -> MutualPair:
    """Embed a standard endofunction by pairing it with the identity, so
    the simultaneous machinery answers ordinary fixed-point questions."""
    if isinstance(f, LatticeFn):
        if f.dom is not lat or f.cod is not lat:
            raise ValueError("endofunction must live on the given lattice")
        table = f.table
    else:
        table = tuple(int(x) for x in f)
    return MutualPair(lat, lat, table, tuple(range(lat.size)))


@dataclass(frozen=True)
class ImplicitLattice:
    """A lattice given by its operators instead of tables, for carriers
    too large to materialize. The operators must satisfy the lattice laws
    on every reachable element; the test harness spot-checks sampled
    triples, nothing is verified here."""
    bottom: Callable[[], Any]
    top: Callable[[], Any]
    meet: Callable[[Any, Any], Any]
    join: Callable[[Any, Any], Any]
    eq: Callable[[Any, Any], bool]
    serialize: Callable[[Any], str]


@dataclass(frozen=True)
class ImplicitMutualPair:
    """The implicit twin of MutualPair: generator callables over two
    implicit lattices."""
    lat_o: ImplicitLattice
    lat_p: ImplicitLattice
    f: Callable[[Any], Any]
    g: Callable[[Any], Any]


@dataclass(frozen=True)
class KleeneRun:
    """Limit of one implicit iteration plus the serialized tail of the
    trace (ring buffer of the last iterates, to keep memory bounded)."""
    limit: Any
    iterations: int
    trace_tail: tuple[str, ...]


def kleene_implicit(il: ImplicitLattice, step: Callable[[Any], Any],
                    direction: str = "up", budget: int = DEFAULT_BUDGET) -> KleeneRun:
    """Iterate step from bottom (up) or top (down) until two successive
    iterates are equal. Monotonicity of step is the caller's contract and
    is not checkable here; a budget overrun raises NonTerminationError."""
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    if budget < 1:
        raise ValueError("budget must be positive")
    cur = il.bottom() if direction == "up" else il.top()
    tail: deque[str] = deque(maxlen=TRACE_TAIL)
    tail.append(il.serialize(cur))
    for i in range(1, budget + 1):
        nxt = step(cur)
        tail.append(il.serialize(nxt))
        if il.eq(nxt, cur):
            return KleeneRun(cur, i, tuple(tail))
        cur = nxt
    raise NonTerminationError(budget)


def implicit_from_explicit(lat: FiniteLattice) -> ImplicitLattice:
    'Wrap an explicit lattice in the operator interface; elements stay ids.'
    return ImplicitLattice(
        bottom=lambda: lat.bottom,
        top=lambda: lat.top,
        meet=lambda a, b: int(lat.meet[a, b]),
        join=lambda a, b: int(lat.join[a, b]),
        eq=lambda a, b: a == b,
        serialize=lambda a: lat.label(a),
    )


def implicit_product(lat_a: ImplicitLattice, lat_b: ImplicitLattice) -> ImplicitLattice:
    'Component-wise product of two implicit lattices; elements are pairs.'
    return ImplicitLattice(
        bottom=lambda: (lat_a.bottom(), lat_b.bottom()),
        top=lambda: (lat_a.top(), lat_b.top()),
        meet=lambda x, y: (lat_a.meet(x[0], y[0]), lat_b.meet(x[1], y[1])),
        join=lambda x, y: (lat_a.join(x[0], y[0]), lat_b.join(x[1], y[1])),
        eq=lambda x, y: lat_a.eq(x[0], y[0]) and lat_b.eq(x[1], y[1]),
        serialize=lambda x: f"({lat_a.serialize(x[0])},{lat_b.serialize(x[1])})",
    )


def powerset_implicit(members, cap: int = IMPLICIT_GROUND_CAP) -> ImplicitLattice:
    """Powerset of a ground collection without materializing tables;
    elements are frozensets of the given members."""
    ground = tuple(members)
    if len(set(ground)) != len(ground):
        raise ValueError("ground members must be distinct")
    if len(ground) > cap:
        raise CapacityError(f"{len(ground)} ground members exceeds the cap {cap}")
    full = frozenset(ground)

    def serialize(s):
        return "{" + ",".join(sorted(str(x) for x in s)) + "}"

    return ImplicitLattice(
        bottom=frozenset,
        top=lambda: full,
        meet=lambda a, b: a & b,
        join=lambda a, b: a | b,
        eq=lambda a, b: a == b,
        serialize=serialize,
    )
