"""Seeded instance generation plus executable forms of every supporting
lemma and the simultaneous fixed-point theorem, and a counterexample
miner for the questions the continuity premises leave open.

Determinism is the point: per-instance seeds are split from the master
seed with a fixed mixer, witnesses are canonical, and two runs with the
same spec produce identical reports byte for byte.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from itertools import product as iproduct

from . import textio
from .fixtures import chain, corpus, diamond
from .genfun import (BINARY, ContinuityMode, LatticeFn, MutualPair, compose_fg,
                     compose_gf, is_continuous_pair, is_monotone,
                     join_continuity_witness, meet_continuity_witness,
                     monotone_witness)
from .lattice import CapacityError, FiniteLattice, FinitePoset, powerset_lattice, product, validate_lattice
from .simpoints import (PairPoint, component_sets, is_sim_fixed, is_sim_postfixed,
                        is_sim_prefixed, postfp_fiber, prefp_fiber)
from .solvers import (gsfp_direct, gsfp_product, gsfp_tarski_oracle, lsfp_direct,
                      lsfp_product, lsfp_tarski_oracle)

import numpy as np

MASK64 = (1 << 64) - 1
FAMILIES = ("chains", "powersets", "products", "random-closed", "corpus", "mixed")
FUNCTION_CLASSES = ("monotone", "continuous", "arbitrary")
EXHAUST_COMBO_CAP = 200_000


class GenerationExhausted(Exception):
    """The retry cap passed without a continuous pair; reported, not fatal."""


def split_seed(seed: int, index: int) -> int:
    'Deterministic per-instance seed derivation (a splitmix64 step).'
    z = (seed + 0x9E3779B97F4A7C15 * (index + 1)) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


@dataclass(frozen=True)
class InstanceGenSpec:
    """What to generate: seed, carrier size range, lattice family, and the
    function class the lemma premise calls for."""
    seed: int
    size_lo: int = 2
    size_hi: int = 8
    family: str = "mixed"
    function_class: str = "monotone"
    count: int = 200

    def __post_init__(self):
        if not 1 <= self.size_lo <= self.size_hi:
            raise ValueError("need 1 <= size_lo <= size_hi")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.function_class not in FUNCTION_CLASSES:
            raise ValueError(f"unknown function class {self.function_class!r}")
        if self.count < 0:
            raise ValueError("count must be nonnegative")


def _random_closed(rng: random.Random, lo: int, hi: int) -> FiniteLattice:
    # draw subsets of a 4-member ground set and close them under binary
    # intersection/union; the closure is a sublattice, hence a lattice
    for _ in range(64):
        want = rng.randint(lo, hi)
        seeds = rng.sample(range(16), k=min(want, 16))
        closed = set(seeds)
        grew = True
        while grew:
            grew = False
            for a in list(closed):
                for b in list(closed):
                    for c in (a & b, a | b):
                        if c not in closed:
                            closed.add(c)
                            grew = True
        if lo <= len(closed) <= hi:
            masks = sorted(closed, key=lambda m: (bin(m).count("1"), m))
            labels = tuple("m" + format(m, "04b") for m in masks)
            arr = np.array(masks)
            leq = (arr[:, None] & ~arr[None, :]) == 0
            return validate_lattice(FinitePoset(labels, leq))
    return chain(rng.randint(lo, hi))


def gen_lattice(spec: InstanceGenSpec) -> FiniteLattice:
    'One lattice, deterministic in spec.seed, size within the range where the family allows.'
    rng = random.Random(spec.seed)
    fam = spec.family
    if fam == "mixed":
        fam = rng.choice(("chains", "powersets", "products", "random-closed", "corpus"))
    lo, hi = spec.size_lo, spec.size_hi
    if fam == "chains":
        return chain(rng.randint(lo, hi))
    if fam == "powersets":
        feasible = [g for g in range(5) if lo <= 1 << g <= hi]
        if not feasible:
            feasible = [max(g for g in range(5) if 1 << g <= hi)]
        return powerset_lattice(rng.choice(feasible))
    if fam == "products":
        factors = [chain(2), chain(3), chain(4), diamond()]
        pairs = [(a, b) for a in factors for b in factors if lo <= a.size * b.size <= hi]
        if not pairs:
            return product(chain(1), chain(max(1, hi)))
        a, b = rng.choice(pairs)
        return product(a, b)
    if fam == "random-closed":
        return _random_closed(rng, lo, hi)
    if fam == "corpus":
        pool = [lat for _, lat in corpus() if lo <= lat.size <= hi]
        if not pool:
            raise ValueError(f"no corpus lattice has size in [{lo}, {hi}]")
        return rng.choice(pool)
    raise AssertionError(fam)


def _monotone_table(rng: random.Random, dom: FiniteLattice, cod: FiniteLattice) -> tuple[int, ...]:
    # scan a linear extension; each image is drawn from the up-set of the
    # join of the images already forced below, so the table is monotone
    # by construction
    order = sorted(range(dom.size), key=lambda i: (int(dom.poset.leq[:, i].sum()), i))
    images: dict[int, int] = {}
    for i in order:
        forced = cod.bottom
        for j, tj in images.items():
            if dom.poset.leq[j, i]:
                forced = int(cod.join[forced, tj])
        choices = [q for q in range(cod.size) if cod.poset.leq[forced, q]]
        images[i] = rng.choice(choices)
    return tuple(images[i] for i in range(dom.size))


def gen_monotone_pair(spec: InstanceGenSpec, lat_o: FiniteLattice,
                      lat_p: FiniteLattice) -> MutualPair:
    'Monotone by construction in both directions; self-checked.'
    rng = random.Random(split_seed(spec.seed, 0xF0))
    mp = MutualPair(lat_o, lat_p,
                    _monotone_table(rng, lat_o, lat_p),
                    _monotone_table(rng, lat_p, lat_o))
    assert is_monotone(mp.f_fn) and is_monotone(mp.g_fn)
    return mp


def _curated_pairs(lat_o: FiniteLattice, lat_p: FiniteLattice):
    # fallbacks for rejection-sampling droughts: identity-like when the
    # carriers coincide, constant maps, and pinned chain homomorphisms
    if lat_o.size == lat_p.size and bool((lat_o.poset.leq == lat_p.poset.leq).all()):
        ident = tuple(range(lat_o.size))
        yield MutualPair(lat_o, lat_p, ident, ident)
    yield MutualPair(lat_o, lat_p,
                     (lat_p.top,) * lat_o.size, (lat_o.top,) * lat_p.size)
    yield MutualPair(lat_o, lat_p,
                     (lat_p.bottom,) * lat_o.size, (lat_o.bottom,) * lat_p.size)
    chain_like_o = bool((lat_o.poset.leq | lat_o.poset.leq.T).all())
    chain_like_p = bool((lat_p.poset.leq | lat_p.poset.leq.T).all())
    if chain_like_o and chain_like_p:
        def pinned(n, m):
            return tuple(round(i * (m - 1) / (n - 1)) if n > 1 else m - 1 for i in range(n))
        yield MutualPair(lat_o, lat_p,
                         pinned(lat_o.size, lat_p.size), pinned(lat_p.size, lat_o.size))


def gen_continuous_pair(spec: InstanceGenSpec, lat_o: FiniteLattice, lat_p: FiniteLattice,
                        mode: ContinuityMode = BINARY, retries: int = 64) -> MutualPair:
    'Rejection-sample monotone pairs, then fall back to a curated family.'
    for k in range(retries):
        mp = gen_monotone_pair(replace(spec, seed=split_seed(spec.seed, k)), lat_o, lat_p)
        if is_continuous_pair(mp, mode):
            return mp
    for mp in _curated_pairs(lat_o, lat_p):
        if is_continuous_pair(mp, mode):
            return mp
    raise GenerationExhausted(
        f"no continuous pair found on {lat_o.size}x{lat_p.size} under {mode.label}")


def _arbitrary_pair(spec: InstanceGenSpec, lat_o: FiniteLattice,
                    lat_p: FiniteLattice) -> MutualPair:
    rng = random.Random(split_seed(spec.seed, 0xA7))
    return MutualPair(lat_o, lat_p,
                      tuple(rng.randrange(lat_p.size) for _ in range(lat_o.size)),
                      tuple(rng.randrange(lat_o.size) for _ in range(lat_p.size)))


def _gen_pair(spec, lat_o, lat_p, mode):
    if spec.function_class == "monotone":
        return gen_monotone_pair(spec, lat_o, lat_p)
    if spec.function_class == "continuous":
        return gen_continuous_pair(spec, lat_o, lat_p, mode)
    return _arbitrary_pair(spec, lat_o, lat_p)


# ---------------------------------------------------------------- lemmas

@dataclass(frozen=True)
class LemmaFailure:
    instance: str
    witness: str


@dataclass
class LemmaReport:
    """Outcome of one lemma over a batch of generated instances.

    Instances whose premise does not hold are skipped, never counted as
    failures; a failure therefore always means the lemma itself broke."""
    lemma_id: str
    title: str
    mode_label: str
    function_class: str
    instances_tried: int = 0
    premise_skipped: int = 0
    generation_failures: int = 0
    failures: list[LemmaFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_l1(mp, mode):
    for side, fn in (("F", mp.f_fn), ("G", mp.g_fn)):
        w = monotone_witness(fn)
        if w is not None:
            return f"{side} breaks the order at {w}"
    return None


def _check_l2(mp, mode):
    gf, fg = compose_gf(mp), compose_fg(mp)
    for name, fn in (("G.F", gf), ("F.G", fg)):
        w = monotone_witness(fn)
        if w is not None:
            return f"{name} not monotone at {w}"
    if is_continuous_pair(mp, mode):
        for name, fn in (("G.F", gf), ("F.G", fg)):
            w = meet_continuity_witness(fn, mode)
            if w is not None:
                return f"{name} breaks meet preservation at {w}"
            w = join_continuity_witness(fn, mode)
            if w is not None:
                return f"{name} breaks join preservation at {w}"
    return None


def _check_l3(mp, mode):
    gf, fg = compose_gf(mp).table, compose_fg(mp).table
    leq_o, leq_p = mp.dom_o.poset.leq, mp.dom_p.poset.leq
    for o in range(mp.dom_o.size):
        for p in range(mp.dom_p.size):
            pt = PairPoint(o, p)
            if is_sim_prefixed(mp, pt) and not (leq_o[gf[o], o] and leq_p[fg[p], p]):
                return f"pre-fixed ({o},{p}) has a non-pre-fixed component"
            if is_sim_postfixed(mp, pt) and not (leq_o[o, gf[o]] and leq_p[p, fg[p]]):
                return f"post-fixed ({o},{p}) has a non-post-fixed component"
            if is_sim_fixed(mp, pt) and not (gf[o] == o and fg[p] == p):
                return f"fixed ({o},{p}) has a non-fixed component"
    return None


def _check_l4(mp, mode):
    for side, dom, cod, table in (("F", mp.dom_o, mp.dom_p, mp.f),
                                  ("G", mp.dom_p, mp.dom_o, mp.g)):
        if dom.size > 16:
            raise CapacityError("subset enumeration needs carriers of size <= 16")
        for bits in range(1, 1 << dom.size):
            s = [i for i in range(dom.size) if bits >> i & 1]
            if dom.is_complete_sublattice(s):
                img = sorted({table[i] for i in s})
                v = cod.sublattice_violation(img)
                if v is not None:
                    return f"{side} image of sublattice {s} is not closed: {v}"
    return None


def _check_l5(mp, mode):
    for o in range(mp.dom_o.size):
        fib = sorted(prefp_fiber(mp, o, "O").fiber)
        if fib:
            v = mp.dom_p.sublattice_violation(fib)
            if v is not None:
                return f"pre fiber at O={o} is not a complete sublattice: {v}"
            if mp.dom_p.meet_set(fib) != mp.f[o]:
                return f"glb of the pre fiber at O={o} is not F(o)"
        fib = sorted(postfp_fiber(mp, o, "O").fiber)
        if fib:
            v = mp.dom_p.sublattice_violation(fib)
            if v is not None:
                return f"post fiber at O={o} is not a complete sublattice: {v}"
            if mp.dom_p.join_set(fib) != mp.f[o]:
                return f"lub of the post fiber at O={o} is not F(o)"
    for p in range(mp.dom_p.size):
        fib = sorted(prefp_fiber(mp, p, "P").fiber)
        if fib:
            v = mp.dom_o.sublattice_violation(fib)
            if v is not None:
                return f"pre fiber at P={p} is not a complete sublattice: {v}"
            if mp.dom_o.meet_set(fib) != mp.g[p]:
                return f"glb of the pre fiber at P={p} is not G(p)"
        fib = sorted(postfp_fiber(mp, p, "P").fiber)
        if fib:
            v = mp.dom_o.sublattice_violation(fib)
            if v is not None:
                return f"post fiber at P={p} is not a complete sublattice: {v}"
            if mp.dom_o.join_set(fib) != mp.g[p]:
                return f"lub of the post fiber at P={p} is not G(p)"
    return None


def _check_l6(mp, mode):
    cs = component_sets(mp)
    checks = (("C", mp.dom_o, cs.c, mp.dom_o.top, "top"),
              ("D", mp.dom_p, cs.d, mp.dom_p.top, "top"),
              ("E", mp.dom_o, cs.e, mp.dom_o.bottom, "bottom"),
              ("F", mp.dom_p, cs.fset, mp.dom_p.bottom, "bottom"))
    for name, lat, ids, bound, where in checks:
        v = lat.sublattice_violation(sorted(ids))
        if v is not None:
            return f"component set {name} is not a complete sublattice: {v}"
        if bound not in ids:
            return f"component set {name} misses the {where}"
    return None


def _check_l7(mp, mode):
    pre = [(o, p) for o in range(mp.dom_o.size) for p in range(mp.dom_p.size)
           if is_sim_prefixed(mp, PairPoint(o, p))]
    for o1, p1 in pre:
        for o2, p2 in pre:
            pt = PairPoint(int(mp.dom_o.meet[o1, o2]), int(mp.dom_p.meet[p1, p2]))
            if not is_sim_prefixed(mp, pt):
                return f"meet of pre-fixed ({o1},{p1}),({o2},{p2}) escapes"
    post = [(o, p) for o in range(mp.dom_o.size) for p in range(mp.dom_p.size)
            if is_sim_postfixed(mp, PairPoint(o, p))]
    for o1, p1 in post:
        for o2, p2 in post:
            pt = PairPoint(int(mp.dom_o.join[o1, o2]), int(mp.dom_p.join[p1, p2]))
            if not is_sim_postfixed(mp, pt):
                return f"join of post-fixed ({o1},{p1}),({o2},{p2}) escapes"
    return None


def _check_sfp(mp, mode):
    least = lsfp_direct(mp)
    lprod = lsfp_product(mp)
    ltar = lsfp_tarski_oracle(mp)
    if not (least.mu == lprod.mu == ltar):
        return (f"least strategies disagree: direct {least.mu}, "
                f"product {lprod.mu}, oracle {ltar}")
    greatest = gsfp_direct(mp)
    gprod = gsfp_product(mp)
    gtar = gsfp_tarski_oracle(mp)
    if not (greatest.nu == gprod.nu == gtar):
        return (f"greatest strategies disagree: direct {greatest.nu}, "
                f"product {gprod.nu}, oracle {gtar}")
    if not is_sim_fixed(mp, least.mu):
        return f"least pair {least.mu} is not simultaneously fixed"
    if not is_sim_fixed(mp, greatest.nu):
        return f"greatest pair {greatest.nu} is not simultaneously fixed"
    leq_o, leq_p = mp.dom_o.poset.leq, mp.dom_p.poset.leq
    for o in range(mp.dom_o.size):
        for p in range(mp.dom_p.size):
            pt = PairPoint(o, p)
            if is_sim_prefixed(mp, pt) and not (
                    leq_o[least.mu_f, o] and leq_p[least.mu_g, p]):
                return f"least pair is not below pre-fixed ({o},{p})"
            if is_sim_postfixed(mp, pt) and not (
                    leq_o[o, greatest.nu_f] and leq_p[p, greatest.nu_g]):
                return f"greatest pair is not above post-fixed ({o},{p})"
    if not (leq_o[least.mu_f, greatest.nu_f] and leq_p[least.mu_g, greatest.nu_g]):
        return "least pair is not below the greatest pair"
    return None


LEMMAS = {
    "L1": ("continuous pairs are monotone", "continuous", _check_l1),
    "L2": ("composition preserves monotonicity and continuity", "monotone", _check_l2),
    "L3": ("components of simultaneous points are composition points", "monotone", _check_l3),
    "L4": ("continuous images of complete sublattices stay complete", "continuous", _check_l4),
    "L5": ("nonempty fibers are complete sublattices pinned at the image", "continuous", _check_l5),
    "L6": ("component sets form complete sublattices holding their bound", "continuous", _check_l6),
    "L7": ("meets of pre-fixed pairs stay pre-fixed, joins of post-fixed dually", "monotone", _check_l7),
    "SFP": ("least and greatest simultaneous fixed points exist and all strategies agree", "monotone", _check_sfp),
}

LEMMA_IDS = tuple(LEMMAS)


def _premise_holds(premise: str, mp: MutualPair, mode: ContinuityMode) -> bool:
    if not (is_monotone(mp.f_fn) and is_monotone(mp.g_fn)):
        return False
    if premise == "continuous":
        return is_continuous_pair(mp, mode)
    return True


def check_lemma(lemma_id: str, spec: InstanceGenSpec,
                mode: ContinuityMode = BINARY) -> LemmaReport:
    """Run one lemma's executable form over spec.count generated instances.

    The run never aborts early: failures are collected as data, instances
    that violate the lemma's premise are recorded as skipped."""
    if lemma_id not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma_id!r}; choose from {', '.join(LEMMAS)}")
    title, premise, runner = LEMMAS[lemma_id]
    report = LemmaReport(lemma_id, title, mode.label, spec.function_class)
    for i in range(spec.count):
        child = split_seed(spec.seed, i)
        lat_o = gen_lattice(replace(spec, seed=split_seed(child, 1)))
        lat_p = gen_lattice(replace(spec, seed=split_seed(child, 2)))
        try:
            mp = _gen_pair(replace(spec, seed=split_seed(child, 3)), lat_o, lat_p, mode)
        except GenerationExhausted:
            report.generation_failures += 1
            continue
        report.instances_tried += 1
        if not _premise_holds(premise, mp, mode):
            report.premise_skipped += 1
            continue
        witness = runner(mp, mode)
        if witness is not None:
            report.failures.append(LemmaFailure(textio.pair_to_json(mp), witness))
    return report


# ----------------------------------------------------------------- miner

@dataclass(frozen=True)
class Finding:
    instance: str
    witness: str


@dataclass
class FindingReport:
    question: str
    mode_label: str
    tried: int
    exhaustive_size: int | None
    randomized: int
    finding: Finding | None
    revalidated: bool | None

    @property
    def note(self) -> str:
        if self.finding is not None:
            return "found"
        if self.exhaustive_size is not None:
            return f"none found (exhaustive up to size {self.exhaustive_size})"
        return "none found (search truncated by budget)"


def _q1(mp, mode):
    'A monotone, non-continuous pair with a nonempty fiber that is not a complete sublattice.'
    if is_continuous_pair(mp, mode):
        return None
    for side, size, partner in (("O", mp.dom_o.size, mp.dom_p),
                                ("P", mp.dom_p.size, mp.dom_o)):
        for a in range(size):
            fib = sorted(prefp_fiber(mp, a, side).fiber)
            if fib:
                v = partner.sublattice_violation(fib)
                if v is not None:
                    return f"pre fiber at {side}={a} is not a complete sublattice: {v}"
    return None


def _q2(mp, mode):
    'A composition pre-fixed element belonging to no simultaneous pre-fixed pair.'
    cs = component_sets(mp)
    gf, fg = compose_gf(mp).table, compose_fg(mp).table
    for o in range(mp.dom_o.size):
        if mp.dom_o.poset.leq[gf[o], o] and o not in cs.c:
            return f"O={o} is pre-fixed for G.F but outside the first component set"
    for p in range(mp.dom_p.size):
        if mp.dom_p.poset.leq[fg[p], p] and p not in cs.d:
            return f"P={p} is pre-fixed for F.G but outside the second component set"
    return None


def _q3(mp, mode):
    'A monotone pair whose pre-fixed component sets are not complete sublattices.'
    cs = component_sets(mp)
    v = mp.dom_o.sublattice_violation(sorted(cs.c))
    if v is not None:
        return f"component set C is not a complete sublattice: {v}"
    v = mp.dom_p.sublattice_violation(sorted(cs.d))
    if v is not None:
        return f"component set D is not a complete sublattice: {v}"
    return None


QUESTIONS = {"Q1": _q1, "Q2": _q2, "Q3": _q3}


def _revalidate(question: str, serialized: str, witness: str, mode: ContinuityMode) -> bool:
    # reparse and rerun from scratch; nothing is cached anywhere, so this
    # repeats every scan against the stored instance
    mp = textio.pair_from_json(serialized)
    if not (is_monotone(mp.f_fn) and is_monotone(mp.g_fn)):
        return False
    return QUESTIONS[question](mp, mode) == witness


def _dedup_shapes(max_size: int):
    seen = set()
    shapes = []
    for _, lat in corpus():
        if lat.size <= max_size:
            key = lat.poset.leq.tobytes()
            if key not in seen:
                seen.add(key)
                shapes.append(lat)
    return shapes


def mine_counterexample(question: str, spec: InstanceGenSpec, budget: int,
                        max_size: int = 3, mode: ContinuityMode = BINARY) -> FindingReport:
    """Search for a counterexample: exhaustively over every monotone pair
    on small corpus shapes, then randomized within the remaining budget.
    Any finding is re-validated from scratch before being reported."""
    if question not in QUESTIONS:
        raise ValueError(f"unknown question {question!r}; choose from {', '.join(QUESTIONS)}")
    pred = QUESTIONS[question]
    tried = 0
    randomized = 0
    exhaustive_complete = True

    def emit(mp, witness):
        serialized = textio.pair_to_json(mp)
        ok = _revalidate(question, serialized, witness, mode)
        return FindingReport(question, mode.label, tried,
                             max_size if exhaustive_complete else None,
                             randomized, Finding(serialized, witness), ok)

    shapes = _dedup_shapes(max_size)
    for lat_o in shapes:
        for lat_p in shapes:
            combos = (lat_p.size ** lat_o.size) * (lat_o.size ** lat_p.size)
            if combos > EXHAUST_COMBO_CAP:
                exhaustive_complete = False
                continue
            for f in iproduct(range(lat_p.size), repeat=lat_o.size):
                if monotone_witness(LatticeFn(lat_o, lat_p, f)) is not None:
                    continue
                for g in iproduct(range(lat_o.size), repeat=lat_p.size):
                    mp = MutualPair(lat_o, lat_p, f, g)
                    if monotone_witness(mp.g_fn) is not None:
                        continue
                    if tried >= budget:
                        exhaustive_complete = False
                        return FindingReport(question, mode.label, tried, None,
                                             randomized, None, None)
                    tried += 1
                    w = pred(mp, mode)
                    if w is not None:
                        return emit(mp, w)
    while tried < budget:
        child = split_seed(spec.seed, tried)
        lat_o = gen_lattice(replace(spec, seed=split_seed(child, 1)))
        lat_p = gen_lattice(replace(spec, seed=split_seed(child, 2)))
        mp = gen_monotone_pair(replace(spec, seed=split_seed(child, 3)), lat_o, lat_p)
        tried += 1
        randomized += 1
        w = pred(mp, mode)
        if w is not None:
            return emit(mp, w)
    return FindingReport(question, mode.label, tried,
                         max_size if exhaustive_complete else None,
                         randomized, None, None)


# ----------------------------------------------------------------- reports

def render_lemma_report(report: LemmaReport) -> str:
    'One block per lemma, one fact per line, no timestamps.'
    lines = [
        f"lemma: {report.lemma_id}",
        f"title: {report.title}",
        f"mode: {report.mode_label}",
        f"function-class: {report.function_class}",
        f"instances: {report.instances_tried}",
        f"premise-skipped: {report.premise_skipped}",
        f"generation-exhausted: {report.generation_failures}",
        f"genuine-failures: {len(report.failures)}",
    ]
    for i, failure in enumerate(report.failures):
        lines.append(f"failure[{i}].witness: {failure.witness}")
        lines.append(f"failure[{i}].instance: {failure.instance}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def render_finding_report(report: FindingReport) -> str:
    lines = [
        f"question: {report.question}",
        f"mode: {report.mode_label}",
        f"tried: {report.tried}",
        f"randomized: {report.randomized}",
        f"result: {report.note}",
    ]
    if report.finding is not None:
        lines.append(f"witness: {report.finding.witness}")
        lines.append(f"instance: {report.finding.instance}")
        lines.append(f"revalidated: {'true' if report.revalidated else 'false'}")
    return "\n".join(lines)
