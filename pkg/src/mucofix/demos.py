"""Two working instantiations of the engine.

The first is a subtype system with interval-bounded generics: the
subtyping relation on ground types and the containment relation on
intervals define each other, so both are solved at once as a least or
greatest simultaneous fixed point over a product of relation powersets.
The second is a trio of mutually recursive functions extracted from a
small imperative program, run as a label state machine over unbounded
integers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .lattice import CapacityError
from .solvers import (ImplicitMutualPair, kleene_implicit, implicit_product,
                      powerset_implicit)

OBJECT = "Object"
NULL = "Null"


class StepBudgetExceeded(Exception):
    'The state machine passed its step budget without returning.'


@dataclass(frozen=True)
class ClassDef:
    name: str
    is_generic: bool = False
    superclass: str | None = None


@dataclass(frozen=True)
class ClassTable:
    """A nominal class hierarchy rooted at Object, with Null below
    everything. Both sentinel classes must be present and non-generic."""
    classes: tuple[ClassDef, ...]

    def __post_init__(self):
        names = [c.name for c in self.classes]
        if len(set(names)) != len(names):
            raise ValueError("class names must be distinct")
        by_name = {c.name: c for c in self.classes}
        for sentinel in (OBJECT, NULL):
            if sentinel not in by_name:
                raise ValueError(f"class table must define {sentinel}")
            if by_name[sentinel].is_generic:
                raise ValueError(f"{sentinel} cannot be generic")
        if by_name[OBJECT].superclass is not None:
            raise ValueError("Object has no superclass")
        for c in self.classes:
            if c.name == OBJECT:
                continue
            if c.superclass is None:
                raise ValueError(f"{c.name} needs a superclass")
            if c.superclass not in by_name:
                raise ValueError(f"{c.name} extends unknown class {c.superclass}")
        for c in self.classes:    # every chain must reach Object without a cycle
            seen = {c.name}
            cur = c
            while cur.name != OBJECT:
                nxt = by_name[cur.superclass]
                if nxt.name in seen:
                    raise ValueError(f"superclass cycle through {nxt.name}")
                seen.add(nxt.name)
                cur = nxt

    def __getitem__(self, name: str) -> ClassDef:
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(name)


def parse_class_table_doc(obj) -> ClassTable:
    'Build a class table from a parsed document of the classes format.'
    from .textio import DocumentError
    if not isinstance(obj, dict) or set(obj) != {"classes"}:
        raise DocumentError('a class table document has exactly the key "classes"')
    rows = obj["classes"]
    if not isinstance(rows, list):
        raise DocumentError('"classes" must be a list of records')
    defs = []
    for i, row in enumerate(rows):
        if not isinstance(row, dict) or set(row) != {"name", "generic", "superclass"}:
            raise DocumentError(
                f'classes[{i}] needs exactly the keys "name", "generic", "superclass"')
        name, generic, sup = row["name"], row["generic"], row["superclass"]
        if not isinstance(name, str) or not name:
            raise DocumentError(f"classes[{i}].name must be a nonempty string")
        if not isinstance(generic, bool):
            raise DocumentError(f"classes[{i}].generic must be a boolean")
        if sup is not None and not isinstance(sup, str):
            raise DocumentError(f"classes[{i}].superclass must be a string or null")
        defs.append(ClassDef(name, generic, sup))
    try:
        return ClassTable(tuple(defs))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


@dataclass(frozen=True)
class IntervalType:
    'A bounds pair over ground types, contravariant lower and covariant upper.'
    lower: "GroundType"
    upper: "GroundType"

    def __str__(self):
        return f"[{self.lower},{self.upper}]"


@dataclass(frozen=True)
class GroundType:
    'A class name, applied to an interval argument when the class is generic.'
    class_name: str
    arg: IntervalType | None = None

    def __str__(self):
        if self.arg is None:
            return self.class_name
        return f"{self.class_name}<{self.arg}>"


def _subclass_rel(ct: ClassTable) -> frozenset[tuple[str, str]]:
    names = [c.name for c in ct.classes]
    rel = {(n, n) for n in names}
    for c in ct.classes:
        if c.superclass is not None:
            rel.add((c.name, c.superclass))
    grew = True
    while grew:
        grew = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    grew = True
    for n in names:
        rel.add((NULL, n))
        rel.add((n, OBJECT))
    return frozenset(rel)


def build_universe(ct: ClassTable, k: int,
                   cap: int = 40) -> tuple[tuple[GroundType, ...], tuple[IntervalType, ...]]:
    """Close the type universe to generic-nesting depth k: round j builds
    intervals over the depth-j types, then applies every generic class to
    them. Deterministic order, capacity-guarded."""
    if k < 0:
        raise ValueError("depth must be nonnegative")
    base = tuple(GroundType(c.name) for c in ct.classes if not c.is_generic)
    generics = tuple(c.name for c in ct.classes if c.is_generic)
    types = base
    for _ in range(k):
        intervals = tuple(IntervalType(lo, up) for lo in types for up in types)
        types = base + tuple(GroundType(g, iv) for g in generics for iv in intervals)
        if len(types) > cap:
            raise CapacityError(
                f"type universe grew to {len(types)} > cap {cap}; lower the depth")
    intervals = tuple(IntervalType(lo, up) for lo in types for up in types)
    return types, intervals


def subtype_generators(ct: ClassTable, types: tuple[GroundType, ...],
                       intervals: tuple[IntervalType, ...]) -> ImplicitMutualPair:
    """The mutual generator pair over relation powersets.

    From a subtyping relation S, intervals are related covariantly in the
    upper bound and contravariantly in the lower. From a containment
    relation R, ground types are related along the class hierarchy with
    generic arguments compared through R; Null and Object are below and
    above everything unconditionally."""
    sub = _subclass_rel(ct)
    spairs = tuple((a, b) for a in types for b in types)
    rpairs = tuple((a, b) for a in intervals for b in intervals)
    lat_s = powerset_implicit(spairs, cap=len(spairs))
    lat_r = powerset_implicit(rpairs, cap=len(rpairs))

    def f(s: frozenset) -> frozenset:
        return frozenset((i1, i2) for i1, i2 in rpairs
                         if (i1.upper, i2.upper) in s and (i2.lower, i1.lower) in s)

    def g(r: frozenset) -> frozenset:
        out = set()
        for t1, t2 in spairs:
            if t1.class_name == NULL or t2.class_name == OBJECT:
                out.add((t1, t2))
                continue
            if (t1.class_name, t2.class_name) not in sub:
                continue
            if t1.arg is None and t2.arg is None:
                out.add((t1, t2))
            elif t1.arg is not None and t2.arg is not None and (t1.arg, t2.arg) in r:
                out.add((t1, t2))
        return frozenset(out)

    return ImplicitMutualPair(lat_s, lat_r, f, g)


@dataclass(frozen=True)
class RelationPairState:
    'A solved subtyping/containment relation pair over a fixed universe.'
    subtypes: frozenset
    containments: frozenset
    types: tuple[GroundType, ...]
    intervals: tuple[IntervalType, ...]


def _check_preorder(name, rel, carrier):
    for t in carrier:
        assert (t, t) in rel, f"{name} relation must be reflexive at {t}"
    for a, b in rel:
        for c, d in rel:
            if b == c:
                assert (a, d) in rel, f"{name} relation must be transitive at {a},{b},{d}"


def solve_subtyping(ct: ClassTable, k: int = 1, direction: str = "least",
                    budget: int = 10_000, cap: int = 40) -> RelationPairState:
    """Solve both relations at once by iterating the paired step from the
    empty pair upward or the full pair downward. Either answer is checked
    to be a preorder in both components before it is returned."""
    if direction not in ("least", "greatest"):
        raise ValueError('direction must be "least" or "greatest"')
    types, intervals = build_universe(ct, k, cap)
    imp = subtype_generators(ct, types, intervals)
    il = implicit_product(imp.lat_o, imp.lat_p)

    def step(sr):
        return (imp.g(sr[1]), imp.f(sr[0]))

    run = kleene_implicit(il, step, "up" if direction == "least" else "down", budget)
    subtypes, containments = run.limit
    _check_preorder("subtype", subtypes, types)
    _check_preorder("containment", containments, intervals)
    return RelationPairState(frozenset(subtypes), frozenset(containments),
                             types, intervals)


def is_subtype(state: RelationPairState, t1: GroundType, t2: GroundType) -> bool:
    for t in (t1, t2):
        if t not in state.types:
            raise ValueError(f"{t} is outside the solved universe")
    return (t1, t2) in state.subtypes


def is_contained(state: RelationPairState, i1: IntervalType, i2: IntervalType) -> bool:
    for i in (i1, i2):
        if i not in state.intervals:
            raise ValueError(f"{i} is outside the solved universe")
    return (i1, i2) in state.containments


def paulson_trio(x: int, y: int, z: int, entry: str = "F",
                 budget: int = 1_000_000) -> tuple[int, int, int]:
    """Three mutually recursive integer functions, run as the equivalent
    label state machine so deep mutual recursion cannot blow the stack.

    F increments x and calls G; G calls F while y < z, otherwise adds x
    into y and calls H; H subtracts x from z and calls F while z > 0,
    otherwise returns the state."""
    if entry not in ("F", "G", "H"):
        raise ValueError('entry must be "F", "G", or "H"')
    label = entry
    for _ in range(budget):
        if label == "F":
            x, label = x + 1, "G"
        elif label == "G":
            if y < z:
                label = "F"
            else:
                y, label = x + y, "H"
        else:
            if z > 0:
                z, label = z - x, "F"
            else:
                return (x, y, z)
    raise StepBudgetExceeded(f"no return within {budget} steps from ({x},{y},{z})")


def fixture_tables() -> dict[str, ClassTable]:
    'Small class tables for demos and tests.'
    return {
        "two": ClassTable((ClassDef(OBJECT), ClassDef(NULL, superclass=OBJECT))),
        "basic": ClassTable((ClassDef(OBJECT), ClassDef(NULL, superclass=OBJECT),
                             ClassDef("A", superclass=OBJECT))),
        "generic": ClassTable((ClassDef(OBJECT), ClassDef(NULL, superclass=OBJECT),
                               ClassDef("List", is_generic=True, superclass=OBJECT))),
    }
