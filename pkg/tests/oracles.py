"""Independent oracles used to cross-check the package.

Everything here works straight off a boolean order matrix with plain
Python loops: no numpy, no lattice tables, no shared helpers with the
code under test. Slow on purpose; only run at desk scale.
"""
from __future__ import annotations


def lower_bounds(leq, subset):
    n = len(leq)
    return [m for m in range(n) if all(leq[m][s] for s in subset)]


def upper_bounds(leq, subset):
    n = len(leq)
    return [m for m in range(n) if all(leq[s][m] for s in subset)]


def glb_scan(leq, subset):
    'Greatest lower bound by scanning all candidates, or None.'
    lbs = lower_bounds(leq, subset)
    for g in lbs:
        if all(leq[m][g] for m in lbs):
            return g
    return None


def lub_scan(leq, subset):
    ubs = upper_bounds(leq, subset)
    for l in ubs:
        if all(leq[l][m] for m in ubs):
            return l
    return None


def is_poset_oracle(leq):
    n = len(leq)
    for i in range(n):
        if not leq[i][i]:
            return False
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                return False
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    return False
    return True


def is_lattice_oracle(leq):
    'Poset axioms plus every pair having both bounds.'
    if not is_poset_oracle(leq):
        return False
    n = len(leq)
    for i in range(n):
        for j in range(n):
            if glb_scan(leq, [i, j]) is None or lub_scan(leq, [i, j]) is None:
                return False
    return True


def preserves_meets_oracle(table, dom_leq, cod_leq, subsets):
    'f(glb S) == glb f[S] for every listed subset, all bounds by scan.'
    for s in subsets:
        want = glb_scan(cod_leq, [table[i] for i in s]) if s else (
            lub_scan(cod_leq, range(len(cod_leq))))
        has = table[glb_scan(dom_leq, s)] if s else table[
            lub_scan(dom_leq, range(len(dom_leq)))]
        if has != want:
            return False
    return True


def preserves_joins_oracle(table, dom_leq, cod_leq, subsets):
    for s in subsets:
        want = lub_scan(cod_leq, [table[i] for i in s]) if s else (
            glb_scan(cod_leq, range(len(cod_leq))))
        has = table[lub_scan(dom_leq, s)] if s else table[
            glb_scan(dom_leq, range(len(dom_leq)))]
        if has != want:
            return False
    return True


def nonempty_subsets(n, max_card=None):
    out = []
    for bits in range(1, 1 << n):
        s = [i for i in range(n) if bits >> i & 1]
        if max_card is None or len(s) <= max_card:
            out.append(s)
    return out


def lfp_scan(table, leq):
    'Least pre-fixed point of a monotone endo table, by candidate scan.'
    pre = [x for x in range(len(leq)) if leq[table[x]][x]]
    for x in pre:
        if all(leq[x][y] for y in pre):
            return x
    return None


def gfp_scan(table, leq):
    post = [x for x in range(len(leq)) if leq[x][table[x]]]
    for x in post:
        if all(leq[y][x] for y in post):
            return x
    return None


def longest_chain_edges(leq):
    'Length in edges of the longest strictly ascending chain.'
    n = len(leq)
    memo = {}

    def height(i):
        if i not in memo:
            above = [j for j in range(n) if j != i and leq[i][j]]
            memo[i] = 1 + max((height(j) for j in above), default=-1) if above else 0
        return memo[i]

    return max(height(i) for i in range(n))


def trio_recursive(x, y, z, entry="F"):
    """The mutually recursive trio written as actual mutual recursion.
    Only safe for arguments whose call depth stays small."""
    def f(x, y, z):
        return g(x + 1, y, z)

    def g(x, y, z):
        return f(x, y, z) if y < z else h(x, x + y, z)

    def h(x, y, z):
        return f(x, y, z - x) if z > 0 else (x, y, z)

    return {"F": f, "G": g, "H": h}[entry](x, y, z)


def subtyping_saturation(class_edges, generics, types, intervals):
    """Least subtype/containment pair by worklist saturation.

    class_edges: (sub, super) name pairs as declared; generics: names of
    generic classes; types/intervals: the solved universe. Derives the
    reflexive-transitive subclass closure itself, then grows both
    relations together until nothing new fires.
    """
    names = {t.class_name for t in types} | set(generics)
    for a, b in class_edges:
        names.add(a)
        names.add(b)
    closure = {(n, n) for n in names} | set(class_edges)
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    for n in names:
        closure.add(("Null", n))
        closure.add((n, "Object"))

    sub, cont = set(), set()
    changed = True
    while changed:
        changed = False
        for t1 in types:
            for t2 in types:
                if (t1, t2) in sub:
                    continue
                if t1.class_name == "Null" or t2.class_name == "Object":
                    fire = True
                elif (t1.class_name, t2.class_name) not in closure:
                    fire = False
                elif t1.arg is None and t2.arg is None:
                    fire = True
                else:
                    fire = (t1.arg is not None and t2.arg is not None
                            and (t1.arg, t2.arg) in cont)
                if fire:
                    sub.add((t1, t2))
                    changed = True
        for i1 in intervals:
            for i2 in intervals:
                if (i1, i2) in cont:
                    continue
                if (i1.upper, i2.upper) in sub and (i2.lower, i1.lower) in sub:
                    cont.add((i1, i2))
                    changed = True
    return frozenset(sub), frozenset(cont)
