"""Finite groups, group actions and the Hopf algebras K(G) and k[G]."""

from itertools import permutations, product

from ydlab.bialgebra import FDAlgebra, FDHopf, StarStructure
from ydlab.multilinear import LinearMap
from ydlab.scalar import ONE


class GroupError(ValueError):
    pass


class ActionError(ValueError):
    pass


class FiniteGroup:
    """A group given by its Cayley table; element 0 is the identity."""

    def __init__(self, labels, table, name=""):
        self.labels = list(labels)
        self.n = len(self.labels)
        self.table = [list(row) for row in table]
        self.name = name
        self._validate()
        self.inv = [next(h for h in range(self.n) if self.table[g][h] == 0) for g in range(self.n)]

    def _validate(self):
        n = self.n
        if n == 0:
            raise GroupError("empty group")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise GroupError("table must be %d x %d" % (n, n))
        for row in self.table:
            for v in row:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise GroupError("table entry out of range: %r" % (v,))
        lab = self.labels
        for g in range(n):
            if self.table[0][g] != g or self.table[g][0] != g:
                raise GroupError("first element %s is not an identity (fails on %s)" % (lab[0], lab[g]))
        for g in range(n):
            if not any(self.table[g][h] == 0 for h in range(n)):
                raise GroupError("%s has no inverse" % lab[g])
        t = self.table
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError("not associative: (%s %s) %s != %s (%s %s)"
                                 % (lab[a], lab[b], lab[c], lab[a], lab[b], lab[c]))

    @property
    def order(self):
        return self.n

    def mul(self, g, h):
        return self.table[g][h]

    def is_abelian(self):
        return all(self.table[g][h] == self.table[h][g] for g in range(self.n) for h in range(self.n))

    def __repr__(self):
        return "FiniteGroup(%s, order %d)" % (self.name, self.n)


class GroupAction:
    """A left action g.s on {0, ..., m-1}; perm[g][s] is g.s."""

    def __init__(self, group, m, perm, name=""):
        self.group = group
        self.m = m
        self.perm = [tuple(p) for p in perm]
        self.name = name or "%s on %d points" % (group.name, m)
        self._validate()

    def _validate(self):
        G = self.group
        if len(self.perm) != G.n:
            raise ActionError("need one permutation per group element")
        for g, p in enumerate(self.perm):
            if sorted(p) != list(range(self.m)):
                raise ActionError("image list of %s is not a permutation of 0..%d" % (G.labels[g], self.m - 1))
        if self.perm[0] != tuple(range(self.m)):
            raise ActionError("identity does not act trivially")
        for g, h in product(range(G.n), repeat=2):
            gh = G.mul(g, h)
            for s in range(self.m):
                if self.perm[gh][s] != self.perm[g][self.perm[h][s]]:
                    raise ActionError("not compatible with the group law: (%s%s).%d != %s.(%s.%d)"
                                      % (G.labels[g], G.labels[h], s, G.labels[g], G.labels[h], s))

    def act(self, g, s):
        return self.perm[g][s]


# catalog -------------------------------------------------------------------

def cyclic_group(n, name=None):
    labels = ["e"] + ["a%d" % k if k > 1 else "a" for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(labels, table, name or "Z%d" % n)


def product_group(G, H, name=None):
    pairs = [(g, h) for g in range(G.n) for h in range(H.n)]
    labels = []
    for g, h in pairs:
        if g == 0 and h == 0:
            labels.append("e")
        else:
            labels.append("(%s,%s)" % (G.labels[g], H.labels[h]))
    idx = {p: k for k, p in enumerate(pairs)}
    table = [[idx[(G.mul(a[0], b[0]), H.mul(a[1], b[1]))] for b in pairs] for a in pairs]
    return FiniteGroup(labels, table, name or "%sx%s" % (G.name, H.name))


def _cycle_label(p):
    seen, parts = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, t = [], s
        while t not in seen:
            seen.add(t)
            cyc.append(str(t))
            t = p[t]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def permutation_group(perms, name=""):
    """The group of the given permutations (closed, identity first)."""
    perms = [tuple(p) for p in perms]
    idx = {p: k for k, p in enumerate(perms)}
    # composition (pq)(s) = p(q(s)), matching left actions
    table = [[idx[tuple(p[q[s]] for s in range(len(p)))] for q in perms] for p in perms]
    return FiniteGroup([_cycle_label(p) for p in perms], table, name)


def symmetric_group(n, name=None):
    perms = sorted(permutations(range(n)), key=lambda p: (p != tuple(range(n)), p))
    return permutation_group(perms, name or "S%d" % n)


def dihedral_group(n, name=None):
    rot = [tuple((s + k) % n for s in range(n)) for k in range(n)]
    ref = [tuple((k - s) % n for s in range(n)) for k in range(n)]
    return permutation_group(rot + ref, name or "D%d" % n)


def regular_action(G, name=None):
    """G acting on itself by left translation."""
    return GroupAction(G, G.n, [[G.mul(g, s) for s in range(G.n)] for g in range(G.n)],
                       name or "%s on %s" % (G.name, G.name))


def trivial_action(G, m, name=None):
    return GroupAction(G, m, [list(range(m))] * G.n, name or "%s trivially on %d points" % (G.name, m))


def s3_on_3points():
    perms = sorted(permutations(range(3)), key=lambda p: (p != (0, 1, 2), p))
    G = permutation_group(perms, "S3")
    return GroupAction(G, 3, perms, "S3 on 3 points")


def z2_swap():
    G = cyclic_group(2)
    return GroupAction(G, 2, [[0, 1], [1, 0]], "Z2 on 2 points")


GROUPS = {
    "z2": lambda: cyclic_group(2),
    "z3": lambda: cyclic_group(3),
    "z4": lambda: cyclic_group(4),
    "klein4": lambda: product_group(cyclic_group(2), cyclic_group(2), "Klein4"),
    "s3": lambda: symmetric_group(3),
    "d4": lambda: dihedral_group(4),
}

ACTIONS = {
    "z2-on-2points": z2_swap,
    "z3-on-z3": lambda: regular_action(cyclic_group(3)),
    "s3-on-3points": s3_on_3points,
}


def catalog(name):
    """(group, action or None) for a built-in catalog name."""
    if name in GROUPS:
        return GROUPS[name](), None
    if name in ACTIONS:
        act = ACTIONS[name]()
        return act.group, act
    raise KeyError("unknown catalog entry %r" % name)


CATALOG_NAMES = ["z2", "z3", "z4", "klein4", "s3", "d4", "z2-on-2points", "s3-on-3points", "z3-on-z3"]


# Hopf algebras ---------------------------------------------------------------

def function_hopf(G):
    """K(G): functions on G in the delta basis."""
    n = G.n
    labels = ["d_%s" % l for l in G.labels]
    prod = [[({i: ONE} if i == j else {}) for j in range(n)] for i in range(n)]
    unit = {i: ONE for i in range(n)}
    star = StarStructure([{i: ONE} for i in range(n)])
    alg = FDAlgebra(labels, prod, unit, star, "K(%s)" % G.name)
    dcols = [{} for _ in range(n)]
    for u in range(n):
        for v in range(n):
            dcols[G.mul(u, v)][u * n + v] = ONE
    counit = LinearMap(n, 1, [{0: ONE} if x == 0 else {} for x in range(n)])
    antipode = LinearMap(n, n, [{G.inv[x]: ONE} for x in range(n)])
    return FDHopf(alg, LinearMap(n, (n, n), dcols), counit, antipode, "K(%s)" % G.name)


def group_hopf(G):
    """k[G]: the group algebra with lambda_g* = lambda_{g^-1}."""
    n = G.n
    labels = ["l_%s" % l for l in G.labels]
    prod = [[{G.mul(g, h): ONE} for h in range(n)] for g in range(n)]
    star = StarStructure([{G.inv[g]: ONE} for g in range(n)])
    alg = FDAlgebra(labels, prod, {0: ONE}, star, "k[%s]" % G.name)
    dcols = [{g * n + g: ONE} for g in range(n)]
    counit = LinearMap(n, 1, [{0: ONE} for _ in range(n)])
    antipode = LinearMap(n, n, [{G.inv[g]: ONE} for g in range(n)])
    return FDHopf(alg, LinearMap(n, (n, n), dcols), counit, antipode, "k[%s]" % G.name)


def canonical_group_pairing(G):
    """p(d_x, l_y) = [x = y] between K(G) and k[G]."""
    from ydlab.pairing import Pairing
    n = G.n
    return Pairing(function_hopf(G), group_hopf(G), [[ONE if i == j else 0 for j in range(n)] for i in range(n)],
                   "p_%s" % G.name)


def expected_multiplier(G):
    """sum_g d_g (x) l_g."""
    from ydlab.multilinear import Tensor
    n = G.n
    return Tensor.from_sparse((n, n), {g * n + g: ONE for g in range(n)})
