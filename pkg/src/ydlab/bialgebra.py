"""Finite-dimensional Hopf *-algebras given by structure constants.

An algebra element is a sparse dict {basis index: Scalar}.  Elements of
tensor powers use the row-major flat index of multilinear.  Every algebra
object (FDAlgebra, LegAlgebra) exposes dim, labels, mul, unit and star, so
conjugations and commutators in tensor products share one code path.
"""

from itertools import product

from ydlab.multilinear import (
    LinearMap,
    Tensor,
    add_into,
    solve_exact,
    unravel,
    vkron,
    vscale,
    vsub,
)
from ydlab.report import Report
from ydlab.scalar import ONE, ZERO, coerce


class StarStructure:
    """A conjugate-linear map: conjugate the coefficients, then apply cols."""

    def __init__(self, cols):
        self.cols = [dict(c) for c in cols]

    @classmethod
    def from_map(cls, lin):
        return cls(lin.cols)

    @property
    def matrix(self):
        n = len(self.cols)
        return LinearMap(n, n, self.cols)

    def __call__(self, x):
        out = {}
        for k, c in x.items():
            add_into(out, self.cols[k], c.conjugate())
        return out

    def then(self, lin):
        """lin o star, again conjugate-linear."""
        return StarStructure([lin(c) for c in self.cols])


class Algebra:
    """Shared helpers for anything with dim/mul/unit/star."""

    star = None

    def one(self):
        return dict(self.unit)

    def basis(self, i):
        return {i: ONE}

    def mul_many(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    def commutator(self, x, y):
        return vsub(self.mul(x, y), self.mul(y, x))

    def left_mult_map(self, x):
        return LinearMap(self.dim, self.dim, [self.mul(x, {j: ONE}) for j in range(self.dim)])

    def right_mult_map(self, x):
        return LinearMap(self.dim, self.dim, [self.mul({j: ONE}, x) for j in range(self.dim)])

    def inverse(self, x):
        """Two-sided inverse of x, or None."""
        sol = solve_exact(self.left_mult_map(x), Tensor.from_sparse((self.dim,), self.unit))
        if not isinstance(sol, Tensor):
            return None
        y = sol.sparse()
        if self.mul(y, x) != self.unit:
            return None
        return y

    def conj_by(self, w, w_inv=None):
        """The map Ad(w): x -> w x w^-1 as a LinearMap."""
        if w_inv is None:
            w_inv = self.inverse(w)
        return LinearMap(self.dim, self.dim,
                         [self.mul(self.mul(w, {j: ONE}), w_inv) for j in range(self.dim)])

    def show(self, x):
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = x[k]
            parts.append("%s*%s" % (c, self.label(k)) if c != ONE else self.label(k))
        return " + ".join(parts)

    def label(self, k):
        return self.labels[k]


class FDAlgebra(Algebra):
    """A unital algebra from its multiplication table.

    prod[i][j] is the sparse vector e_i e_j, so the structure tensor
    mult[k][i][j] is the coefficient of e_k in e_i e_j.
    """

    def __init__(self, labels, prod, unit, star=None, name=""):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.prod = [[{k: coerce(v) for k, v in prod[i][j].items() if v} for j in range(self.dim)]
                     for i in range(self.dim)]
        self.unit = None if unit is None else dict(unit)
        self.star = star
        self.name = name

    @classmethod
    def from_function(cls, labels, f, unit, star=None, name=""):
        n = len(labels)
        return cls(labels, [[f(i, j) for j in range(n)] for i in range(n)], unit, star, name)

    @classmethod
    def from_tensor(cls, labels, mult, unit, star=None, name=""):
        n = len(labels)
        if mult.shape != (n, n, n):
            raise ValueError("mult tensor must have shape (dim, dim, dim)")
        prod = [[{} for _ in range(n)] for _ in range(n)]
        for k, v in mult.sparse().items():
            a, i, j = unravel(k, mult.shape)
            prod[i][j][a] = v
        u = unit.sparse() if isinstance(unit, Tensor) else unit
        return cls(labels, prod, u, star, name)

    @property
    def mult(self):
        n = self.dim
        out = {}
        for i in range(n):
            for j in range(n):
                for k, v in self.prod[i][j].items():
                    out[(k * n + i) * n + j] = v
        return Tensor.from_sparse((n, n, n), out)

    def mul(self, x, y):
        out = {}
        prod = self.prod
        for i, a in x.items():
            row = prod[i]
            for j, b in y.items():
                add_into(out, row[j], a * b)
        return out

    def opposite(self, star=None, name=None):
        n = self.dim
        prod = [[self.prod[j][i] for j in range(n)] for i in range(n)]
        return FDAlgebra(self.labels, prod, self.unit, star, name or self.name + "^op")

    def with_star(self, star):
        return FDAlgebra(self.labels, self.prod, self.unit, star, self.name)


class LegAlgebra(Algebra):
    """The tensor product of several algebras, multiplied leg by leg."""

    def __init__(self, factors):
        self.factors = list(factors)
        self.shape = tuple(f.dim for f in self.factors)
        self.dim = 1
        for d in self.shape:
            self.dim *= d
        unit = {0: ONE}
        for f in self.factors:
            unit = vkron(unit, f.unit, f.dim)
        self.unit = unit
        self._memo = {}
        if all(f.star is not None for f in self.factors):
            self.star = self._star
        self.name = " (x) ".join(getattr(f, "name", "?") for f in self.factors)

    def label(self, k):
        return "(x)".join(f.label(i) for f, i in zip(self.factors, unravel(k, self.shape)))

    @property
    def labels(self):
        return [self.label(k) for k in range(self.dim)]

    def _basis_prod(self, i, j):
        key = (i, j)
        r = self._memo.get(key)
        if r is None:
            r = {0: ONE}
            for f, a, b in zip(self.factors, unravel(i, self.shape), unravel(j, self.shape)):
                r = vkron(r, f.prod[a][b] if isinstance(f, FDAlgebra) else f.mul({a: ONE}, {b: ONE}), f.dim)
                if not r:
                    break
            self._memo[key] = r
        return r

    def mul(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                add_into(out, self._basis_prod(i, j), a * b)
        return out

    def _star(self, x):
        out = {}
        for k, c in x.items():
            v = {0: ONE}
            for f, a in zip(self.factors, unravel(k, self.shape)):
                v = vkron(v, f.star({a: ONE}), f.dim)
            add_into(out, v, c.conjugate())
        return out

    def explicit(self, name=None):
        """An FDAlgebra with the same structure constants."""
        n = self.dim
        prod = [[self._basis_prod(i, j) for j in range(n)] for i in range(n)]
        star = StarStructure([self._star({k: ONE}) for k in range(n)]) if self.star else None
        return FDAlgebra(self.labels, prod, self.unit, star, name or self.name)


def tensor_algebra(*algs, name=None):
    return LegAlgebra(algs).explicit(name)


class FDHopf:
    """A Hopf (*-)algebra: algebra, comultiplication, counit, antipode.

    delta maps dim -> (dim, dim); counit maps dim -> (1,); the star (if any)
    lives on the algebra.
    """

    def __init__(self, alg, delta, counit, antipode, name=""):
        self.alg = alg
        self.delta = delta
        self.counit = counit
        self.antipode = antipode
        self.name = name or alg.name
        self._s_inv = None

    @property
    def dim(self):
        return self.alg.dim

    @property
    def star(self):
        return self.alg.star

    @property
    def labels(self):
        return self.alg.labels

    def mul(self, x, y):
        return self.alg.mul(x, y)

    @property
    def unit(self):
        return self.alg.unit

    def eps(self, x):
        return self.counit(x).get(0, ZERO)

    def S(self, x):
        return self.antipode(x)

    @property
    def antipode_inverse(self):
        if self._s_inv is None:
            self._s_inv = self.antipode.inverse()
        return self._s_inv

    def Sinv(self, x):
        return self.antipode_inverse(x)

    def delta_n(self, n):
        """Iterated comultiplication dim -> dim^(n+1) as a LinearMap."""
        d = self.delta
        for k in range(1, n):
            idl = LinearMap.identity((self.dim,) * k)
            d = idl.kron(self.delta) @ d
        return d

    def square(self):
        """A (x) A as a LegAlgebra."""
        return LegAlgebra([self.alg, self.alg])

    def __repr__(self):
        return "FDHopf(%s, dim=%d)" % (self.name, self.dim)


# checks --------------------------------------------------------------------

def _first(pairs, show):
    for key, lhs, rhs in pairs:
        if lhs != rhs:
            return "%s: %s != %s" % (show(key), lhs, rhs)
    return ""


def find_unit(alg):
    """Solve e x = x = x e for e; returns the sparse unit or None."""
    n = alg.dim
    # unknowns c_k with e = sum c_k e_k; rows index (side, j, i)
    cols = []
    for k in range(n):
        col = {}
        for j in range(n):
            for i, v in alg.prod[k][j].items():
                col[(j * n + i)] = v
            for i, v in alg.prod[j][k].items():
                col[n * n + j * n + i] = v
        cols.append(col)
    rhs = {}
    for j in range(n):
        rhs[j * n + j] = ONE
        rhs[n * n + j * n + j] = ONE
    sol = solve_exact(LinearMap(n, 2 * n * n, cols), rhs)
    if isinstance(sol, Tensor):
        return sol.sparse()
    if hasattr(sol, "particular"):
        return sol.particular.sparse()
    return None


def check_algebra(alg):
    n = alg.dim
    r = Report("algebra %s" % alg.name)
    e = [{i: ONE} for i in range(n)]
    bad = ""
    for i, j, k in product(range(n), repeat=3):
        lhs = alg.mul(alg.mul(e[i], e[j]), e[k])
        rhs = alg.mul(e[i], alg.mul(e[j], e[k]))
        if lhs != rhs:
            bad = "(%s %s) %s" % (alg.labels[i], alg.labels[j], alg.labels[k])
            break
    r.add("associativity", not bad, bad)
    unit = alg.unit
    if unit is None:
        cand = find_unit(alg)
        r.add("unit", cand is not None, "no solution of the unit equations" if cand is None else "")
    else:
        bad = ""
        for i in range(n):
            if alg.mul(unit, e[i]) != e[i] or alg.mul(e[i], unit) != e[i]:
                bad = "unit fails on %s" % alg.labels[i]
                break
        r.add("unit", not bad, bad)
    # non-degeneracy: x -> (x e_j)_j injective (automatic with a unit)
    cols = []
    for i in range(n):
        col = {}
        for j in range(n):
            for k, v in alg.prod[i][j].items():
                col[j * n + k] = v
        cols.append(col)
    r.add("non-degenerate", LinearMap(n, n * n, cols).rank() == n)
    if alg.star is not None:
        st = alg.star
        bad = _first(((i, st(st(e[i])), e[i]) for i in range(n)), lambda i: alg.labels[i])
        r.add("star: involutive", not bad, bad)
        bad = ""
        for i, j in product(range(n), repeat=2):
            if st(alg.mul(e[i], e[j])) != alg.mul(st(e[j]), st(e[i])):
                bad = "(%s %s)*" % (alg.labels[i], alg.labels[j])
                break
        r.add("star: anti-multiplicative", not bad, bad)
    return r


def _two_leg_star(h):
    st = h.star
    n = h.dim

    def f(x):
        out = {}
        for k, c in x.items():
            i, j = divmod(k, n)
            add_into(out, vkron(st({i: ONE}), st({j: ONE}), n), c.conjugate())
        return out
    return f


def check_hopf_axioms(h):
    """Every Hopf (*-)algebra axiom, evaluated on basis elements in order."""
    n = h.dim
    r = Report("hopf %s" % h.name)
    alg_report = check_algebra(h.alg)
    r.extend(alg_report, "algebra: ")
    if h.alg.unit is None:
        return r
    e = [{i: ONE} for i in range(n)]
    lab = h.labels
    AA = h.square()
    D = h.delta
    one = h.unit

    bad = ""
    if D(one) != vkron(one, one, n):
        bad = "delta(1) != 1 (x) 1"
    for i, j in product(range(n), repeat=2):
        if bad:
            break
        if D(h.mul(e[i], e[j])) != AA.mul(D(e[i]), D(e[j])):
            bad = "delta(%s %s)" % (lab[i], lab[j])
    r.add("delta: homomorphism", not bad, bad)

    idm = LinearMap.identity(n)
    left = D.kron(idm) @ D
    right = idm.kron(D) @ D
    bad = _first(((i, left.cols[i], right.cols[i]) for i in range(n)), lambda i: lab[i])
    r.add("delta: coassociative", not bad, bad)

    eps_l = h.counit.kron(idm) @ D
    eps_r = idm.kron(h.counit) @ D
    bad = _first(((i, eps_l.cols[i], e[i]) for i in range(n)), lambda i: "(eps (x) id)delta(%s)" % lab[i])
    bad = bad or _first(((i, eps_r.cols[i], e[i]) for i in range(n)), lambda i: "(id (x) eps)delta(%s)" % lab[i])
    r.add("counit: law", not bad, bad)
    bad = "" if h.eps(one) == ONE else "eps(1) != 1"
    for i, j in product(range(n), repeat=2):
        if bad:
            break
        if h.eps(h.mul(e[i], e[j])) != h.eps(e[i]) * h.eps(e[j]):
            bad = "eps(%s %s)" % (lab[i], lab[j])
    r.add("counit: multiplicative", not bad, bad)

    mS1, mS2 = antipode_convolutions(h)
    bad = ""
    for i in range(n):
        target = vscale(h.eps(e[i]), one)
        if mS1[i] != target:
            bad = "m(S (x) id)delta(%s) = %s" % (lab[i], h.alg.show(mS1[i]))
            break
        if mS2[i] != target:
            bad = "m(id (x) S)delta(%s) = %s" % (lab[i], h.alg.show(mS2[i]))
            break
    r.add("antipode: law", not bad, bad)

    S = h.antipode
    bad = "" if S(one) == one else "S(1) != 1"
    for i, j in product(range(n), repeat=2):
        if bad:
            break
        if S(h.mul(e[i], e[j])) != h.mul(S(e[j]), S(e[i])):
            bad = "S(%s %s)" % (lab[i], lab[j])
    r.add("antipode: anti-homomorphism", not bad, bad)
    r.add("antipode: bijective", S.is_bijective())

    # classical consequences, checked rather than assumed
    bad = _first(((i, h.eps(S(e[i])), h.eps(e[i])) for i in range(n)), lambda i: "eps(S(%s))" % lab[i])
    r.add("antipode: eps o S = eps", not bad, bad)
    flipD = flip_map(n, n) @ D
    lhs = D @ S
    rhs = S.kron(S) @ flipD
    bad = _first(((i, lhs.cols[i], rhs.cols[i]) for i in range(n)), lambda i: "delta(S(%s))" % lab[i])
    r.add("antipode: delta o S = (S (x) S) delta^co", not bad, bad)

    if h.star is not None:
        st = h.star
        st2 = _two_leg_star(h)
        bad = _first(((i, D(st(e[i])), st2(D(e[i]))) for i in range(n)), lambda i: "delta(%s*)" % lab[i])
        r.add("star: delta o * = (* (x) *) delta", not bad, bad)
        bad = _first(((i, h.eps(st(e[i])), h.eps(e[i]).conjugate()) for i in range(n)),
                     lambda i: "eps(%s*)" % lab[i])
        r.add("star: eps o * = conj o eps", not bad, bad)
        bad = _first(((i, S(st(S(st(e[i])))), e[i]) for i in range(n)), lambda i: lab[i])
        r.add("star: S o * o S o * = id", not bad, bad)
    return r


def antipode_convolutions(h):
    """Columns of m(S (x) id)delta and m(id (x) S)delta."""
    n = h.dim
    out1, out2 = [], []
    for i in range(n):
        d = h.delta.cols[i]
        a1, a2 = {}, {}
        for k, c in d.items():
            x, y = divmod(k, n)
            add_into(a1, h.mul(h.S({x: ONE}), {y: ONE}), c)
            add_into(a2, h.mul({x: ONE}, h.S({y: ONE})), c)
        out1.append(a1)
        out2.append(a2)
    return out1, out2


def flip_map(n1, n2):
    """Sigma: V1 (x) V2 -> V2 (x) V1."""
    cols = []
    for k in range(n1 * n2):
        i, j = divmod(k, n2)
        cols.append({j * n1 + i: ONE})
    return LinearMap((n1, n2), (n2, n1), cols)


def galois_maps(h):
    """T1(a (x) b) = delta(a)(1 (x) b) and T2(a (x) b) = (a (x) 1)delta(b)."""
    n = h.dim
    AA = h.square()
    one = h.unit
    c1, c2 = [], []
    for k in range(n * n):
        a, b = divmod(k, n)
        c1.append(AA.mul(h.delta.cols[a], vkron(one, {b: ONE}, n)))
        c2.append(AA.mul(vkron({a: ONE}, one, n), h.delta.cols[b]))
    return LinearMap((n, n), (n, n), c1), LinearMap((n, n), (n, n), c2)


def check_galois_maps(h):
    """Bijectivity of T1, T2 by exact rank; inverses stored in report.data."""
    n = h.dim
    r = Report("galois %s" % h.name)
    T1, T2 = galois_maps(h)
    for name, T in (("T1", T1), ("T2", T2)):
        try:
            R = T.inverse()
        except ValueError:
            r.add("%s: bijective" % name, False, "rank %d < %d" % (T.rank(), n * n))
            continue
        r.add("%s: bijective" % name, True)
        r.data["R" + name[1]] = R
    if "R1" in r.data:
        # R1(a (x) b) = a(1) (x) S(a(2)) b
        bad = ""
        for k in range(n * n):
            a, b = divmod(k, n)
            expect = {}
            for kk, c in h.delta.cols[a].items():
                x, y = divmod(kk, n)
                add_into(expect, vkron({x: ONE}, h.mul(h.S({y: ONE}), {b: ONE}), n), c)
            if r.data["R1"].cols[k] != expect:
                bad = "R1(%s (x) %s)" % (h.labels[a], h.labels[b])
                break
        r.add("R1 = a(1) (x) S(a(2))b", not bad, bad)
    if "R2" in r.data:
        # R2(a (x) b) = a S(b(1)) (x) b(2)
        bad = ""
        for k in range(n * n):
            a, b = divmod(k, n)
            expect = {}
            for kk, c in h.delta.cols[b].items():
                x, y = divmod(kk, n)
                add_into(expect, vkron(h.mul({a: ONE}, h.S({x: ONE})), {y: ONE}, n), c)
            if r.data["R2"].cols[k] != expect:
                bad = "R2(%s (x) %s)" % (h.labels[a], h.labels[b])
                break
        r.add("R2 = a S(b(1)) (x) b(2)", not bad, bad)
    return r


# derived Hopf algebras -------------------------------------------------------

def opposite_hopf(h):
    """A^op: reversed product, same coproduct legs, antipode S^-1, star S^-2 o *."""
    Sinv = h.antipode_inverse
    star = None
    if h.star is not None:
        star = h.star.then(Sinv @ Sinv)
    alg = h.alg.opposite(star, h.alg.name + "^op")
    alg.labels = [l + "^op" for l in h.labels]
    return FDHopf(alg, h.delta, h.counit, Sinv, h.name + "^op")


def coopposite_hopf(h):
    """A^co: same algebra, flipped coproduct, antipode S^-1."""
    n = h.dim
    alg = FDAlgebra([l + "^co" for l in h.labels], h.alg.prod, h.alg.unit, h.alg.star, h.alg.name + "^co")
    return FDHopf(alg, flip_map(n, n) @ h.delta, h.counit, h.antipode_inverse, h.name + "^co")


def dual_hopf(h, labels=None):
    """The linear dual with the dual basis.

    Product is the transpose of delta, coproduct the transpose of the product,
    unit eps, counit evaluation at 1, antipode S^T, and the star
    w*(a) = conj(w(S(a)*)).
    """
    n = h.dim
    labels = labels or ["%s'" % l for l in h.labels]
    # (e^i e^j)(e_k) = coefficient of e_i (x) e_j in delta(e_k)
    prod = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for kk, c in h.delta.cols[k].items():
            i, j = divmod(kk, n)
            prod[i][j][k] = c
    unit = {k: h.eps({k: ONE}) for k in range(n)}
    unit = {k: v for k, v in unit.items() if v}
    # delta(e^k) = sum_ij mult[k][i][j] e^i (x) e^j
    dcols = [{} for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in h.alg.prod[i][j].items():
                dcols[k][i * n + j] = c
    counit = LinearMap(n, 1, [{0: h.unit[k]} if k in h.unit else {} for k in range(n)])
    antipode = h.antipode.transpose()
    star = None
    if h.star is not None:
        cols = []
        for k in range(n):
            col = {}
            for j in range(n):
                v = h.star(h.S({j: ONE})).get(k)
                if v:
                    col[j] = v.conjugate()
            cols.append(col)
        star = StarStructure(cols)
    alg = FDAlgebra(labels, prod, unit, star, "dual(%s)" % h.alg.name)
    return FDHopf(alg, LinearMap(n, (n, n), dcols), counit, antipode, "dual(%s)" % h.name)


def relabel_map(perm):
    """Permutation matrix sending e_i to e_perm[i]."""
    return LinearMap(len(perm), len(perm), [{p: ONE} for p in perm])


def check_hopf_morphism(f, h1, h2, star=True):
    """f: h1 -> h2 is a bijective unital (*-)algebra and coalgebra map."""
    n = h1.dim
    r = Report("morphism %s -> %s" % (h1.name, h2.name))
    r.add("bijective", n == h2.dim and f.is_bijective())
    e = [{i: ONE} for i in range(n)]
    bad = "" if f(h1.unit) == h2.unit else "f(1) != 1"
    for i, j in product(range(n), repeat=2):
        if bad:
            break
        if f(h1.mul(e[i], e[j])) != h2.mul(f(e[i]), f(e[j])):
            bad = "f(%s %s)" % (h1.labels[i], h1.labels[j])
    r.add("algebra map", not bad, bad)
    lhs = h2.delta @ f
    rhs = f.kron(f) @ h1.delta
    bad = _first(((i, lhs.cols[i], rhs.cols[i]) for i in range(n)), lambda i: h1.labels[i])
    r.add("coalgebra map", not bad, bad)
    bad = _first(((i, h2.eps(f(e[i])), h1.eps(e[i])) for i in range(n)), lambda i: h1.labels[i])
    r.add("counit", not bad, bad)
    bad = _first(((i, h2.S(f(e[i])), f(h1.S(e[i]))) for i in range(n)), lambda i: h1.labels[i])
    r.add("antipode", not bad, bad)
    if star and h1.star is not None and h2.star is not None:
        bad = _first(((i, h2.star(f(e[i])), f(h1.star(e[i]))) for i in range(n)), lambda i: h1.labels[i])
        r.add("star", not bad, bad)
    return r


def one_dim_hopf():
    alg = FDAlgebra(["1"], [[{0: ONE}]], {0: ONE}, StarStructure([{0: ONE}]), "k")
    idm = LinearMap.identity(1)
    return FDHopf(alg, LinearMap(1, (1, 1), [{0: ONE}]), idm, idm, "k")


def same_structure(h1, h2, f=None):
    """True when f (default: identity on basis) carries every structure map of h1 to h2's."""
    if f is None:
        f = LinearMap.identity(h1.dim)
    return check_hopf_morphism(f, h1, h2).ok


__all__ = [
    "Algebra", "FDAlgebra", "LegAlgebra", "FDHopf", "StarStructure",
    "check_algebra", "check_hopf_axioms", "check_galois_maps", "galois_maps",
    "opposite_hopf", "coopposite_hopf", "dual_hopf", "flip_map", "tensor_algebra",
    "check_hopf_morphism", "relabel_map", "one_dim_hopf", "find_unit",
]
