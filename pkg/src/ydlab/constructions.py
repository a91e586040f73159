"""Derived algebras: smash and crossed products, Heisenberg algebras, twisted
tensor (co)products, the Drinfeld double and codouble and their pairing.

Leg conventions (flat index, row-major):

    X # H           x*nH + h          left smash, H acting on X
    B # X           b*nX + x          right smash, B acting on X from the right
    H(p) = A # B    a*nB + b          B acts on A by b |> a = a(1) p(a(2), b)
    D(p) = A >< B   a*nB + b          B carries the opposite product
    T(p) = A (x) B  a*nB + b          A carries the opposite product
    D_W on A (x) B: (id (x) sigma_W (x) id)(delta_A (x) delta_B), legs (A, B, A, B)
"""

from collections import namedtuple
from itertools import product

from ydlab.actions import LEFT, Action
from ydlab.bialgebra import (
    FDAlgebra,
    FDHopf,
    LegAlgebra,
    StarStructure,
    check_algebra,
    check_hopf_axioms,
    check_hopf_morphism,
    coopposite_hopf,
    flip_map,
    opposite_hopf,
)
from ydlab.multilinear import (
    LinearMap,
    Tensor,
    add_into,
    apply_on_legs,
    embed_vec,
    left_inverse,
    map_legs,
    solve_exact,
    vkron,
    vscale,
)
from ydlab.pairing import Pairing, flip_coop_pairing, flip_pairing
from ydlab.report import Report
from ydlab.scalar import ONE, ZERO

TWISTING, COTWISTING = "twisting", "cotwisting"


class ConstructionError(ValueError):
    pass


def _e(i):
    return {i: ONE}


def _table_star(n, f):
    return StarStructure([f(k) for k in range(n)])


# algebra maps ----------------------------------------------------------------

def check_algebra_map(f, alg1, alg2, anti=False, star=True, title=None):
    """f: alg1 -> alg2 bijective, unital, (anti-)multiplicative and (anti-)*."""
    n = alg1.dim
    kind = "anti-" if anti else ""
    r = Report(title or "%shomomorphism %s -> %s" % (kind, alg1.name, alg2.name))
    r.add("bijective", n == alg2.dim and f.is_bijective(), "rank %d" % f.rank())
    r.add("unital", f(alg1.unit) == alg2.unit)
    bad = ""
    for i, j in product(range(n), repeat=2):
        lhs = f(alg1.mul(_e(i), _e(j)))
        rhs = alg2.mul(f.cols[j], f.cols[i]) if anti else alg2.mul(f.cols[i], f.cols[j])
        if lhs != rhs:
            bad = "%s %s" % (alg1.label(i), alg1.label(j))
            break
    r.add("%smultiplicative" % kind, not bad, bad)
    if star and alg1.star is not None and alg2.star is not None:
        bad = ""
        for i in range(n):
            if f(alg1.star(_e(i))) != alg2.star(f.cols[i]):
                bad = alg1.label(i)
                break
        r.add("star", not bad, bad)
    return r


# smash products ----------------------------------------------------------------

def smash_product(X, H, act, name=None):
    """X # H with (x # h)(y # h') = x(h(1) |> y) # h(2)h'."""
    if act.side != LEFT:
        raise ConstructionError("smash_product needs a left action")
    nX, nH = X.dim, H.dim
    acts = act.map.cols  # index h*nX + y

    def prod(i, j):
        x, h = divmod(i, nH)
        y, hp = divmod(j, nH)
        out = {}
        for k, c in H.delta.cols[h].items():
            h1, h2 = divmod(k, nH)
            hy = acts[h1 * nX + y]
            if not hy:
                continue
            left = X.mul(_e(x), hy)
            if left:
                add_into(out, vkron(left, H.mul(_e(h2), _e(hp)), nH), c)
        return out

    n = nX * nH
    table = [[prod(i, j) for j in range(n)] for i in range(n)]
    labels = ["%s#%s" % (X.labels[x], H.labels[h]) for x in range(nX) for h in range(nH)]
    star = None
    if X.star is not None and H.star is not None:
        def st(k):
            x, h = divmod(k, nH)
            out = {}
            for kk, c in H.delta.cols[h].items():
                h1, h2 = divmod(kk, nH)
                # (x # h)* = (h*(1) |> x*) # h*(2); delta(h*) = (* (x) *)delta(h)
                s1, s2 = H.star(_e(h1)), H.star(_e(h2))
                add_into(out, vkron(act.act(s1, X.star(_e(x))), s2, nH), c.conjugate())
            return out
        star = _table_star(n, st)
    return FDAlgebra(labels, table, vkron(X.unit, H.unit, nH), star, name or "%s#%s" % (X.name, H.name))


def right_smash_product(B, X, act, name=None):
    """B # X with (b # x)(b' # x') = b b'(1) # (x <| b'(2)) x', act a right action of B."""
    if act.side == LEFT:
        raise ConstructionError("right_smash_product needs a right action")
    nB, nX = B.dim, X.dim

    def prod(i, j):
        b, x = divmod(i, nX)
        bp, xp = divmod(j, nX)
        out = {}
        for k, c in B.delta.cols[bp].items():
            b1, b2 = divmod(k, nB)
            xb = act.act(_e(b2), _e(x))
            if not xb:
                continue
            add_into(out, vkron(B.mul(_e(b), _e(b1)), X.mul(xb, _e(xp)), nX), c)
        return out

    n = nB * nX
    table = [[prod(i, j) for j in range(n)] for i in range(n)]
    labels = ["%s#%s" % (B.labels[b], X.labels[x]) for b in range(nB) for x in range(nX)]
    star = None
    if X.star is not None and B.star is not None:
        def st(k):
            b, x = divmod(k, nX)
            out = {}
            for kk, c in B.delta.cols[b].items():
                b1, b2 = divmod(kk, nB)
                # (b # x)* = b*(1) # (x* <| b*(2))
                s1, s2 = B.star(_e(b1)), B.star(_e(b2))
                add_into(out, vkron(s1, act.act(s2, X.star(_e(x))), nX), c.conjugate())
            return out
        star = _table_star(n, st)
    return FDAlgebra(labels, table, vkron(B.unit, X.unit, nX), star, name or "%s#%s" % (B.name, X.name))


# Heisenberg algebras -------------------------------------------------------------

def heisenberg(p, name=None):
    """H(p) = A # B with (a # b)(a' # b') = a(b(1) |> a') # b(2)b'."""
    A, B = p.A, p.B
    act = Action.from_function(B, A.alg, lambda b, a: p.b_on_a(_e(b), _e(a)), LEFT, "b |> a")
    alg = smash_product(A.alg, B, act, name or "H(%s)" % p.name)
    alg.labels = ["%s#%s" % (A.labels[a], B.labels[b]) for a in range(A.dim) for b in range(B.dim)]
    return alg


def iota_A(p, a):
    return vkron(a, p.B.unit, p.B.dim)


def iota_B(p, b):
    return vkron(p.A.unit, b, p.B.dim)


def heisenberg_relations(p, H=None):
    """ba = (b(1) |> a)b(2) = a(1)(b <| a(2)) and ab = b(2)(S^-1(b(1)) |> a) = (b <| S^-1(a(2)))a(1)."""
    H = H or heisenberg(p)
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    r = Report("Heisenberg relations %s" % p.name)
    iA = lambda a: iota_A(p, a)
    iB = lambda b: iota_B(p, b)
    bad = [""] * 4
    for a, b in product(range(nA), range(nB)):
        ea, eb = _e(a), _e(b)
        ba = H.mul(iB(eb), iA(ea))
        ab = H.mul(iA(ea), iB(eb))
        r1, r2, r3, r4 = {}, {}, {}, {}
        for k, c in B.delta.cols[b].items():
            b1, b2 = divmod(k, nB)
            add_into(r1, H.mul(iA(p.b_on_a(_e(b1), ea)), iB(_e(b2))), c)
            add_into(r3, H.mul(iB(_e(b2)), iA(p.b_on_a(B.Sinv(_e(b1)), ea))), c)
        for k, c in A.delta.cols[a].items():
            a1, a2 = divmod(k, nA)
            add_into(r2, H.mul(iA(_e(a1)), iB(p.b_right_a(eb, _e(a2)))), c)
            add_into(r4, H.mul(iB(p.b_right_a(eb, A.Sinv(_e(a2)))), iA(_e(a1))), c)
        where = "a=%s b=%s" % (A.labels[a], B.labels[b])
        for idx, (lhs, rhs) in enumerate(((ba, r1), (ba, r2), (ab, r3), (ab, r4))):
            if not bad[idx] and lhs != rhs:
                bad[idx] = where
    r.add("ba = (b(1) |> a) b(2)", not bad[0], bad[0])
    r.add("ba = a(1) (b <| a(2))", not bad[1], bad[1])
    r.add("ab = b(2) (S^-1(b(1)) |> a)", not bad[2], bad[2])
    r.add("ab = (b <| S^-1(a(2))) a(1)", not bad[3], bad[3])
    return r


def lu_anti_isos(p, H=None, Hbar=None):
    """L(b # a) = S_A^-1(a) # S_B(b) and L'(b # a) = S_A(a) # S_B^-1(b), maps H(p-bar) -> H(p).

    Returns (L, L', report).
    """
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    H = H or heisenberg(p)
    Hbar = Hbar or heisenberg(flip_pairing(p))
    cols, cols2 = [], []
    for b in range(nB):
        for a in range(nA):
            cols.append(vkron(A.Sinv(_e(a)), B.S(_e(b)), nB))
            cols2.append(vkron(A.S(_e(a)), B.Sinv(_e(b)), nB))
    L = LinearMap(nB * nA, nA * nB, cols)
    Lp = LinearMap(nB * nA, nA * nB, cols2)
    involutive = A.antipode @ A.antipode == LinearMap.identity(nA) and \
        B.antipode @ B.antipode == LinearMap.identity(nB)
    r = Report("Lu anti-isomorphisms %s" % p.name)
    r.extend(check_algebra_map(L, Hbar, H, anti=True, star=involutive), "L: ")
    r.extend(check_algebra_map(Lp, Hbar, H, anti=True, star=involutive), "L': ")
    if involutive:
        r.add("L = L'", L == Lp)
    return L, Lp, r


# crossed products ----------------------------------------------------------------

class CrossedProduct(namedtuple("CrossedProduct", "algebra iso smash embedding report")):
    """algebra: the span of (b (x) 1)Gamma(x) in H(p-bar) (x) X in the basis (b, x);
    iso: I_Gamma onto smash = B #_{<|} X; embedding: basis -> H(p-bar) (x) X."""


def coaction_right_action(gamma, p):
    """x <| b = (p_b (x) id)Gamma(x) for a left A-coaction Gamma, as a right action of B."""
    A, B, X = p.A, p.B, gamma.X
    nA, nX = A.dim, X.dim

    def f(b, x):
        out = {}
        for k, c in gamma.map.cols[x].items():
            a, y = divmod(k, nX)
            v = p.rows[a].get(b)
            if v is not None:
                add_into(out, _e(y), c * v)
        return out
    return Action.from_function(B, X, f, "right", "<| from coaction")


def crossed_product(gamma, p, name=None):
    """The crossed product of a left A-coaction with p: A x B, and I_Gamma."""
    A, B, X = p.A, p.B, gamma.X
    if gamma.H.dim != A.dim or gamma.side != LEFT:
        raise ConstructionError("crossed_product needs a left coaction of p.A")
    nA, nB, nX = A.dim, B.dim, X.dim
    Hbar = heisenberg(flip_pairing(p))
    amb = LegAlgebra([Hbar, X])
    r = Report("crossed product %s" % (name or p.name))

    # (b (x) 1)Gamma(x) = sum b # x(-1) (x) x(0)
    cols = []
    for b in range(nB):
        for x in range(nX):
            v = {}
            for k, c in gamma.map.cols[x].items():
                a, y = divmod(k, nX)
                v[(b * nA + a) * nX + y] = c
            cols.append(v)
    E = LinearMap(nB * nX, nB * nA * nX, cols)
    rank = E.rank()
    r.add("span has dimension dim B * dim X", rank == nB * nX, "rank %d" % rank)
    if rank != nB * nX:
        return CrossedProduct(None, None, None, E, r)
    Linv = left_inverse(E)

    def express(y):
        z = Linv(y)
        if E(z) != y:
            raise ConstructionError("product leaves the crossed product span")
        return z

    n = nB * nX
    closed = True
    table = [[None] * n for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        y = amb.mul(E.cols[i], E.cols[j])
        z = Linv(y)
        if E(z) != y:
            closed = False
        table[i][j] = z
    r.add("closed under multiplication", closed)
    unit = express(amb.unit) if closed else {}
    r.add("unit = 1 (x) Gamma(1)", unit == vkron(B.unit, X.unit, nX))

    # product formula (b(x(-1) |> b') (x) 1)Gamma(x(0) x'), read in the basis (b'', x'')
    bad = ""
    for i, j in product(range(n), repeat=2):
        b, x = divmod(i, nX)
        bp, xp = divmod(j, nX)
        expect = {}
        for k, c in gamma.map.cols[x].items():
            a, y = divmod(k, nX)
            bb = B.mul(_e(b), p.a_on_b(_e(a), _e(bp)))
            if bb:
                add_into(expect, vkron(bb, X.mul(_e(y), _e(xp)), nX), c)
        if expect != table[i][j]:
            bad = "b=%s x=%s b'=%s x'=%s" % (B.labels[b], X.labels[x], B.labels[bp], X.labels[xp])
            break
    r.add("product = (b(x(-1) |> b') (x) 1)Gamma(x(0)x')", not bad, bad)

    star = None
    if closed and amb.star is not None:
        star = StarStructure([express(amb.star(E.cols[k])) for k in range(n)])
    labels = ["(%s(x)1)G(%s)" % (B.labels[b], X.labels[x]) for b in range(nB) for x in range(nX)]
    alg = FDAlgebra(labels, table, unit, star, name or "%s x_G %s" % (B.name, X.name))
    r.extend(check_algebra(alg), "algebra: ")

    smash = right_smash_product(B, X, coaction_right_action(gamma, p))
    iso = LinearMap.identity(n)
    r.extend(check_algebra_map(iso, alg, smash, title="I_Gamma"), "I_Gamma: ")
    return CrossedProduct(alg, iso, smash, E, r)


# twisting and cotwisting maps --------------------------------------------------

class TwistingMap:
    """kind twisting: map B (x) A -> A (x) B; kind cotwisting: map A (x) B -> B (x) A."""

    def __init__(self, lmap, kind=TWISTING, name=""):
        if kind not in (TWISTING, COTWISTING):
            raise ValueError("kind must be 'twisting' or 'cotwisting'")
        self.map = lmap
        self.kind = kind
        self.name = name

    def __call__(self, x):
        return self.map(x)


def _alg(h):
    return h.alg if isinstance(h, FDHopf) else h


def check_twisting(t, A, B):
    """Twisting laws (multiplications) or cotwisting laws (comultiplications)."""
    Aa, Ba = _alg(A), _alg(B)
    nA, nB = Aa.dim, Ba.dim
    T = t.map
    r = Report("%s map %s" % (t.kind, t.name))
    if t.kind == TWISTING:
        mA = LinearMap((nA, nA), nA, [Aa.mul(_e(i), _e(j)) for i in range(nA) for j in range(nA)])
        mB = LinearMap((nB, nB), nB, [Ba.mul(_e(i), _e(j)) for i in range(nB) for j in range(nB)])
        bad = ""
        for b, a, ap in product(range(nB), range(nA), range(nA)):
            lhs = T(vkron(_e(b), Aa.mul(_e(a), _e(ap)), nA))
            x = vkron(vkron(_e(b), _e(a), nA), _e(ap), nA)
            y, s = apply_on_legs(x, (nB, nA, nA), (0, 1), T)
            y, s = apply_on_legs(y, s, (1, 2), T)
            y, s = apply_on_legs(y, s, (0, 1), mA)
            if lhs != y:
                bad = "b=%s a=%s a'=%s" % (Ba.labels[b], Aa.labels[a], Aa.labels[ap])
                break
        r.add("T(id (x) m_A) = (m_A (x) id)(id (x) T)(T (x) id)", not bad, bad)
        bad = ""
        for b, bp, a in product(range(nB), range(nB), range(nA)):
            lhs = T(vkron(Ba.mul(_e(b), _e(bp)), _e(a), nA))
            x = vkron(vkron(_e(b), _e(bp), nB), _e(a), nA)
            y, s = apply_on_legs(x, (nB, nB, nA), (1, 2), T)
            y, s = apply_on_legs(y, s, (0, 1), T)
            y, s = apply_on_legs(y, s, (1, 2), mB)
            if lhs != y:
                bad = "b=%s b'=%s a=%s" % (Ba.labels[b], Ba.labels[bp], Aa.labels[a])
                break
        r.add("T(m_B (x) id) = (id (x) m_B)(T (x) id)(id (x) T)", not bad, bad)
        bad = ""
        for a in range(nA):
            if T(vkron(Ba.unit, _e(a), nA)) != vkron(_e(a), Ba.unit, nB):
                bad = "T(1 (x) %s)" % Aa.labels[a]
                break
        for b in range(nB):
            if not bad and T(vkron(_e(b), Aa.unit, nA)) != vkron(Aa.unit, _e(b), nB):
                bad = "T(%s (x) 1)" % Ba.labels[b]
        r.add("normalized: T(1 (x) a) = a (x) 1, T(b (x) 1) = 1 (x) b", not bad, bad)
        r.add("invertible", T.is_bijective())
        if isinstance(A, FDHopf) and isinstance(B, FDHopf):
            # (id (x) Sigma (x) id)(dA (x) dB)T = (T (x) T)(id (x) Sigma (x) id)(dB (x) dA)
            bad = ""
            for b, a in product(range(nB), range(nA)):
                x, s = map_legs(T.cols[b * nA + a], (nA, nB), {0: A.delta, 1: B.delta})
                lhs, _ = apply_on_legs(x, s, (1, 2), flip_map(nA, nB))
                y, s = map_legs(vkron(_e(b), _e(a), nA), (nB, nA), {0: B.delta, 1: A.delta})
                y, s = apply_on_legs(y, s, (1, 2), flip_map(nB, nA))
                y, s = apply_on_legs(y, s, (0, 1), T)
                y, s = apply_on_legs(y, s, (2, 3), T)
                if lhs != y:
                    bad = "b=%s a=%s" % (B.labels[b], A.labels[a])
                    break
            r.add("coproduct compatible: (id (x) Sigma (x) id)(dA (x) dB)T = (T (x) T)(id (x) Sigma (x) id)(dB (x) dA)",
                  not bad, bad)
        return r

    bad = ""
    for a, b in product(range(nA), range(nB)):
        lhs, _ = map_legs(T.cols[a * nB + b], (nB, nA), {1: A.delta})
        x, s = map_legs(vkron(_e(a), _e(b), nB), (nA, nB), {0: A.delta})
        x, s = apply_on_legs(x, s, (1, 2), T)
        x, s = apply_on_legs(x, s, (0, 1), T)
        if lhs != x:
            bad = "a=%s b=%s" % (A.labels[a], B.labels[b])
            break
    r.add("(id (x) dA)T' = (T' (x) id)(id (x) T')(dA (x) id)", not bad, bad)
    bad = ""
    for a, b in product(range(nA), range(nB)):
        lhs, _ = map_legs(T.cols[a * nB + b], (nB, nA), {0: B.delta})
        x, s = map_legs(vkron(_e(a), _e(b), nB), (nA, nB), {1: B.delta})
        x, s = apply_on_legs(x, s, (0, 1), T)
        x, s = apply_on_legs(x, s, (1, 2), T)
        if lhs != x:
            bad = "a=%s b=%s" % (A.labels[a], B.labels[b])
            break
    r.add("(dB (x) id)T' = (id (x) T')(T' (x) id)(id (x) dB)", not bad, bad)
    AB, BA = LegAlgebra([Aa, Ba]), LegAlgebra([Ba, Aa])
    r.extend(check_algebra_map(T, AB, BA, title="T' algebra isomorphism"), "algebra isomorphism: ")
    return r


def flip_cotwisting(A, B):
    return TwistingMap(flip_map(A.dim, B.dim), COTWISTING, "flip")


def flip_twisting(A, B):
    return TwistingMap(flip_map(B.dim, A.dim), TWISTING, "flip")


# antipodes by exact solving --------------------------------------------------------

def solve_antipode(alg, delta, counit):
    """The unique S with m(S (x) id)delta = eps 1, or None.

    S is unknown as an n x n matrix (n^2 unknowns); each basis element gives
    n linear equations.
    """
    n = alg.dim
    prod_ = alg.prod
    uses = [[] for _ in range(n)]  # uses[i] = [(x, j, c)] with c e_i (x) e_j in delta(e_x)
    for x in range(n):
        for k, c in delta.cols[x].items():
            i, j = divmod(k, n)
            uses[i].append((x, j, c))
    cols = []
    for i in range(n):
        for k in range(n):
            col = {}
            for x, j, c in uses[i]:
                for l, v in prod_[k][j].items():
                    key = x * n + l
                    w = col.get(key, ZERO) + c * v
                    if w:
                        col[key] = w
                    else:
                        col.pop(key, None)
            cols.append(col)
    rhs = {}
    for x in range(n):
        e = counit.cols[x].get(0)
        if e:
            for l, v in alg.unit.items():
                rhs[x * n + l] = e * v
    sol = solve_exact(LinearMap(n * n, n * n, cols), rhs)
    if not isinstance(sol, Tensor):
        return None
    s = sol.sparse()
    scols = [{} for _ in range(n)]
    for key, v in s.items():
        i, k = divmod(key, n)
        scols[i][k] = v
    return LinearMap(n, n, scols)


# twisted tensor coproducts ---------------------------------------------------------

def check_skew_copairing(W, A, B):
    """(id (x) dA)W = W12 W13 and (dB (x) id)W = W23 W13, W in B (x) A."""
    nA, nB = A.dim, B.dim
    r = Report("skew-copairing")
    w = W.sparse() if isinstance(W, Tensor) else W
    BA = LegAlgebra([B.alg, A.alg])
    r.add("invertible", BA.inverse(w) is not None)
    BAA = LegAlgebra([B.alg, A.alg, A.alg])
    lhs, _ = map_legs(w, (nB, nA), {1: A.delta})
    shape = (nB, nA, nA)
    w12 = embed_vec(w, (nB, nA), (0, 1), shape, [A.unit])
    w13 = embed_vec(w, (nB, nA), (0, 2), shape, [A.unit])
    r.add("(id (x) delta_A)W = W12 W13", lhs == BAA.mul(w12, w13))
    BBA = LegAlgebra([B.alg, B.alg, A.alg])
    lhs, _ = map_legs(w, (nB, nA), {0: B.delta})
    shape = (nB, nB, nA)
    w23 = embed_vec(w, (nB, nA), (1, 2), shape, [B.unit])
    w13 = embed_vec(w, (nB, nA), (0, 2), shape, [B.unit])
    r.add("(delta_B (x) id)W = W23 W13", lhs == BBA.mul(w23, w13))
    return r


def _tensor_hopf(A, B, delta, name, antipode=True):
    """The algebra A (x) B with a given coproduct; counit eps (x) eps, antipode solved."""
    alg = LegAlgebra([A.alg, B.alg]).explicit(name)
    alg.labels = ["%s(x)%s" % (A.labels[a], B.labels[b]) for a in range(A.dim) for b in range(B.dim)]
    counit = A.counit.kron(B.counit)
    counit = LinearMap(alg.dim, 1, counit.cols)
    S = solve_antipode(alg, delta, counit) if antipode else None
    if S is None:
        S = LinearMap(alg.dim, alg.dim, [{} for _ in range(alg.dim)])
    return FDHopf(alg, delta, counit, S, name)


def twisted_coproduct(A, B, T, name=None, antipode=True):
    """(A (x) B, (id (x) T (x) id)(dA (x) dB)) for a cotwisting map T: A (x) B -> B (x) A."""
    nA, nB = A.dim, B.dim
    tm = T.map if isinstance(T, TwistingMap) else T
    dAB = A.delta.kron(B.delta)
    cols = []
    for c in dAB.cols:
        y, _ = apply_on_legs(c, (nA, nA, nB, nB), (1, 2), tm)
        cols.append(y)
    delta = LinearMap((nA, nB), (nA, nB, nA, nB), cols)
    delta = LinearMap(nA * nB, (nA * nB, nA * nB), delta.cols)
    return _tensor_hopf(A, B, delta, name or "%s (x)_T %s" % (A.name, B.name), antipode)


def twisted_coproduct_from_skew_copairing(W, A, B, name=None, antipode=True):
    """(A (x) B, D_W) with sigma_W(a (x) b) = W(b (x) a)W^-1.  Returns (FDHopf, sigma_W, report)."""
    nA, nB = A.dim, B.dim
    w = W.sparse() if isinstance(W, Tensor) else dict(W)
    r = Report("twisted coproduct from skew-copairing")
    r.extend(check_skew_copairing(w, A, B))
    BA = LegAlgebra([B.alg, A.alg])
    w_inv = BA.inverse(w)
    if w_inv is None:
        raise ConstructionError("W is not invertible")
    if BA.star is not None:
        r.add("unitary: W* = W^-1", BA.star(w) == w_inv)
    ad = BA.conj_by(w, w_inv)
    sigma = LinearMap((nA, nB), (nB, nA), (ad @ flip_map(nA, nB)).cols)
    T = TwistingMap(sigma, COTWISTING, "sigma_W")
    r.extend(check_twisting(T, A, B), "sigma_W: ")
    h = twisted_coproduct(A, B, T, name or "%s (x)_W %s" % (A.name, B.name), antipode)
    return h, T, r


# Drinfeld double ------------------------------------------------------------------

def double_twisting_map(p, Bop=None):
    """T_p(b (x) a) = (S_B(b(3)) |> a <| b(1)) (x) b(2), as B^op (x) A -> A (x) B^op."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    d2 = B.delta_n(2)
    cols = []
    for b in range(nB):
        for a in range(nA):
            out = {}
            for k, c in d2.cols[b].items():
                b1, rest = divmod(k, nB * nB)
                b2, b3 = divmod(rest, nB)
                x = p.a_right_b(p.b_on_a(B.S(_e(b3)), _e(a)), _e(b1))
                add_into(out, vkron(x, _e(b2), nB), c)
            cols.append(out)
    return TwistingMap(LinearMap((nB, nA), (nA, nB), cols), TWISTING, "T_%s" % p.name)


def twisted_product_hopf(A, B, T, name):
    """A (x) B with m_T, coproduct (a(1) (x) b(1)) (x) (a(2) (x) b(2)) and antipode (1 (x) S b)(S a (x) 1)."""
    nA, nB = A.dim, B.dim
    n = nA * nB
    tm = T.map

    def mul(i, j):
        a, b = divmod(i, nB)
        ap, bp = divmod(j, nB)
        out = {}
        for k, c in tm.cols[b * nA + ap].items():
            a2, b2 = divmod(k, nB)
            add_into(out, vkron(A.mul(_e(a), _e(a2)), B.mul(_e(b2), _e(bp)), nB), c)
        return out

    table = [[mul(i, j) for j in range(n)] for i in range(n)]
    labels = ["%s><%s" % (A.labels[a], B.labels[b]) for a in range(nA) for b in range(nB)]
    unit = vkron(A.unit, B.unit, nB)
    alg = FDAlgebra(labels, table, unit, None, name)

    def iA(x):
        return vkron(x, B.unit, nB)

    def iB(y):
        return vkron(A.unit, y, nB)

    if A.star is not None and B.star is not None:
        alg.star = _table_star(n, lambda k: alg.mul(iB(B.star(_e(k % nB))), iA(A.star(_e(k // nB)))))
    # delta: legs (a1, a2, b1, b2) -> (a1, b1, a2, b2)
    cols = []
    for k in range(n):
        a, b = divmod(k, nB)
        x = vkron(A.delta.cols[a], B.delta.cols[b], nB * nB)
        y, _ = apply_on_legs(x, (nA, nA, nB, nB), (1, 2), flip_map(nA, nB))
        cols.append(y)
    delta = LinearMap(n, (n, n), cols)
    counit = LinearMap(n, 1, A.counit.kron(B.counit).cols)
    S = LinearMap(n, n, [alg.mul(iB(B.S(_e(k % nB))), iA(A.S(_e(k // nB)))) for k in range(n)])
    return FDHopf(alg, delta, counit, S, name)


def drinfeld_double(p, name=None):
    """D(p) = A >< B^op, the twisted tensor product for T_p.  Returns (FDHopf, T_p, report)."""
    Bop = opposite_hopf(p.B)
    T = double_twisting_map(p)
    r = Report("Drinfeld double %s" % p.name)
    r.extend(check_twisting(T, p.A, Bop), "T_p: ")
    D = twisted_product_hopf(p.A, Bop, T, name or "D(%s)" % p.name)
    return D, T, r


def bicrossed_product(p, name=None):
    """D(A, B) = A >< B^co with (a >< b)(a' >< b') = a(b(1) |> a' <| S^-1(b(3))) >< b(2)b'."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    n = nA * nB
    d2 = B.delta_n(2)
    tcols = []
    for b in range(nB):
        for a in range(nA):
            out = {}
            for k, c in d2.cols[b].items():
                b1, rest = divmod(k, nB * nB)
                b2, b3 = divmod(rest, nB)
                x = p.a_right_b(p.b_on_a(_e(b1), _e(a)), B.Sinv(_e(b3)))
                add_into(out, vkron(x, _e(b2), nB), c)
            tcols.append(out)
    T = TwistingMap(LinearMap((nB, nA), (nA, nB), tcols), TWISTING, "bicrossed")
    Bco = coopposite_hopf(B)
    h = twisted_product_hopf(A, Bco, T, name or "D(%s,%s)" % (A.name, B.name))
    # coproduct (a(1) >< b(2)) (x) (a(2) >< b(1)) is exactly the one of A (x) B^co
    return h


def double_to_bicrossed(p):
    """id >< S_B : D(p) -> D(A, B)."""
    nA, nB = p.A.dim, p.B.dim
    return LinearMap(nA * nB, nA * nB, [vkron(_e(k // nB), p.B.S(_e(k % nB)), nB) for k in range(nA * nB)])


def check_double_bicrossed(p, D=None):
    D = D or drinfeld_double(p)[0]
    E = bicrossed_product(p)
    return check_hopf_morphism(double_to_bicrossed(p), D, E)


# Drinfeld codouble -----------------------------------------------------------------

def u_circ(p):
    """U° in A^op (x) B: the coordinates of U."""
    return p.U.sparse()


def codouble_sigma(p, Aop=None):
    """sigma = Sigma o Ad(U°) : A^op (x) B -> B (x) A^op."""
    Aop = Aop or opposite_hopf(p.A)
    nA, nB = p.A.dim, p.B.dim
    AB = LegAlgebra([Aop.alg, p.B.alg])
    u = u_circ(p)
    u_inv = AB.inverse(u)
    if u_inv is None:
        raise ConstructionError("U° is not invertible")
    sigma = flip_map(nA, nB) @ AB.conj_by(u, u_inv)
    return TwistingMap(LinearMap((nA, nB), (nB, nA), sigma.cols), COTWISTING, "sigma_U°")


def drinfeld_codouble(p, name=None, antipode=True):
    """T(p) = A^op (x) B with (id (x) sigma (x) id)(dA (x) dB).  Returns (FDHopf, sigma, report)."""
    Aop = opposite_hopf(p.A)
    sigma = codouble_sigma(p, Aop)
    r = Report("Drinfeld codouble %s" % p.name)
    r.extend(check_twisting(sigma, Aop, p.B), "sigma: ")
    h = twisted_coproduct(Aop, p.B, sigma, name or "T(%s)" % p.name, antipode)
    if antipode:
        r.add("antipode solved", any(h.antipode.cols))
    return h, sigma, r


# the double-codouble pairing ----------------------------------------------------------

class DoubleCodouble(namedtuple("DoubleCodouble", "pairing double codouble W VU report")):
    """pairing: P between D(p-hat) and T(p); W: solved multiplier; VU: V12 U13."""


def double_codouble_pairing(p, antipode=True):
    """P(b >< a, a' (x) b') = p(a', b) p(a, b') between D(p-hat) and T(p)."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    ph = flip_coop_pairing(p)
    D, _, rD = drinfeld_double(ph)
    Tc, _, rT = drinfeld_codouble(p, antipode=antipode)
    r = Report("double-codouble pairing %s" % p.name)
    r.extend(rD, "double: ")
    r.extend(rT, "codouble: ")
    rows = []
    for b in range(nB):
        for a in range(nA):
            row = {}
            for ap in range(nA):
                x = p.rows[ap].get(b)
                if x is None:
                    continue
                for bp, y in p.rows[a].items():
                    row[ap * nB + bp] = x * y
            rows.append(row)
    P = Pairing(D, Tc, rows, "P(%s)" % p.name)
    W = P.U.sparse()
    # V = (i_B (x) id)Sigma(U), U-bold = (i_A (x) id)U in D (x) A^op and D (x) B
    su = flip_map(nA, nB)(p.U).sparse()
    u = p.U.sparse()
    V, Ub = {}, {}
    for k, c in su.items():
        b, a = divmod(k, nA)
        add_into(V, vkron(vkron(_e(b), A.unit, nA), _e(a), nA), c)
    for k, c in u.items():
        a, b = divmod(k, nB)
        add_into(Ub, vkron(vkron(B.unit, _e(a), nA), _e(b), nB), c)
    nD = nA * nB
    shape = (nD, nA, nB)
    V12 = embed_vec(V, (nD, nA), (0, 1), shape, [B.unit])
    U13 = embed_vec(Ub, (nD, nB), (0, 2), shape, [A.unit])
    leg = LegAlgebra([D.alg, opposite_hopf(A).alg, B.alg])
    VU = leg.mul(V12, U13)
    r.add("W = V12 U13", W == VU)
    return DoubleCodouble(P, D, Tc, W, VU, r)


__all__ = [
    "CrossedProduct", "DoubleCodouble", "TwistingMap", "TWISTING", "COTWISTING", "ConstructionError",
    "bicrossed_product", "check_algebra_map", "check_double_bicrossed", "check_skew_copairing",
    "check_twisting", "coaction_right_action", "codouble_sigma", "crossed_product",
    "double_codouble_pairing", "double_to_bicrossed", "double_twisting_map", "drinfeld_codouble",
    "drinfeld_double", "flip_cotwisting", "flip_twisting", "heisenberg", "heisenberg_relations",
    "iota_A", "iota_B", "lu_anti_isos", "right_smash_product", "smash_product", "solve_antipode",
    "twisted_coproduct", "twisted_coproduct_from_skew_copairing", "twisted_product_hopf",
]
