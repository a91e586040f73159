"""Yetter-Drinfeld data built from groups and pairings.

transformation_yd turns a left action of G on S into an ll YDPair on K(S)
over the canonical pairing p_G between K(G) and k[G]:

    alpha(d_t) = sum_g d_g (x) d_(g^-1 . t)      (coaction of K(G), read in K(G)^op)
    beta(d_t)  = l_e (x) d_t                     (trivial coaction of k[G])

K(G) is commutative, so K(G)^op and K(G) share their structure constants.

heisenberg_over_double builds, for any pairing p, the coaction Gamma' of the
Drinfeld double D(p-hat-b) (the double of A^co x B^op) and the coaction Gamma
of the codouble T(p-bar) = B^op (x) A on H(p).  The Lu map a >< b -> a # b is
the identity on coordinates.
"""

from itertools import product

from ydlab.actions import LEFT, RIGHT, Coaction, check_coaction
from ydlab.bialgebra import (
    FDAlgebra,
    LegAlgebra,
    StarStructure,
    coopposite_hopf,
    flip_map,
    opposite_hopf,
)
from ydlab.constructions import (
    check_algebra_map,
    crossed_product,
    double_codouble_pairing,
    heisenberg,
    iota_A,
    iota_B,
    twisted_coproduct_from_skew_copairing,
)
from ydlab.groups import canonical_group_pairing, function_hopf, group_hopf
from ydlab.multilinear import LinearMap, add_into, embed_vec, map_legs, permute_vec, vkron
from ydlab.pairing import flip_pairing
from ydlab.report import Report
from ydlab.scalar import ONE
from ydlab.yd import (
    YDPair,
    check_braided_commutative,
    check_yd_only_coaction,
    coaction_from_multiplier,
    multiplier_inverse,
)


def _e(i):
    return {i: ONE}


# carriers ------------------------------------------------------------------------

def function_algebra(m, labels=None, name="K(S)"):
    """Functions on an m-point set in the delta basis."""
    labels = labels or ["d%d" % s for s in range(m)]
    prod = [[(_e(i) if i == j else {}) for j in range(m)] for i in range(m)]
    star = StarStructure([_e(i) for i in range(m)])
    return FDAlgebra(labels, prod, {i: ONE for i in range(m)}, star, name)


def group_algebra(G):
    """k[G] as a *-algebra."""
    return group_hopf(G).alg


# the transformation-group example ------------------------------------------------

def transformation_coactions(act):
    """(alpha, beta) as LinearMaps K(S) -> K(G) (x) K(S) and K(S) -> k[G] (x) K(S)."""
    G, m = act.group, act.m
    n = G.n
    al = []
    for t in range(m):
        al.append({g * m + act.act(G.inv[g], t): ONE for g in range(n)})
    be = [{t: ONE} for t in range(m)]  # l_e (x) d_t, l_e has index 0
    return LinearMap(m, (n, m), al), LinearMap(m, (n, m), be)


def transformation_yd(act, p=None):
    """The ll YDPair (K(S), alpha, beta) over p_G for a left action of G on S."""
    G = act.group
    p = p or canonical_group_pairing(G)
    X = function_algebra(act.m, name="K(%d points)" % act.m)
    al, be = transformation_coactions(act)
    return YDPair(X, al, be, "ll", p, "transformation data of %s" % act.name)


def transformation_report(act):
    """Both YD characterizations and every BC criterion on the transformation data."""
    yd = transformation_yd(act)
    r = Report("transformation data %s" % act.name)
    r.extend(check_yd_only_coaction(yd), "YD: ")
    r.extend(check_braided_commutative(yd), "BC: ")
    return r


# transformation groupoid algebras ---------------------------------------------------

def groupoid_algebras(act):
    """(K(G x S), k[G x S]) in the bases d_(g,s), l_(g,s) with index g*m + s.

    k[G x S] multiplies by l_(g,s) l_(h,t) = [s = h.t] l_(gh,t) with unit
    sum_s l_(e,s) and star l_(g,s)* = l_(g^-1, g.s).
    """
    G, m = act.group, act.m
    n = G.n
    N = n * m
    idx = lambda g, s: g * m + s
    labels_d = ["d_(%s,%d)" % (G.labels[g], s) for g in range(n) for s in range(m)]
    labels_l = ["l_(%s,%d)" % (G.labels[g], s) for g in range(n) for s in range(m)]
    K = FDAlgebra(labels_d, [[(_e(i) if i == j else {}) for j in range(N)] for i in range(N)],
                  {i: ONE for i in range(N)}, StarStructure([_e(i) for i in range(N)]), "K(G x S)")

    def prod(i, j):
        g, s = divmod(i, m)
        h, t = divmod(j, m)
        if s != act.act(h, t):
            return {}
        return _e(idx(G.mul(g, h), t))

    star = StarStructure([_e(idx(G.inv[g], act.act(g, s))) for g in range(n) for s in range(m)])
    L = FDAlgebra.from_function(labels_l, prod, {idx(0, s): ONE for s in range(m)}, star, "k[G x S]")
    return K, L


def verify_crossed_isos(act):
    """The crossed products of beta and alpha are K(G x S) and k[G x S].

    beta with the flipped pairing: (d_g (x) 1)beta(d_s) -> d_(g,s);
    alpha with p_G: (l_g (x) 1)alpha(d_s) -> l_(g,s).  Both are the identity
    on coordinates (index g*m + s).
    """
    G, m = act.group, act.m
    N = G.n * m
    p = canonical_group_pairing(G)
    K, L = groupoid_algebras(act)
    al, be = transformation_coactions(act)
    X = function_algebra(m)
    r = Report("crossed products %s" % act.name)
    r.add("dim K(G x S) = |G||S|", K.dim == N)
    r.add("dim k[G x S] = |G||S|", L.dim == N)
    bad = ""
    for i in range(N):
        if L.star(L.star(_e(i))) != _e(i):
            bad = L.labels[i]
            break
    r.add("k[G x S] star is involutive", not bad, bad)
    q = flip_pairing(p)
    cb = crossed_product(Coaction(q.A, X, be, LEFT, "beta"), q, "beta crossed product")
    r.extend(cb.report, "beta: ")
    if cb.algebra is not None:
        r.extend(check_algebra_map(LinearMap.identity(N), cb.algebra, K, title="to K(G x S)"), "beta iso: ")
    ca = crossed_product(Coaction(p.A, X, al, LEFT, "alpha"), p, "alpha crossed product")
    r.extend(ca.report, "alpha: ")
    if ca.algebra is not None:
        r.extend(check_algebra_map(LinearMap.identity(N), ca.algebra, L, title="to k[G x S]"), "alpha iso: ")
    return r


# the Heisenberg algebra over the Drinfeld double --------------------------------------

class HeisenbergDouble:
    """Gamma' (left D-coaction), alpha, beta, Gamma (right T-coaction) on H(p)."""

    def __init__(self, gamma_p, alpha, beta, gamma, dc, H, report):
        self.gamma_p = gamma_p
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.dc = dc
        self.H = H
        self.report = report


def _sweedler_gamma_p(p, D):
    """a # b -> a(2) >< b(1) (x) a(1) # b(2)."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    n = nA * nB
    cols = []
    for a in range(nA):
        for b in range(nB):
            out = {}
            for ka, ca in A.delta.cols[a].items():
                a1, a2 = divmod(ka, nA)
                for kb, cb in B.delta.cols[b].items():
                    b1, b2 = divmod(kb, nB)
                    add_into(out, _e((a2 * nB + b1) * n + a1 * nB + b2), ca * cb)
            cols.append(out)
    return LinearMap(n, (D.dim, n), cols)


def _closed_form_action(p, x_index_d, x_index_h):
    """(a' >< b') |> (a # b) = a'(3)(b'(1) |> a)S^-1(a'(2)) # (b'(2) b S(b'(3)) <| S^-1(a'(1)))."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    ap, bp = divmod(x_index_d, nB)
    a, b = divmod(x_index_h, nB)
    dA, dB = A.delta_n(2), B.delta_n(2)
    out = {}
    for ka, ca in dA.cols[ap].items():
        a1, rest = divmod(ka, nA * nA)
        a2, a3 = divmod(rest, nA)
        for kb, cb in dB.cols[bp].items():
            b1, rest2 = divmod(kb, nB * nB)
            b2, b3 = divmod(rest2, nB)
            left = A.alg.mul_many(_e(a3), p.b_on_a(_e(b1), _e(a)), A.Sinv(_e(a2)))
            if not left:
                continue
            right = p.b_right_a(B.alg.mul_many(_e(b2), _e(b), B.S(_e(b3))), A.Sinv(_e(a1)))
            if right:
                add_into(out, vkron(left, right, nB), ca * cb)
    return out


def heisenberg_over_double(p, majid=True):
    """Build Gamma', alpha, beta, Gamma on H(p) and verify every identity around them."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    nH = nA * nB
    pbar = flip_pairing(p)
    H = heisenberg(p)
    Bop = opposite_hopf(B)
    r = Report("Heisenberg algebra over the double %s" % p.name)

    dc = double_codouble_pairing(pbar)
    r.extend(dc.report, "P-bar: ")
    D, T, P = dc.double, dc.codouble, dc.pairing
    nD, nT = D.dim, T.dim

    # Gamma' two ways: conjugating delta_D by the Lu map, and the Sweedler formula
    gp_lu = LinearMap(nH, (nD, nH), D.delta.cols)
    gp_sw = _sweedler_gamma_p(p, D)
    r.add("Gamma' by Lu conjugation = Sweedler formula", gp_lu.cols == gp_sw.cols)
    gamma_p = Coaction(D, H, gp_lu, LEFT, "Gamma'")
    r.extend(check_coaction(gamma_p), "Gamma': ")

    # alpha and beta from V-bar = (i_A (x) id)U° and U-bar = (i_B (x) id)Sigma(U)
    u = p.U.sparse()
    V, Ub = {}, {}
    for k, c in u.items():
        a, b = divmod(k, nB)
        add_into(V, vkron(iota_A(p, _e(a)), _e(b), nB), c)
        add_into(Ub, vkron(iota_B(p, _e(b)), _e(a), nA), c)
    alpha = coaction_from_multiplier(V, Bop, H, RIGHT, "alpha")
    beta = coaction_from_multiplier(Ub, A, H, RIGHT, "beta")
    r.extend(check_coaction(alpha), "alpha: ")
    r.extend(check_coaction(beta), "beta: ")

    # induced actions against their closed formulas
    bad = ""
    for a, h in product(range(nA), range(nH)):
        lhs = {}
        for k, c in alpha.map.cols[h].items():
            x, b = divmod(k, nB)
            v = p.rows[a].get(b)
            if v is not None:
                add_into(lhs, _e(x), c * v)
        ap, bb = divmod(h, nB)
        rhs = {}
        for kk, c in A.delta_n(2).cols[a].items():
            a1, rest = divmod(kk, nA * nA)
            a2, a3 = divmod(rest, nA)
            left = A.alg.mul_many(_e(a3), _e(ap), A.Sinv(_e(a2)))
            right = p.b_right_a(_e(bb), A.Sinv(_e(a1)))
            if left and right:
                add_into(rhs, vkron(left, right, nB), c)
        if lhs != rhs:
            bad = "a=%s on %s" % (A.labels[a], H.labels[h])
            break
    r.add("alpha action: a(3) a' S^-1(a(2)) # (b <| S^-1(a(1)))", not bad, bad)
    bad = ""
    for b, h in product(range(nB), range(nH)):
        lhs = {}
        for k, c in beta.map.cols[h].items():
            x, a = divmod(k, nA)
            v = p.rows[a].get(b)
            if v is not None:
                add_into(lhs, _e(x), c * v)
        a0, bp = divmod(h, nB)
        rhs = {}
        for kk, c in B.delta_n(2).cols[b].items():
            b1, rest = divmod(kk, nB * nB)
            b2, b3 = divmod(rest, nB)
            left = p.b_on_a(_e(b1), _e(a0))
            right = B.alg.mul_many(_e(b2), _e(bp), B.S(_e(b3)))
            if left and right:
                add_into(rhs, vkron(left, right, nB), c)
        if lhs != rhs:
            bad = "b=%s on %s" % (B.labels[b], H.labels[h])
            break
    r.add("beta action: (b(1) |> a) # b(2) b' S(b(3))", not bad, bad)

    rr = YDPair(H, alpha, beta, "rr", pbar, "Heisenberg algebra, right coactions")
    r.extend(check_yd_only_coaction(rr), "rr over p-bar: ")

    # Gamma = (alpha (x) id)beta = Ad(V12 U13)(x (x) 1 (x) 1), with V12 U13 = (L (x) id)W-bar
    L3 = LegAlgebra([H, Bop.alg, A.alg])
    shape = (nH, nB, nA)
    V12 = embed_vec(V, (nH, nB), (0, 1), shape, [A.unit])
    U13 = embed_vec(Ub, (nH, nA), (0, 2), shape, [Bop.unit])
    VU = L3.mul(V12, U13)
    r.add("V12 U13 = (L (x) id)W-bar", VU == dc.W)
    Vi = multiplier_inverse(LegAlgebra([H, Bop.alg]), V)
    Ui = multiplier_inverse(LegAlgebra([H, A.alg]), Ub)
    VUi = L3.mul(embed_vec(Ui, (nH, nA), (0, 2), shape, [Bop.unit]),
                 embed_vec(Vi, (nH, nB), (0, 1), shape, [A.unit]))
    g_cols = []
    for h in range(nH):
        y, _ = map_legs(beta.map.cols[h], (nH, nA), {0: alpha.map})
        g_cols.append(y)
    ad_cols = [L3.mul(L3.mul(VU, vkron(_e(h), vkron(Bop.unit, A.unit, nA), nT)), VUi)
               for h in range(nH)]
    r.add("(alpha (x) id)beta = Ad(V12 U13)(x (x) 1)", g_cols == ad_cols)
    gamma = Coaction(T, H, LinearMap(nH, (nH, nT), g_cols), RIGHT, "Gamma")
    r.extend(check_coaction(gamma), "Gamma: ")

    # the lr YD law over P-bar
    lr = YDPair(H, gamma_p, gamma, "lr", P, "Heisenberg algebra over the double")
    r.extend(check_yd_only_coaction(lr), "lr over P-bar: ")

    # the closed-form action against the action dual to Gamma
    bad = ""
    for d, h in product(range(nD), range(nH)):
        dual = {}
        for k, c in gamma.map.cols[h].items():
            x, t = divmod(k, nT)
            v = P.rows[d].get(t)
            if v is not None:
                add_into(dual, _e(x), c * v)
        if dual != _closed_form_action(p, d, h):
            bad = "%s on %s" % (D.labels[d], H.labels[h])
            break
    r.add("induced D action = closed formula", not bad, bad)

    if majid:
        r.extend(majid_theta_report(gamma_p, gamma, dc), "Theta: ")
    return HeisenbergDouble(gamma_p, alpha, beta, gamma, dc, H, r)


def majid_theta_report(gamma_p, gamma, dc):
    """Theta = (Sigma Gamma' (x) id)Gamma is a coaction of the Majid codouble D^co (x)_W T."""
    D, T = dc.double, dc.codouble
    H = gamma.X
    nD, nT, nH = D.dim, T.dim, H.dim
    r = Report("Majid codouble coaction")
    Dco = coopposite_hopf(D)
    LTD = LegAlgebra([T.alg, Dco.alg])
    sw = flip_map(nD, nT)(dc.W)
    sw_inv = multiplier_inverse(LTD, sw, T, Dco)
    M, _, rm = twisted_coproduct_from_skew_copairing(sw_inv, Dco, T, "T_M", antipode=False)
    r.extend(rm, "codouble: ")
    sg = [permute_vec(c, (nD, nH), (1, 0))[0] for c in gamma_p.map.cols]
    sgm = LinearMap(nH, (nH, nD), sg)
    cols = []
    for h in range(nH):
        y, _ = map_legs(gamma.map.cols[h], (nH, nT), {0: sgm})
        cols.append(y)
    theta = Coaction(M, H, LinearMap(nH, (nH, nD * nT), cols), RIGHT, "Theta")
    r.extend(check_coaction(theta))
    return r


__all__ = [
    "HeisenbergDouble", "function_algebra", "group_algebra", "groupoid_algebras",
    "heisenberg_over_double", "majid_theta_report", "transformation_coactions",
    "transformation_report", "transformation_yd", "verify_crossed_isos",
]
