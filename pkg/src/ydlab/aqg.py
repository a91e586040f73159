"""Finite-dimensional algebraic quantum groups.

An algebraic quantum group here is a Hopf *-algebra h with a positive,
faithful, left invariant functional phi.  Its dual has the Hopf algebra
coopposite(dual_hopf(h)); the multiplicative unitary U is the canonical
multiplier of the evaluation pairing between h and dual_hopf(h).

The unitary antipode R is taken to be S, which requires S^2 = id; every
group model satisfies this and the checks below report it.

Yetter-Drinfeld G-*-algebras (X, theta, theta-hat):

    left   theta: X -> X (x) O,  theta-hat: X -> X (x) O-hat
           (theta (x) id)theta-hat = (id (x) Sigma)(id (x) Ad(Sigma U))(theta-hat (x) id)theta
    right  theta: X -> O (x) X,  theta-hat: X -> O-hat (x) X
           (id (x) theta)theta-hat = (Sigma (x) id)(Ad(U) (x) id)(id (x) theta-hat)theta

The left form is the rr chirality and the right form the ll chirality over
p_G: O^op x O-hat, p_G(a, w) = w(a).
"""

from itertools import product

from ydlab.actions import LEFT, RIGHT, Coaction, check_coaction
from ydlab.bialgebra import LegAlgebra, coopposite_hopf, dual_hopf, opposite_hopf
from ydlab.constructions import heisenberg, iota_A, iota_B
from ydlab.multilinear import LinearMap, embed_vec, map_legs, permute_vec, vkron
from ydlab.pairing import Pairing, check_multiplier_identities, flip_pairing
from ydlab.report import Report
from ydlab.scalar import ONE, ZERO


class AQGError(ValueError):
    pass


def _e(i):
    return {i: ONE}


class Integral:
    """A nonzero invariant functional stored as a LinearMap dim -> 1."""

    def __init__(self, functional, side=LEFT):
        self.functional = functional
        self.side = side

    @property
    def values(self):
        return [col.get(0, ZERO) for col in self.functional.cols]

    def __call__(self, x):
        s = ZERO
        for k, c in x.items():
            v = self.functional.cols[k].get(0)
            if v is not None:
                s = s + c * v
        return s

    def __repr__(self):
        return "Integral(%s: %s)" % (self.side, " ".join(str(v) for v in self.values))


def invariance_system(h, side=LEFT):
    """phi -> ((id (x) phi)delta(a) - phi(a)1)_a for left, (phi (x) id) for right."""
    n = h.dim
    cols = []
    for k in range(n):
        col = {}
        for a in range(n):
            for kk, c in h.delta.cols[a].items():
                i, j = divmod(kk, n)
                out, slot = (i, j) if side == LEFT else (j, i)
                if slot == k:
                    key = a * n + out
                    col[key] = col.get(key, ZERO) + c
            if k == a:
                for j, u in h.unit.items():
                    key = a * n + j
                    col[key] = col.get(key, ZERO) - u
        cols.append({key: v for key, v in col.items() if v})
    return LinearMap(n, (n, n), cols)


def find_integral(h, side=LEFT):
    """The invariant functional normalized to 1 at its first nonzero basis value, or None."""
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be 'left' or 'right'")
    kern = invariance_system(h, side).kernel()
    if not kern:
        return None
    if len(kern) > 1:
        raise AQGError("invariant functionals form a %d-dimensional space" % len(kern))
    v = kern[0]
    lead = v[min(v)]
    phi = LinearMap(h.dim, 1, [({0: v[k] / lead} if k in v else {}) for k in range(h.dim)])
    return Integral(phi, side)


def integral_report(h, phi):
    r = Report("%s invariance on %s" % (phi.side, h.name))
    n = h.dim
    bad = ""
    for a in range(n):
        y, _ = map_legs(h.delta.cols[a], (n, n), {1 if phi.side == LEFT else 0: phi.functional})
        want = {k: phi(_e(a)) * u for k, u in h.unit.items() if phi(_e(a)) * u}
        if y != want:
            bad = "on %s" % h.labels[a]
            break
    r.add("%s invariant" % phi.side, not bad, bad)
    return r


def gram_matrix(h, phi):
    """G[i][j] = phi(e_i* e_j)."""
    n = h.dim
    stars = [h.star(_e(i)) for i in range(n)]
    return [[phi(h.mul(stars[i], _e(j))) for j in range(n)] for i in range(n)]


def hermitian_psd(M):
    """(positive semidefinite, rank) for a Hermitian matrix, by exact LDL* with diagonal pivoting."""
    n = len(M)
    M = [list(row) for row in M]
    active = list(range(n))
    rank = 0
    while active:
        for i in active:
            d = M[i][i]
            if d.im or d.re < 0:
                return False, rank
        piv = next((i for i in active if M[i][i].re > 0), None)
        if piv is None:
            if any(M[i][j] for i in active for j in active):
                return False, rank
            break
        d = M[piv][piv]
        active.remove(piv)
        for i in active:
            f = M[i][piv] / d
            if f:
                for j in active:
                    M[i][j] = M[i][j] - f * M[piv][j]
        rank += 1
    return True, rank


def check_aqg(h, phi):
    """Invariance, positivity, faithfulness and phi o S^2 = phi."""
    if h.star is None:
        raise AQGError("%s has no star structure" % h.name)
    r = Report("algebraic quantum group %s" % h.name)
    n = h.dim
    r.add("nonzero", any(phi.values))
    r.extend(integral_report(h, phi))
    G = gram_matrix(h, phi)
    herm = all(G[j][i] == G[i][j].conjugate() for i, j in product(range(n), repeat=2))
    r.add("Gram matrix Hermitian", herm)
    psd, rank = hermitian_psd(G) if herm else (False, 0)
    r.add("positive: phi(a* a) >= 0", psd)
    r.add("faithful: phi(a* a) = 0 only for a = 0", psd and rank == n, "rank %d of %d" % (rank, n))
    bad = ""
    for a in range(n):
        if phi(h.S(h.S(_e(a)))) != phi(_e(a)):
            bad = "on %s" % h.labels[a]
            break
    r.add("phi o S^2 = phi", not bad, bad)
    return r


def dual_aqg(h, phi=None):
    """(Hopf algebra of the dual, its left integral, report).

    The dual integral is compared with a -> eps(a) read through a -> phi(. a).
    """
    phi = phi or find_integral(h, LEFT)
    hd = coopposite_hopf(dual_hopf(h))
    r = Report("dual of %s" % h.name)
    phd = find_integral(hd, LEFT)
    r.add("dual integral exists", phd is not None)
    if phd is None:
        return hd, None, r
    n = h.dim
    # phi_a = sum_k phi(e_k a) e^k
    vals = []
    for a in range(n):
        phi_a = {k: phi(h.mul(_e(k), _e(a))) for k in range(n)}
        vals.append((phd({k: v for k, v in phi_a.items() if v}), h.eps(_e(a))))
    ratios = {x / y for x, y in vals if y} if all(bool(x) == bool(y) for x, y in vals) else set()
    r.add("dual integral: phi_a -> eps(a) up to scalar", len(ratios) == 1)
    right = find_integral(hd, RIGHT)
    same = right is not None and right.values == phd.values
    r.add("dual integral is two-sided", same)
    if hd.star is not None:
        r.extend(check_aqg(hd, phd), "dual: ")
    return hd, phd, r


def evaluation_pairing(h):
    """p(a, w) = w(a) between h and dual_hopf(h)."""
    n = h.dim
    return Pairing(h, dual_hopf(h), [[ONE if i == j else 0 for j in range(n)] for i in range(n)],
                   "ev(%s)" % h.name)


def quantum_group_pairing(h):
    """p_G(a, w) = w(a) between h^op and the dual's Hopf algebra."""
    n = h.dim
    return Pairing(opposite_hopf(h), coopposite_hopf(dual_hopf(h)),
                   [[ONE if i == j else 0 for j in range(n)] for i in range(n)], "p_G(%s)" % h.name)


def multiplicative_unitary_checks(h):
    """Conditions (1)-(3) on U, the last inside the Heisenberg algebra Ohat # O."""
    p = evaluation_pairing(h)
    O, Od = p.A, p.B
    Og = coopposite_hopf(Od)
    n = h.dim
    r = Report("multiplicative unitary of %s" % h.name)
    r.add("S^2 = id (so R = S)", h.antipode @ h.antipode == LinearMap.identity(n))
    U = p.U.sparse()
    L2 = LegAlgebra([O.alg, Od.alg])
    Ustar = L2.star(U)
    r.add("U unitary", L2.mul(U, Ustar) == L2.unit and L2.mul(Ustar, U) == L2.unit)

    # (1)
    L3 = LegAlgebra([O.alg, O.alg, Od.alg])
    lhs, _ = map_legs(U, (n, n), {0: O.delta})
    rhs = L3.mul(embed_vec(U, (n, n), (0, 2), L3.shape, [O.unit]),
                 embed_vec(U, (n, n), (1, 2), L3.shape, [O.unit]))
    r.add("(delta (x) id)U = U13 U23", lhs == rhs)
    L3 = LegAlgebra([O.alg, Od.alg, Od.alg])
    lhs, _ = map_legs(U, (n, n), {1: Og.delta})
    rhs = L3.mul(embed_vec(U, (n, n), (0, 2), L3.shape, [Od.unit]),
                 embed_vec(U, (n, n), (0, 1), L3.shape, [Od.unit]))
    r.add("(id (x) delta-hat)U = U13 U12", lhs == rhs)

    # (2)
    r.add("(R (x) id)U = U*", map_legs(U, (n, n), {0: O.antipode})[0] == Ustar)
    r.add("(id (x) R-hat)U = U*", map_legs(U, (n, n), {1: Og.antipode})[0] == Ustar)

    # (3) in O (x) H and Ohat (x) H with H = Ohat # O
    q = flip_pairing(p)
    H = heisenberg(q)
    nH = H.dim
    to_H_hat = LinearMap(n, nH, [iota_A(q, _e(w)) for w in range(n)])
    to_H = LinearMap(n, nH, [iota_B(q, _e(a)) for a in range(n)])
    LH = LegAlgebra([O.alg, H])
    Uh = map_legs(U, (n, n), {1: to_H_hat})[0]
    Uh_star = map_legs(Ustar, (n, n), {1: to_H_hat})[0]
    bad = ""
    for a in range(n):
        want = map_legs(O.delta.cols[a], (n, n), {1: to_H})[0]
        got = LH.mul(LH.mul(Uh_star, vkron(O.unit, to_H(_e(a)), nH)), Uh)
        if got != want:
            bad = "on %s" % O.labels[a]
            break
    r.add("delta(a) = U*(1 (x) a)U", not bad, bad)
    LH = LegAlgebra([Od.alg, H])
    SU = permute_vec(U, (n, n), (1, 0))[0]
    SUs = permute_vec(Ustar, (n, n), (1, 0))[0]
    SUh = map_legs(SU, (n, n), {1: to_H})[0]
    SUh_star = map_legs(SUs, (n, n), {1: to_H})[0]
    bad = ""
    for w in range(n):
        want = map_legs(Og.delta.cols[w], (n, n), {1: to_H_hat})[0]
        got = LH.mul(LH.mul(SUh, vkron(Od.unit, to_H_hat(_e(w)), nH)), SUh_star)
        if got != want:
            bad = "on %s" % Od.labels[w]
            break
    r.add("delta-hat(w) = Sigma(U)(1 (x) w)Sigma(U*)", not bad, bad)
    r.extend(check_multiplier_identities(p, p.U), "canonical multiplier: ")
    return r


def involution_grading(m, sigma):
    """Right coaction of k[Z2] on K(m points): f -> f_+ (x) l_e + f_- (x) l_g, f_(+-) = (f +- f o sigma)/2."""
    if sorted(sigma) != list(range(m)) or any(sigma[sigma[s]] != s for s in range(m)):
        raise ValueError("sigma must be an involution of 0..%d" % (m - 1))
    half = ONE / 2
    cols = []
    for s in range(m):
        t = sigma[s]
        col = {}
        for x, c in ((s, half), (t, half)):
            col[x * 2] = col.get(x * 2, ZERO) + c
        for x, c in ((s, half), (t, -half)):
            col[x * 2 + 1] = col.get(x * 2 + 1, ZERO) + c
        cols.append({k: v for k, v in col.items() if v})
    return LinearMap(m, (m, 2), cols)


def _quantum_sides(X, theta, theta_hat, h, side):
    n, nX = h.dim, X.dim
    U = evaluation_pairing(h).U.sparse()
    Od = dual_hopf(h)
    if side == LEFT:
        lhs = [map_legs(c, (nX, n), {0: theta})[0] for c in theta_hat.cols]
        mid = [map_legs(c, (nX, n), {0: theta_hat})[0] for c in theta.cols]
        L2 = LegAlgebra([Od.alg, h.alg])
        w = permute_vec(U, (n, n), (1, 0))[0]
        sh = (nX, n, n)
        L3 = LegAlgebra([X, Od.alg, h.alg])
        legs = (1, 2)
        perm = (0, 2, 1)
    else:
        lhs = [map_legs(c, (n, nX), {1: theta})[0] for c in theta_hat.cols]
        mid = [map_legs(c, (n, nX), {1: theta_hat})[0] for c in theta.cols]
        L2 = LegAlgebra([h.alg, Od.alg])
        w = U
        sh = (n, n, nX)
        L3 = LegAlgebra([h.alg, Od.alg, X])
        legs = (0, 1)
        perm = (1, 0, 2)
    w_inv = L2.inverse(w)
    if w_inv is None:
        raise AQGError("multiplicative unitary is not invertible")
    W = embed_vec(w, (n, n), legs, sh, [X.unit])
    Wi = embed_vec(w_inv, (n, n), legs, sh, [X.unit])
    rhs = [permute_vec(L3.mul(L3.mul(W, c), Wi), sh, perm)[0] for c in mid]
    return lhs, rhs


def yd_quantum_check(X, theta, theta_hat, h, side=LEFT):
    """Both coactions, the YD G-*-algebra law, and the same verdicts through p_G.

    theta and theta-hat are LinearMaps: right coactions (side 'left') or left
    coactions (side 'right') of h and of the dual's Hopf algebra.
    """
    from ydlab.yd import YDPair, check_braided_commutative, check_yd_only_coaction
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be 'left' or 'right'")
    Og = coopposite_hopf(dual_hopf(h))
    cside = RIGHT if side == LEFT else LEFT
    r = Report("%s Yetter-Drinfeld G-*-algebra over %s on %s" % (side, h.name, X.name))
    ok_t = r.extend(check_coaction(Coaction(h, X, theta, cside, "theta")), "theta: ")
    ok_h = r.extend(check_coaction(Coaction(Og, X, theta_hat, cside, "theta-hat")), "theta-hat: ")
    lhs, rhs = _quantum_sides(X, theta, theta_hat, h, side)
    bad = next(("on %s" % X.labels[j] for j, (a, b) in enumerate(zip(lhs, rhs)) if a != b), "")
    direct = not bad and ok_t and ok_h
    r.add("YD G-*-algebra law", not bad, bad)
    chir = "rr" if side == LEFT else "ll"
    yd = YDPair(X, theta, theta_hat, chir, quantum_group_pairing(h), "%s YD G-*-algebra" % side)
    via = check_yd_only_coaction(yd)
    r.extend(via, "via %s: " % chir)
    r.add("routes agree", direct == via.ok, "direct %s, %s %s" % (direct, chir, via.ok))
    r.data["yd"] = (direct, via.ok)
    if via.ok:
        bc = check_braided_commutative(yd)
        r.data["bc"] = bc.data["verdict"]
        r.data["bc_report"] = bc
    r.data["pair"] = yd
    return r


__all__ = [
    "AQGError", "Integral", "invariance_system", "find_integral", "integral_report", "gram_matrix",
    "hermitian_psd", "check_aqg", "dual_aqg", "evaluation_pairing", "quantum_group_pairing",
    "multiplicative_unitary_checks", "involution_grading", "yd_quantum_check",
]
