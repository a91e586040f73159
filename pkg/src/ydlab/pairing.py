"""Pairings of Hopf *-algebras, regular actions and the canonical multiplier.

Regular actions (all four are module-algebra actions):

    a |> b = b(1) p(a, b(2))        A (x) B -> B
    b <| a = p(a, b(1)) b(2)        B (x) A -> B
    b |> a = a(1) p(a(2), b)        B (x) A -> A
    a <| b = p(a(1), b) a(2)        A (x) B -> A

The canonical multiplier U in A (x) B is the unique solution of
p2(U, b (x) a) = p(a, b) with p2(a (x) b, b' (x) a') = p(a, b') p(a', b).
"""

from collections import namedtuple
from itertools import product

from ydlab.bialgebra import (
    LegAlgebra,
    coopposite_hopf,
    flip_map,
    opposite_hopf,
)
from ydlab.multilinear import (
    LinearMap,
    Tensor,
    add_into,
    embed_vec,
    map_legs,
    solve_exact,
)
from ydlab.report import Report
from ydlab.scalar import ONE, ZERO, coerce


class PairingError(ValueError):
    pass


class MultiplierError(ArithmeticError):
    """The defining system of the canonical multiplier has no unique solution."""

    def __init__(self, outcome):
        super().__init__("canonical multiplier system: %r" % (outcome,))
        self.outcome = outcome


RegularActions = namedtuple("RegularActions", "a_on_b b_right_a b_on_a a_right_b")


class Pairing:
    """A bilinear form P[i][j] = p(e_i, f_j) between Hopf algebras A and B."""

    def __init__(self, A, B, P, name=""):
        if isinstance(P, Tensor):
            if P.shape != (A.dim, B.dim):
                raise PairingError("pairing matrix has shape %r, expected %r" % (P.shape, (A.dim, B.dim)))
            rows = [dict() for _ in range(A.dim)]
            for k, v in P.sparse().items():
                i, j = divmod(k, B.dim)
                rows[i][j] = v
        else:
            rows = [{j: coerce(v) for j, v in enumerate(r) if coerce(v)} for r in P] \
                if P and isinstance(P[0], (list, tuple)) else [dict(r) for r in P]
        if A.dim != B.dim:
            raise PairingError("non-degenerate pairings need dim A = dim B (got %d and %d)" % (A.dim, B.dim))
        if len(rows) != A.dim:
            raise PairingError("pairing matrix needs %d rows" % A.dim)
        self.A = A
        self.B = B
        self.rows = rows
        self.name = name or "p(%s, %s)" % (A.name, B.name)
        self._U = None
        self._U_inv = None
        self._actions = None

    @property
    def P(self):
        n = self.B.dim
        return Tensor.from_sparse((self.A.dim, n), {i * n + j: v for i, r in enumerate(self.rows)
                                                     for j, v in r.items()})

    def __call__(self, a, b):
        s = ZERO
        for i, x in a.items():
            r = self.rows[i]
            for j, y in b.items():
                v = r.get(j)
                if v is not None:
                    s = s + x * y * v
        return s

    def left_functional(self, a):
        """_a p = p(a, .) as {j: value}."""
        out = {}
        for i, x in a.items():
            add_into(out, self.rows[i], x)
        return out

    def right_functional(self, b):
        """p_b = p(., b) as {i: value}."""
        out = {}
        for i, r in enumerate(self.rows):
            s = ZERO
            for j, y in b.items():
                v = r.get(j)
                if v is not None:
                    s = s + v * y
            if s:
                out[i] = s
        return out

    def pair_AB(self):
        return LegAlgebra([self.A.alg, self.B.alg])

    # regular actions

    def a_on_b(self, a, b):
        """a |> b = b(1) p(a, b(2))."""
        nB = self.B.dim
        out = {}
        for j, y in b.items():
            for k, c in self.B.delta.cols[j].items():
                b1, b2 = divmod(k, nB)
                v = self(a, {b2: ONE})
                if v:
                    add_into(out, {b1: ONE}, c * y * v)
        return out

    def b_right_a(self, b, a):
        """b <| a = p(a, b(1)) b(2)."""
        nB = self.B.dim
        out = {}
        for j, y in b.items():
            for k, c in self.B.delta.cols[j].items():
                b1, b2 = divmod(k, nB)
                v = self(a, {b1: ONE})
                if v:
                    add_into(out, {b2: ONE}, c * y * v)
        return out

    def b_on_a(self, b, a):
        """b |> a = a(1) p(a(2), b)."""
        nA = self.A.dim
        out = {}
        for i, x in a.items():
            for k, c in self.A.delta.cols[i].items():
                a1, a2 = divmod(k, nA)
                v = self({a2: ONE}, b)
                if v:
                    add_into(out, {a1: ONE}, c * x * v)
        return out

    def a_right_b(self, a, b):
        """a <| b = p(a(1), b) a(2)."""
        nA = self.A.dim
        out = {}
        for i, x in a.items():
            for k, c in self.A.delta.cols[i].items():
                a1, a2 = divmod(k, nA)
                v = self({a1: ONE}, b)
                if v:
                    add_into(out, {a2: ONE}, c * x * v)
        return out

    # canonical multiplier

    @property
    def U(self):
        if self._U is None:
            self._U = canonical_multiplier(self)
        return self._U

    @property
    def U_inv(self):
        if self._U_inv is None:
            inv = self.pair_AB().inverse(self.U.sparse())
            if inv is None:
                raise MultiplierError("U is not invertible")
            self._U_inv = Tensor.from_sparse((self.A.dim, self.B.dim), inv)
        return self._U_inv

    def __repr__(self):
        return "Pairing(%s)" % self.name


def regular_actions(p):
    """The four regular actions as LinearMaps (domains ordered as named)."""
    nA, nB = p.A.dim, p.B.dim
    a_on_b = LinearMap((nA, nB), nB, [p.a_on_b({a: ONE}, {b: ONE}) for a in range(nA) for b in range(nB)])
    b_right_a = LinearMap((nB, nA), nB, [p.b_right_a({b: ONE}, {a: ONE}) for b in range(nB) for a in range(nA)])
    b_on_a = LinearMap((nB, nA), nA, [p.b_on_a({b: ONE}, {a: ONE}) for b in range(nB) for a in range(nA)])
    a_right_b = LinearMap((nA, nB), nA, [p.a_right_b({a: ONE}, {b: ONE}) for a in range(nA) for b in range(nB)])
    return RegularActions(a_on_b, b_right_a, b_on_a, a_right_b)


def multiplier_system(p):
    """The linear map U -> (p2(U, f_l (x) e_k))_{k,l} whose solution is U."""
    nA, nB = p.A.dim, p.B.dim
    # p2(e_i (x) f_j, f_l (x) e_k) = P[i][l] P[k][j]; row index (k, l)
    cols = []
    for i in range(nA):
        for j in range(nB):
            col = {}
            for l, v in p.rows[i].items():
                for k in range(nA):
                    w = p.rows[k].get(j)
                    if w is not None:
                        col[k * nB + l] = v * w
            cols.append(col)
    return LinearMap((nA, nB), (nA, nB), cols)


def canonical_multiplier(p):
    """Solve p2(U, b (x) a) = p(a, b) exactly; raises MultiplierError if not unique."""
    M = multiplier_system(p)
    sol = solve_exact(M, p.P)
    if not isinstance(sol, Tensor):
        raise MultiplierError(sol)
    return sol


def check_pairing_axioms(p):
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    r = Report("pairing %s" % p.name)
    ea = [{i: ONE} for i in range(nA)]
    eb = [{j: ONE} for j in range(nB)]

    def pair2(x, y):
        # p(a (x) a', b (x) b') legwise
        s = ZERO
        for k, c in x.items():
            i, i2 = divmod(k, nA)
            for kk, d in y.items():
                j, j2 = divmod(kk, nB)
                v = p.rows[i].get(j)
                w = p.rows[i2].get(j2)
                if v is not None and w is not None:
                    s = s + c * d * v * w
        return s

    bad = ""
    for i, i2, j in product(range(nA), range(nA), range(nB)):
        if p(A.mul(ea[i], ea[i2]), eb[j]) != pair2({i * nA + i2: ONE}, B.delta.cols[j]):
            bad = "p(%s %s, %s)" % (A.labels[i], A.labels[i2], B.labels[j])
            break
    r.add("multiplicative in A", not bad, bad)
    bad = ""
    for i, j, j2 in product(range(nA), range(nB), range(nB)):
        if p(ea[i], B.mul(eb[j], eb[j2])) != pair2(A.delta.cols[i], {j * nB + j2: ONE}):
            bad = "p(%s, %s %s)" % (A.labels[i], B.labels[j], B.labels[j2])
            break
    r.add("multiplicative in B", not bad, bad)
    bad = ""
    for j in range(nB):
        if p(A.unit, eb[j]) != B.eps(eb[j]):
            bad = "p(1, %s) != eps" % B.labels[j]
            break
    for i in range(nA):
        if bad:
            break
        if p(ea[i], B.unit) != A.eps(ea[i]):
            bad = "p(%s, 1) != eps" % A.labels[i]
    r.add("unit/counit", not bad, bad)
    bad = ""
    for i, j in product(range(nA), range(nB)):
        if p(ea[i], B.S(eb[j])) != p(A.S(ea[i]), eb[j]):
            bad = "(%s, %s)" % (A.labels[i], B.labels[j])
            break
    r.add("antipode exchange", not bad, bad)
    if A.star is not None and B.star is not None:
        bad = ""
        for i, j in product(range(nA), range(nB)):
            if p(A.star(ea[i]), eb[j]) != p(ea[i], B.star(B.S(eb[j]))).conjugate():
                bad = "p(%s*, %s)" % (A.labels[i], B.labels[j])
                break
            if p(ea[i], B.star(eb[j])) != p(A.star(A.S(ea[i])), eb[j]).conjugate():
                bad = "p(%s, %s*)" % (A.labels[i], B.labels[j])
                break
        r.add("star compatibility", not bad, bad)
    r.add("non-degenerate", LinearMap(nB, nA, [p.right_functional(b) for b in eb]).rank() == nA)
    # the four regular actions are unital
    bad = ""
    for j in range(nB):
        if p.a_on_b(A.unit, eb[j]) != eb[j] or p.b_right_a(eb[j], A.unit) != eb[j]:
            bad = "unit of A on %s" % B.labels[j]
            break
    for i in range(nA):
        if bad:
            break
        if p.b_on_a(B.unit, ea[i]) != ea[i] or p.a_right_b(ea[i], B.unit) != ea[i]:
            bad = "unit of B on %s" % A.labels[i]
    r.add("regular actions unital", not bad, bad)
    return r


def check_regular_actions(p):
    """Action, module-algebra and pairing-compatibility laws of the four actions."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    ea = [{i: ONE} for i in range(nA)]
    eb = [{j: ONE} for j in range(nB)]
    r = Report("regular actions %s" % p.name)
    bad = ""
    for a, a2, b in product(range(nA), range(nA), range(nB)):
        lhs = p(A.mul(ea[a], ea[a2]), eb[b])
        if lhs != p(ea[a], p.a_on_b(ea[a2], eb[b])) or lhs != p(ea[a2], p.b_right_a(eb[b], ea[a])):
            bad = "p(%s %s, %s)" % (A.labels[a], A.labels[a2], B.labels[b])
            break
    r.add("p(aa', b) = p(a, a'|>b) = p(a', b<|a)", not bad, bad)
    bad = ""
    for a, b, b2 in product(range(nA), range(nB), range(nB)):
        lhs = p(ea[a], B.mul(eb[b], eb[b2]))
        if lhs != p(p.a_right_b(ea[a], eb[b]), eb[b2]) or lhs != p(p.b_on_a(eb[b2], ea[a]), eb[b]):
            bad = "p(%s, %s %s)" % (A.labels[a], B.labels[b], B.labels[b2])
            break
    r.add("p(a, bb') = p(a<|b, b') = p(b'|>a, b)", not bad, bad)
    bad = ""
    for b, b2, a in product(range(nB), range(nB), range(nA)):
        if p.b_on_a(B.mul(eb[b], eb[b2]), ea[a]) != p.b_on_a(eb[b], p.b_on_a(eb[b2], ea[a])):
            bad = "(%s %s) |> %s" % (B.labels[b], B.labels[b2], A.labels[a])
            break
    r.add("B |> A is a left action", not bad, bad)
    bad = ""
    for b, a, a2 in product(range(nB), range(nA), range(nA)):
        lhs = p.b_on_a(eb[b], A.mul(ea[a], ea[a2]))
        rhs = {}
        for k, c in B.delta.cols[b].items():
            b1, b2 = divmod(k, nB)
            add_into(rhs, A.mul(p.b_on_a({b1: ONE}, ea[a]), p.b_on_a({b2: ONE}, ea[a2])), c)
        if lhs != rhs:
            bad = "%s |> (%s %s)" % (B.labels[b], A.labels[a], A.labels[a2])
            break
    r.add("B |> A is a module-algebra action", not bad, bad)
    return r


# leg helpers -------------------------------------------------------------------

def check_multiplier_identities(p, U=None):
    """The coproduct, antipode, inverse and unitarity identities of U.

    U defaults to the solver's canonical multiplier; pass another tensor to
    test a candidate.
    """
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    U = p.U if U is None else U
    u = U.sparse()
    r = Report("multiplier %s" % p.name)
    uA, uB = A.unit, B.unit

    AAB = LegAlgebra([A.alg, A.alg, B.alg])
    lhs, _ = map_legs(u, (nA, nB), {0: A.delta})
    u13 = embed_vec(u, (nA, nB), (0, 2), (nA, nA, nB), [uA])
    u23 = embed_vec(u, (nA, nB), (1, 2), (nA, nA, nB), [uA])
    ok = lhs == AAB.mul(u13, u23)
    r.add("(delta_A (x) id)U = U13 U23", ok, "" if ok else "mismatch")

    ABB = LegAlgebra([A.alg, B.alg, B.alg])
    lhs, _ = map_legs(u, (nA, nB), {1: B.delta})
    u12 = embed_vec(u, (nA, nB), (0, 1), (nA, nB, nB), [uB])
    u13 = embed_vec(u, (nA, nB), (0, 2), (nA, nB, nB), [uB])
    ok = lhs == ABB.mul(u12, u13)
    r.add("(id (x) delta_B)U = U12 U13", ok, "" if ok else "mismatch")

    AB = LegAlgebra([A.alg, B.alg])
    u_inv = AB.inverse(u)
    r.add("U invertible", u_inv is not None)
    if u_inv is None:
        return r

    v1, _ = map_legs(u, (nA, nB), {0: A.antipode_inverse, 1: B.antipode})
    v2, _ = map_legs(u, (nA, nB), {0: A.antipode, 1: B.antipode_inverse})
    r.add("U = (S_A^-1 (x) S_B)U", v1 == u)
    r.add("U = (S_A (x) S_B^-1)U", v2 == u)
    w1, _ = map_legs(u, (nA, nB), {1: B.antipode})
    w2, _ = map_legs(u, (nA, nB), {0: A.antipode})
    r.add("U^-1 = (id (x) S_B)U", w1 == u_inv)
    r.add("U^-1 = (S_A (x) id)U", w2 == u_inv)
    # admissibility: (1 (x) b)U(a (x) 1) lies in A (x) B, automatic with units
    r.add("admissible (unital)", True)
    if AB.star is not None:
        r.add("unitary: U* = U^-1", AB.star(u) == u_inv)
    return r


def adjoint_identities(p, triples=None):
    """Both sides of the four adjoint-action identities on basis triples (a, a', b)."""
    A, B = p.A, p.B
    nA, nB = A.dim, B.dim
    AB = LegAlgebra([A.alg, B.alg])
    u = p.U.sparse()
    ui = p.U_inv.sparse()
    adU = AB.conj_by(u, ui)
    adUi = AB.conj_by(ui, u)
    idA = LinearMap.identity(nA)
    S_B = idA.kron(B.antipode)
    Si_B = idA.kron(B.antipode_inverse)
    T = Si_B @ adU @ S_B
    Ti = Si_B @ adUi @ S_B
    S, Si = A.S, A.Sinv
    ea = [{i: ONE} for i in range(nA)]
    eb = [{j: ONE} for j in range(nB)]
    mul = A.mul
    r = Report("adjoint identities %s" % p.name)

    def slice_(x, ap):
        # (id (x) _{a'}p)(x)
        f = p.left_functional(ap)
        out = {}
        for k, c in x.items():
            i, j = divmod(k, nB)
            v = f.get(j)
            if v is not None:
                add_into(out, {i: ONE}, c * v)
        return out

    def sweedler(ap, f):
        out = {}
        for k, c in A.delta.cols[ap].items():
            x, y = divmod(k, nA)
            add_into(out, f({x: ONE}, {y: ONE}), c)
        return out

    if triples is None:
        triples = product(range(nA), range(nA), range(nB))
    bad = {1: "", 2: "", 3: "", 4: ""}
    count = 0
    for a, ap, b in triples:
        count += 1
        x = {a * nB + b: ONE}
        av, bv = ea[a], eb[b]
        sides = {
            1: (slice_(adU(x), ea[ap]),
                sweedler(ap, lambda a1, a2: mul(mul(p.b_on_a(bv, a1), av), S(a2))),
                sweedler(ap, lambda a1, a2: mul(mul(a1, av), S(p.a_right_b(a2, bv))))),
            2: (slice_(adUi(x), ea[ap]),
                sweedler(ap, lambda a1, a2: mul(mul(S(a1), av), p.a_right_b(a2, bv))),
                sweedler(ap, lambda a1, a2: mul(mul(S(p.b_on_a(bv, a1)), av), a2))),
            3: (slice_(T(x), ea[ap]),
                sweedler(ap, lambda a1, a2: mul(mul(Si(p.a_right_b(a2, bv)), av), a1)),
                sweedler(ap, lambda a1, a2: mul(mul(Si(a2), av), p.b_on_a(bv, a1)))),
            4: (slice_(Ti(x), ea[ap]),
                sweedler(ap, lambda a1, a2: mul(mul(a2, av), Si(p.b_on_a(bv, a1)))),
                sweedler(ap, lambda a1, a2: mul(mul(p.a_right_b(a2, bv), av), Si(a1)))),
        }
        for k, (l, m1, m2) in sides.items():
            if not bad[k] and not (l == m1 == m2):
                bad[k] = "a=%s a'=%s b=%s" % (A.labels[a], A.labels[ap], B.labels[b])
    names = {1: "U(a (x) b)U^-1", 2: "U^-1(a (x) b)U", 3: "T_U(a (x) b)", 4: "T_U^-1(a (x) b)"}
    for k in (1, 2, 3, 4):
        r.add(names[k], not bad[k], bad[k])
    r.data["triples"] = count
    return r


# derived pairings ------------------------------------------------------------

def flip_pairing(p):
    """p-bar(b, a) = p(a, b) between B and A; multiplier Sigma(U)."""
    P = [[p.rows[i].get(j, ZERO) for i in range(p.A.dim)] for j in range(p.B.dim)]
    return Pairing(p.B, p.A, P, "flip(%s)" % p.name)


def flip_coop_pairing(p, B_co=None, A_op=None):
    """p-hat(b, a^op) = p(a, b) between (B, delta^co) and (A^op, delta^op)."""
    B_co = B_co or coopposite_hopf(p.B)
    A_op = A_op or opposite_hopf(p.A)
    P = [[p.rows[i].get(j, ZERO) for i in range(p.A.dim)] for j in range(p.B.dim)]
    return Pairing(B_co, A_op, P, "flipcoop(%s)" % p.name)


def flip_coop_op_pairing(p):
    """p-tilde(b^op, a^op) = p(a, b) between B^op and A^op, both with delta^{co,op}."""
    B2 = coopposite_hopf(opposite_hopf(p.B))
    A2 = coopposite_hopf(opposite_hopf(p.A))
    P = [[p.rows[i].get(j, ZERO) for i in range(p.A.dim)] for j in range(p.B.dim)]
    return Pairing(B2, A2, P, "flipcoopop(%s)" % p.name)


def derived_pairings(p):
    """(p-bar, p-hat, p-tilde) with their multipliers checked against Sigma(U).

    In the fixed bases the op maps are identities on coordinates, so all three
    expected multipliers have the coordinates of Sigma(U).
    """
    sigma_u = flip_map(p.A.dim, p.B.dim)(p.U)
    out = []
    r = Report("derived pairings %s" % p.name)
    for name, q in (("flip", flip_pairing(p)), ("flip co-op", flip_coop_pairing(p)),
                    ("flip co-op op", flip_coop_op_pairing(p))):
        r.extend(check_pairing_axioms(q), name + ": ")
        r.add(name + ": multiplier = Sigma(U) up to op", q.U.sparse() == sigma_u.sparse())
        out.append(q)
    return tuple(out), r


def trivial_pairing(h1, h2):
    return Pairing(h1, h2, [[ONE]], "trivial")
