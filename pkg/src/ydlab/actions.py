"""Actions and coactions of Hopf algebras on algebras.

An Action stores the map on basis pairs; a left action is H (x) X -> X and a
right action X (x) H -> X, but act(h, x) always takes the Hopf element first.
A Coaction is a LinearMap X -> H (x) X (left) or X -> X (x) H (right).
"""

from itertools import product

from ydlab.bialgebra import LegAlgebra
from ydlab.multilinear import LinearMap, add_into, map_legs, vkron, vscale
from ydlab.report import Report
from ydlab.scalar import ONE

LEFT, RIGHT = "left", "right"


def _check_side(side):
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be 'left' or 'right', got %r" % (side,))


class Action:
    def __init__(self, H, X, lmap, side=LEFT, name=""):
        _check_side(side)
        nH, nX = H.dim, X.dim
        dom = (nH, nX) if side == LEFT else (nX, nH)
        if lmap.n_in != nH * nX or lmap.n_out != nX:
            raise ValueError("action map must go %r -> %d" % (dom, nX))
        self.H = H
        self.X = X
        self.map = LinearMap(dom, nX, lmap.cols)
        self.side = side
        self.name = name

    @classmethod
    def from_function(cls, H, X, f, side=LEFT, name=""):
        """f(h, x) on basis indices returns the sparse image of h acting on x."""
        nH, nX = H.dim, X.dim
        if side == LEFT:
            cols = [f(h, x) for h in range(nH) for x in range(nX)]
        else:
            cols = [f(h, x) for x in range(nX) for h in range(nH)]
        return cls(H, X, LinearMap(nH * nX, nX, cols), side, name)

    def act(self, h, x):
        """h |> x (left) or x <| h (right) for sparse h, x."""
        nH, nX = self.H.dim, self.X.dim
        cols = self.map.cols
        out = {}
        for i, a in h.items():
            for j, b in x.items():
                k = i * nX + j if self.side == LEFT else j * nH + i
                add_into(out, cols[k], a * b)
        return out

    def __repr__(self):
        return "Action(%s %s on %s)" % (self.side, self.H.name, self.X.name)


class Coaction:
    def __init__(self, H, X, lmap, side=LEFT, name=""):
        _check_side(side)
        nH, nX = H.dim, X.dim
        cod = (nH, nX) if side == LEFT else (nX, nH)
        if lmap.n_in != nX or lmap.n_out != nH * nX:
            raise ValueError("coaction map must go %d -> %r" % (nX, cod))
        self.H = H
        self.X = X
        self.map = LinearMap(nX, cod, lmap.cols)
        self.side = side
        self.name = name

    def __call__(self, x):
        return self.map(x)

    def target(self):
        """The algebra H (x) X or X (x) H receiving the coaction."""
        if self.side == LEFT:
            return LegAlgebra([self.H.alg, self.X])
        return LegAlgebra([self.X, self.H.alg])

    def __repr__(self):
        return "Coaction(%s %s on %s)" % (self.side, self.H.name, self.X.name)


def trivial_coaction(H, X, side=LEFT):
    nH, nX = H.dim, X.dim
    if side == LEFT:
        cols = [vkron(H.unit, {x: ONE}, nX) for x in range(nX)]
    else:
        cols = [vkron({x: ONE}, H.unit, nH) for x in range(nX)]
    return Coaction(H, X, LinearMap(nX, nH * nX, cols), side, "trivial")


def trivial_action(H, X, side=LEFT):
    return Action.from_function(H, X, lambda h, x: vscale(H.eps({h: ONE}), {x: ONE}), side, "trivial")


def check_action(a):
    H, X = a.H, a.X
    nH, nX = H.dim, X.dim
    eh = [{i: ONE} for i in range(nH)]
    ex = [{j: ONE} for j in range(nX)]
    r = Report("%s action of %s on %s" % (a.side, H.name, X.name))
    left = a.side == LEFT

    bad = ""
    for j in range(nX):
        if a.act(H.unit, ex[j]) != ex[j]:
            bad = "1 on %s" % X.labels[j]
            break
    r.add("unital: 1 acts trivially", not bad, bad)

    bad = ""
    for h, k, j in product(range(nH), range(nH), range(nX)):
        hk = H.mul(eh[h], eh[k])
        if left:
            ok = a.act(hk, ex[j]) == a.act(eh[h], a.act(eh[k], ex[j]))
        else:
            ok = a.act(hk, ex[j]) == a.act(eh[k], a.act(eh[h], ex[j]))
        if not ok:
            bad = "h=%s k=%s x=%s" % (H.labels[h], H.labels[k], X.labels[j])
            break
    r.add("action law", not bad, bad)

    bad = ""
    for h, i, j in product(range(nH), range(nX), range(nX)):
        lhs = a.act(eh[h], X.mul(ex[i], ex[j]))
        rhs = {}
        for kk, c in H.delta.cols[h].items():
            h1, h2 = divmod(kk, nH)
            add_into(rhs, X.mul(a.act({h1: ONE}, ex[i]), a.act({h2: ONE}, ex[j])), c)
        if lhs != rhs:
            bad = "h=%s on %s %s" % (H.labels[h], X.labels[i], X.labels[j])
            break
    r.add("module algebra", not bad, bad)

    bad = ""
    for h in range(nH):
        if a.act(eh[h], X.unit) != vscale(H.eps(eh[h]), X.unit):
            bad = "h=%s on 1" % H.labels[h]
            break
    r.add("acts on 1 by the counit", not bad, bad)

    if H.star is not None and X.star is not None:
        bad = ""
        for h, j in product(range(nH), range(nX)):
            lhs = X.star(a.act(eh[h], ex[j]))
            rhs = a.act(H.star(H.S(eh[h])), X.star(ex[j]))
            if lhs != rhs:
                bad = "h=%s x=%s" % (H.labels[h], X.labels[j])
                break
        r.add("star: (h . x)* = S(h)* . x*", not bad, bad)
    return r


def check_coaction(c):
    H, X = c.H, c.X
    nH, nX = H.dim, X.dim
    ex = [{j: ONE} for j in range(nX)]
    G = c.map
    T = c.target()
    left = c.side == LEFT
    r = Report("%s coaction of %s on %s" % (c.side, H.name, X.name))

    one = vkron(H.unit, X.unit, nX) if left else vkron(X.unit, H.unit, nH)
    r.add("unital: Gamma(1) = 1 (x) 1", G(X.unit) == one)

    bad = ""
    for i, j in product(range(nX), repeat=2):
        if G(X.mul(ex[i], ex[j])) != T.mul(G.cols[i], G.cols[j]):
            bad = "Gamma(%s %s)" % (X.labels[i], X.labels[j])
            break
    r.add("homomorphism", not bad, bad)

    bad = ""
    for j in range(nX):
        if left:
            lhs, _ = map_legs(G.cols[j], (nH, nX), {0: H.delta})
            rhs, _ = map_legs(G.cols[j], (nH, nX), {1: G})
        else:
            lhs, _ = map_legs(G.cols[j], (nX, nH), {1: H.delta})
            rhs, _ = map_legs(G.cols[j], (nX, nH), {0: G})
        if lhs != rhs:
            bad = "on %s" % X.labels[j]
            break
    r.add("coassociative", not bad, bad)

    bad = ""
    for j in range(nX):
        leg = 0 if left else 1
        shape = (nH, nX) if left else (nX, nH)
        y, _ = map_legs(G.cols[j], shape, {leg: H.counit})
        if y != ex[j]:
            bad = "on %s" % X.labels[j]
            break
    r.add("counit: (eps (x) id)Gamma = id", not bad, bad)

    # (H (x) 1)Gamma(X) spans H (x) X
    hx = []
    for h in range(nH):
        e = vkron({h: ONE}, X.unit, nX) if left else vkron(X.unit, {h: ONE}, nH)
        for j in range(nX):
            hx.append(T.mul(e, G.cols[j]) if left else T.mul(G.cols[j], e))
    rank = LinearMap(nH * nX, nH * nX, hx).rank()
    r.add("density: (H (x) 1)Gamma(X) = H (x) X", rank == nH * nX, "rank %d" % rank)

    if H.star is not None and X.star is not None:
        bad = ""
        for j in range(nX):
            if G(X.star(ex[j])) != T.star(G.cols[j]):
                bad = "on %s" % X.labels[j]
                break
        r.add("star: Gamma(x*) = Gamma(x)*", not bad, bad)
    return r


__all__ = ["Action", "Coaction", "LEFT", "RIGHT", "check_action", "check_coaction",
           "trivial_action", "trivial_coaction"]
