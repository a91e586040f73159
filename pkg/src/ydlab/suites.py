"""Named verification suites over a group model.

A Model is a finite group, an optional action on a finite set and optional
antipode overrides for K(G) or k[G].  Each suite returns an ordered list of
Reports; skipped sections are Reports with no entries and a reason.
"""

from ydlab.aqg import (
    check_aqg,
    dual_aqg,
    find_integral,
    multiplicative_unitary_checks,
    yd_quantum_check,
)
from ydlab.bialgebra import (
    FDHopf,
    check_galois_maps,
    check_hopf_axioms,
    coopposite_hopf,
    dual_hopf,
    opposite_hopf,
    same_structure,
)
from ydlab.constructions import (
    check_double_bicrossed,
    double_codouble_pairing,
    drinfeld_codouble,
    drinfeld_double,
    heisenberg_relations,
    lu_anti_isos,
)
from ydlab.groups import expected_multiplier, function_hopf, group_hopf, regular_action, trivial_action
from ydlab.models import (
    function_algebra,
    group_algebra,
    heisenberg_over_double,
    transformation_yd,
    verify_crossed_isos,
)
from ydlab.pairing import (
    Pairing,
    adjoint_identities,
    check_multiplier_identities,
    check_pairing_axioms,
    check_regular_actions,
    derived_pairings,
)
from ydlab.report import Report
from ydlab.scalar import ONE
from ydlab.yd import (
    appendix_equivalence_square,
    bc_verdict,
    check_braided_commutative,
    check_conversion,
    check_dualization,
    check_yd_only_coaction,
    codouble_theorem,
    dualize_yd,
    rl_from_ll,
    square_corners,
    trivial_yd,
)

SUITES = ("hopf", "pairing", "constructions", "yd", "heisenberg-double", "aqg")
ALL = "all"
HEISENBERG_DOUBLE_LIMIT = 3


class Model:
    """A group with an optional action and optional antipode overrides."""

    def __init__(self, name, group, action=None, antipode=None):
        self.name = name
        self.group = group
        self.action = action
        self.antipode = dict(antipode or {})

    def _with_antipode(self, h, key):
        S = self.antipode.get(key)
        if S is None:
            return h
        return FDHopf(h.alg, h.delta, h.counit, S, h.name)

    def function_hopf(self):
        return self._with_antipode(function_hopf(self.group), "function")

    def group_hopf(self):
        return self._with_antipode(group_hopf(self.group), "group")

    def pairing(self):
        G = self.group
        return Pairing(self.function_hopf(), self.group_hopf(),
                       [[ONE if i == j else 0 for j in range(G.n)] for i in range(G.n)], "p_%s" % G.name)

    def yd_action(self):
        """The model's action, or G acting on itself by translation."""
        return self.action or regular_action(self.group)


def _skipped(title, reason):
    r = Report(title)
    r.data["skipped"] = reason
    return r


def hopf_suite(model):
    K, L = model.function_hopf(), model.group_hopf()
    out = []
    for h in (K, L, dual_hopf(K), dual_hopf(L), opposite_hopf(K), opposite_hopf(L),
              coopposite_hopf(K), coopposite_hopf(L)):
        out.append(check_hopf_axioms(h))
        out.append(check_galois_maps(h))
    r = Report("duals of the group models")
    r.add("dual(K(G)) has the structure constants of k[G]", same_structure(dual_hopf(K), L))
    r.add("dual(k[G]) has the structure constants of K(G)", same_structure(dual_hopf(L), K))
    out.append(r)
    return out


def pairing_suite(model):
    p = model.pairing()
    out = [check_pairing_axioms(p), check_regular_actions(p)]
    r = Report("canonical multiplier %s" % p.name)
    r.add("U = sum_g d_g (x) l_g", p.U == expected_multiplier(model.group))
    out.append(r)
    out.append(check_multiplier_identities(p))
    out.append(adjoint_identities(p))
    out.append(derived_pairings(p)[1])
    out.append(heisenberg_relations(p))
    out.append(lu_anti_isos(p)[2])
    return out


def constructions_suite(model):
    p = model.pairing()
    D, _, rD = drinfeld_double(p)
    Tc, _, rT = drinfeld_codouble(p)
    out = [rD, check_hopf_axioms(D), check_double_bicrossed(p, D), rT, check_hopf_axioms(Tc)]
    dc = double_codouble_pairing(p)
    out.append(dc.report)
    out.append(check_pairing_axioms(dc.pairing))
    out.append(verify_crossed_isos(model.yd_action()))
    return out


def yd_suite(model):
    act = model.yd_action()
    yd = transformation_yd(act, model.pairing())
    out = [check_yd_only_coaction(yd), check_braided_commutative(yd), check_conversion(yd),
           codouble_theorem(yd), check_dualization(yd), appendix_equivalence_square(rl_from_ll(yd))]
    p = model.pairing()
    r = Report("trivial YD data")
    t1 = trivial_yd(p, function_algebra(act.m))
    r.extend(check_yd_only_coaction(t1), "K(S): ")
    r.add("K(S): braided commutative", bc_verdict(t1))
    t2 = trivial_yd(p, group_algebra(model.group))
    r.extend(check_yd_only_coaction(t2), "k[G]: ")
    abelian = model.group.is_abelian()
    r.add("k[G]: braided commutative iff G abelian", bc_verdict(t2) == abelian)
    out.append(r)
    return out


def heisenberg_double_suite(model, limit=HEISENBERG_DOUBLE_LIMIT):
    n = model.group.n
    if n > limit:
        return [_skipped("Heisenberg algebra over the double %s" % model.group.name,
                         "order %d exceeds the limit %d (raise with --max-order)" % (n, limit))]
    return [heisenberg_over_double(model.pairing()).report]


def aqg_suite(model):
    out = []
    G = model.group
    for h, want in ((model.function_hopf(), [ONE] * G.n),
                    (model.group_hopf(), [ONE] + [0] * (G.n - 1))):
        r = Report("integral of %s" % h.name)
        phi = find_integral(h)
        r.add("left integral exists", phi is not None)
        if phi is None:
            out.append(r)
            continue
        r.add("integral has the expected values", phi.values == want, " ".join(map(str, phi.values)))
        right = find_integral(h, "right")
        r.add("left and right integrals agree", right is not None and right.values == phi.values)
        out.append(r)
        out.append(check_aqg(h, phi))
        out.append(dual_aqg(h, phi)[2])
        out.append(multiplicative_unitary_checks(h))
    act = model.yd_action()
    K = model.function_hopf()
    yd = transformation_yd(act, model.pairing())
    rr = square_corners(rl_from_ll(dualize_yd(yd)))["rr"]
    for side, data in (("left", rr), ("right", yd)):
        q = yd_quantum_check(data.X, data.alpha.map, data.beta.map, K, side)
        q.add("agrees with the coaction-form verdict", q.data["yd"][0] == check_yd_only_coaction(yd).ok)
        out.append(q)
    triv = trivial_action(G, 2)
    t = transformation_yd(triv, model.pairing())
    q = yd_quantum_check(t.X, t.alpha.map, t.beta.map, K, "right")
    q.add("trivial pair on a commutative carrier is braided commutative", q.data.get("bc") is True)
    out.append(q)
    return out


RUNNERS = {
    "hopf": hopf_suite,
    "pairing": pairing_suite,
    "constructions": constructions_suite,
    "yd": yd_suite,
    "heisenberg-double": heisenberg_double_suite,
    "aqg": aqg_suite,
}


def run(suite, model, hd_limit=HEISENBERG_DOUBLE_LIMIT):
    """[(suite name, [Report, ...])] in a fixed order."""
    names = SUITES if suite == ALL else (suite,)
    out = []
    for name in names:
        if name not in RUNNERS:
            raise KeyError("unknown suite %r" % name)
        if name == "heisenberg-double":
            out.append((name, heisenberg_double_suite(model, hd_limit)))
        else:
            out.append((name, RUNNERS[name](model)))
    return out


__all__ = ["ALL", "HEISENBERG_DOUBLE_LIMIT", "Model", "RUNNERS", "SUITES", "aqg_suite",
           "constructions_suite", "heisenberg_double_suite", "hopf_suite", "pairing_suite", "run",
           "yd_suite"]
