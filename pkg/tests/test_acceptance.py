"""Acceptance criteria 1-12, each an exact identity check with one summary line."""

import time

import pytest

from conftest import model, record
from ydlab.aqg import (
    check_aqg,
    find_integral,
    involution_grading,
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
)
from ydlab.constructions import double_codouble_pairing
from ydlab.groups import ActionError, FiniteGroup, GroupAction, GroupError, cyclic_group, expected_multiplier
from ydlab.models import (
    function_algebra,
    group_algebra,
    heisenberg_over_double,
    transformation_yd,
    verify_crossed_isos,
)
from ydlab.multilinear import LinearMap, Tensor
from ydlab.pairing import Pairing, adjoint_identities, canonical_multiplier, check_multiplier_identities, check_pairing_axioms
from ydlab.scalar import ONE
from ydlab.suites import Model
from ydlab.yd import (
    appendix_equivalence_square,
    check_braided_commutative,
    check_yd_only_coaction,
    check_yd_standard,
    codouble_theorem,
    convert_oc_to_standard,
    dualize_yd,
    rl_from_ll,
    square_corners,
    trivial_yd,
)

GROUPS = ["z2", "z3", "z4", "klein4", "s3"]
ACTIONS = ["z2-on-2points", "z3-on-z3", "s3-on-3points"]


class Criterion:
    """Collects failures, records one line and prints it."""

    def __init__(self, number, text):
        self.number = number
        self.text = text
        self.failures = []
        self.start = time.perf_counter()

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def finish(self):
        ok = not self.failures
        secs = time.perf_counter() - self.start
        line = "%s (%.1f s)" % (self.text, secs)
        if not ok:
            line += "; failed: " + "; ".join(self.failures[:3])
        record(self.number, ok, line)
        print("criterion %d: %s  %s" % (self.number, "PASS" if ok else "FAIL", line))
        assert ok, self.failures


def _failed_names(report):
    return ", ".join(c.name for c in report.failures())


def _yd(name):
    m = model(name)
    return transformation_yd(m.action, m.pairing())


def test_criterion_01_hopf_axioms():
    c = Criterion(1, "Hopf axioms and Galois maps on K(G), k[G], duals, op, co")
    for name in GROUPS:
        m = model(name)
        for base in (m.function_hopf(), m.group_hopf()):
            for h in (base, dual_hopf(base), opposite_hopf(base), coopposite_hopf(base)):
                for r in (check_hopf_axioms(h), check_galois_maps(h)):
                    c.check(r.ok, "%s %s: %s" % (name, h.name, _failed_names(r)))
    c.finish()


def test_criterion_02_canonical_multiplier():
    c = Criterion(2, "canonical multiplier = sum_g d_g (x) l_g, identities and unitarity")
    for name in GROUPS:
        m = model(name)
        p = m.pairing()
        U = canonical_multiplier(p)
        c.check(U == expected_multiplier(m.group), "%s: U entries" % name)
        r = check_multiplier_identities(p)
        c.check(r.ok, "%s: %s" % (name, _failed_names(r)))
        c.check(r.get("unitary: U* = U^-1") is not None, "%s: unitarity not checked" % name)
    c.finish()


def test_criterion_03_adjoint_identities_s3():
    c = Criterion(3, "four adjoint identities on all monomial triples of S3")
    r = adjoint_identities(model("s3").pairing())
    c.check(r.data["triples"] == 6 ** 3, "triples %d" % r.data["triples"])
    c.check(len(r.entries) == 4, "identity count")
    c.check(r.ok, _failed_names(r))
    c.finish()


def test_criterion_04_transformation_data():
    c = Criterion(4, "transformation data: YD, BC, and s-YD, s-BC after conversion")
    for name in ACTIONS:
        yd = _yd(name)
        r = check_yd_only_coaction(yd)
        c.check(r.ok, "%s YD: %s" % (name, _failed_names(r)))
        bc = check_braided_commutative(yd)
        c.check(bc.ok and bc.data["verdict"], "%s BC: %s" % (name, _failed_names(bc)))
        s = check_yd_standard(*convert_oc_to_standard(yd))
        c.check(s.ok, "%s s-YD: %s" % (name, _failed_names(s)))
        c.check(any(e.name.startswith("s-") and "BC" in e.name for e in bc.entries), "%s s-BC not run" % name)
    c.finish()


def test_criterion_05_crossed_products():
    c = Criterion(5, "crossed products are K(G x S) and k[G x S] as *-algebras")
    for name in ACTIONS:
        act = model(name).action
        r = verify_crossed_isos(act)
        c.check(r.ok, "%s: %s" % (name, _failed_names(r)))
        for key in ("beta iso: star", "alpha iso: star", "beta iso: multiplicative", "alpha iso: multiplicative"):
            c.check(r.get(key) is not None, "%s: %s missing" % (name, key))
    c.finish()


def test_criterion_06_codouble_functor():
    c = Criterion(6, "codouble coaction, induced double action and splitting")
    for name in ACTIONS:
        r = codouble_theorem(_yd(name))
        c.check(r.ok, "%s: %s" % (name, _failed_names(r)))
        for key in ("induced action = (<|_alpha then <|_beta)", "split recovers alpha", "split recovers beta"):
            c.check(r.get(key) is not None, "%s: %s missing" % (name, key))
    c.finish()


def test_criterion_07_double_codouble_multiplier():
    c = Criterion(7, "solved multiplier of the double-codouble pairing = V12 U13")
    for name in ("z2", "z3"):
        dc = double_codouble_pairing(model(name).pairing())
        c.check(dc.W == dc.VU, "%s: W != V12 U13" % name)
        c.check(dc.report.ok, "%s: %s" % (name, _failed_names(dc.report)))
    c.finish()


def test_criterion_08_heisenberg_over_double():
    c = Criterion(8, "Heisenberg algebra over the double: lr YD, action formula, Theta")
    keys = ("V12 U13 = (L (x) id)W-bar", "lr over P-bar: lr YD law", "induced D action = closed formula",
            "Theta: coassociative", "Theta: homomorphism")
    for name in ("z2", "z3"):
        r = heisenberg_over_double(model(name).pairing()).report
        c.check(r.ok, "%s: %s" % (name, _failed_names(r)))
        for key in keys:
            c.check(r.get(key) is not None, "%s: %s missing" % (name, key))
    c.finish()


def test_criterion_09_equivalence_square():
    c = Criterion(9, "chirality square closes with equal BC verdicts")
    for name in ("z2-on-2points", "s3-on-3points"):
        r = appendix_equivalence_square(rl_from_ll(_yd(name)))
        c.check(r.ok, "%s: %s" % (name, _failed_names(r)))
        c.check(set(r.data["bc"]) == {"rl", "lr", "ll", "rr"}, "%s: corners %s" % (name, sorted(r.data["bc"])))
    c.finish()


def test_criterion_10_dichotomy():
    c = Criterion(10, "trivial YD: K(S) braided commutative, k[S3] not")
    m = model("s3-on-3points")
    p = m.pairing()
    t1 = trivial_yd(p, function_algebra(3))
    c.check(check_yd_only_coaction(t1).ok, "K(S) YD")
    b1 = check_braided_commutative(t1)
    c.check(b1.ok and b1.data["verdict"], "K(S) BC")
    t2 = trivial_yd(p, group_algebra(m.group))
    c.check(check_yd_only_coaction(t2).ok, "k[S3] YD")
    b2 = check_braided_commutative(t2)
    c.check(b2.data["verdict"] is False, "k[S3] BC should fail")
    c.check(b2.get("BC criteria agree").ok, "k[S3] BC criteria disagree")
    detail = b2.get("ll BC").detail
    c.check(detail.startswith("x=") and " y=" in detail, "counterexample pair %r" % detail)
    c.finish()


def test_criterion_11_aqg_slice():
    c = Criterion(11, "integrals, AQG checks, multiplicative unitary, quantum YD routes")
    for name in ("z2", "z3", "s3"):
        m = model(name)
        n = m.group.n
        for h, want in ((m.function_hopf(), [ONE] * n), (m.group_hopf(), [ONE] + [0] * (n - 1))):
            phi = find_integral(h)
            c.check(phi is not None and phi.values == want, "%s %s integral" % (name, h.name))
            if phi is None:
                continue
            r = check_aqg(h, phi)
            c.check(r.ok, "%s %s: %s" % (name, h.name, _failed_names(r)))
            mu = multiplicative_unitary_checks(h)
            c.check(mu.ok, "%s %s: %s" % (name, h.name, _failed_names(mu)))
    for name in ACTIONS:
        m = model(name)
        yd = _yd(name)
        verdict = check_yd_only_coaction(yd).ok
        K = m.function_hopf()
        rr = square_corners(rl_from_ll(dualize_yd(yd)))["rr"]
        for side, data in (("left", rr), ("right", yd)):
            q = yd_quantum_check(data.X, data.alpha.map, data.beta.map, K, side)
            c.check(q.ok, "%s %s: %s" % (name, side, _failed_names(q)))
            c.check(q.data["yd"] == (verdict, verdict), "%s %s: verdicts %s" % (name, side, q.data["yd"]))
    c.finish()


# negative controls -------------------------------------------------------------------

def _first(report):
    f = report.first_failure()
    return f.name if f is not None else None


def _broken_antipode():
    K = model("z3").function_hopf()
    bad = FDHopf(K.alg, K.delta, K.counit, LinearMap.identity(3), "K(Z3) with S = id")
    return _first(check_hopf_axioms(bad)), "antipode: law"


def _scaled_row():
    p = model("z3").pairing()
    rows = [[(2 if i == 1 else 1) * p.rows[i].get(j, 0) for j in range(3)] for i in range(3)]
    return _first(check_pairing_axioms(Pairing(p.A, p.B, rows, "scaled"))), "multiplicative in A"


def _sign_flipped_U():
    p = model("z3").pairing()
    u = p.U.sparse()
    k = sorted(u)[1]
    u[k] = -u[k]
    U = Tensor.from_sparse(p.U.shape, u)
    return _first(check_multiplier_identities(p, U)), "(delta_A (x) id)U = U13 U23"


def _loop_table():
    # a loop of order 5: identity, inverses, Latin square, not associative
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    try:
        FiniteGroup("eabcd", table, "loop")
    except GroupError as exc:
        return str(exc).split(":")[0], "not associative"
    return None, "not associative"


def _non_action():
    G = cyclic_group(3)
    # a 3-cycle for a and a transposition for a2: bijections, but not a homomorphism
    try:
        GroupAction(G, 3, [[0, 1, 2], [1, 2, 0], [1, 0, 2]])
    except ActionError as exc:
        return str(exc).split(":")[0], "not compatible with the group law"
    return None, "not compatible with the group law"


def _perturbed_theta_hat():
    G = cyclic_group(2)
    act = GroupAction(G, 4, [[0, 1, 2, 3], [1, 0, 3, 2]])
    m = Model("z2 on 4 points", G, act)
    rr = square_corners(rl_from_ll(dualize_yd(transformation_yd(act, m.pairing()))))["rr"]
    q = yd_quantum_check(rr.X, rr.alpha.map, involution_grading(4, [0, 2, 1, 3]), m.function_hopf(), "left")
    return _first(q), "YD G-*-algebra law"


NEGATIVE = {
    "broken antipode": _broken_antipode,
    "scaled pairing row": _scaled_row,
    "sign-perturbed U": _sign_flipped_U,
    "non-group Cayley table": _loop_table,
    "non-action permutation": _non_action,
    "perturbed theta-hat": _perturbed_theta_hat,
}


def test_criterion_12_negative_controls():
    c = Criterion(12, "six perturbed inputs each fail first on their targeted check")
    for label, run in NEGATIVE.items():
        got, want = run()
        c.check(got == want, "%s: first failure %r, expected %r" % (label, got, want))
    c.finish()


@pytest.mark.parametrize("label", sorted(NEGATIVE))
def test_negative_control(label):
    got, want = NEGATIVE[label]()
    assert got == want
