"""Aggregated verification suites.

Each ``check_*`` function returns a report dict ``{"name", "passed", ...}``
with enough detail to see what was compared.  ``verify_all`` runs them with
bounds scaled by ``max_n`` and ``max_k``.
"""

import random
from collections import Counter
from itertools import product

from . import dahecke, grothendieck as k0, qmodules as qm, tableaux as tb, weights as wt


def _report(name, passed, **details):
    return {"name": name, "passed": bool(passed), **details}


# -- tableaux -----------------------------------------------------------------

FIXTURES = {
    "filled_331": {"shape": (3, 3, 1), "word": (1, 2, 3, 4, 5, 6, 7),
              "rows": [[3, 6, 7], [2, 5], [1, 4]]},
    "filled_3321": {"shape": (3, 3, 2, 1), "word": (3, 2, 1, 4, 3, 2, 2, 1, 3),
                 "rows": [[1, 2, 1, 3], [2, 3, 2], [3, 4]]},
}


def fixture_payload(name):
    """The JSON payload frozen for one worked tableau."""
    f = FIXTURES[name]
    T = tb.fill_tableau(f["shape"], f["word"])
    return {"tableau": T.to_json(), "reading_word": list(tb.reading_word(T)), "rows": T.rows(),
            "column_strict": tb.is_column_strict(T), "semistandard": tb.is_semistandard(T),
            "standard": tb.is_standard(T)}


def check_fixtures():
    out = []
    for name, f in FIXTURES.items():
        p = fixture_payload(name)
        ok = tuple(p["reading_word"]) == f["word"] and p["rows"] == f["rows"]
        if name == "filled_3321":
            ok = ok and p["column_strict"]
        out.append({"fixture": name, "round_trip_and_display": ok})
    return _report("worked tableaux", all(x["round_trip_and_display"] for x in out), fixtures=out)


def check_recording_criterion(max_n=5):
    bad = {}
    for n in range(1, max_n + 1):
        d = tuple(range(n, 0, -1))
        for lam in tb.partitions(n):
            miss = tb.recording_criterion(lam, d)
            if miss:
                bad[str(lam)] = len(miss)
    return _report("standard filling iff recording tableau", not bad, max_n=max_n, failures=bad)


def check_semistandard_enumeration(max_n=5, max_k=4):
    bad = []
    for k in range(1, max_k + 1):
        for n in range(max_n + 1):
            for lam in tb.partitions(n, k):
                fast = tb.enumerate_semistandard(lam, k)
                brute = [T for T in tb.enumerate_column_strict(lam, k) if tb.is_semistandard(T)]
                if fast != brute:
                    bad.append([list(lam), k])
    return _report("semistandard enumeration", not bad, failures=bad)


# -- quantum modules ----------------------------------------------------------

def check_closure_dimension(max_k=5, max_size=6):
    rows, ok = [], True
    for k in range(2, max_k + 1):
        for n in range(max_size + 1):
            for lam in tb.partitions(n, k - 1):
                c = tb.slk_weight_from_partition(lam, k)
                M = qm.build_tilde_V(c, k)
                sing = qm.singular_vectors(M, qm.top_weight(c, k))
                C = qm.submodule_closure(M, sing, ops=("F",))
                count = len(tb.enumerate_semistandard(lam, k))
                good = len(sing) == 1 and C.dim == count
                ok &= good
                rows.append({"k": k, "shape": list(lam), "ambient_dim": M.dim, "closure_dim": C.dim,
                             "semistandard": count, "singular_dim": len(sing), "ok": good})
    return _report("closure dimension equals semistandard count", ok, cases=rows)


def check_wedge(max_k=5, max_r=3):
    rows = []
    for k in range(2, max_k + 1):
        for r in range(1, min(max_r, k - 1) + 1):
            bad = qm.wedge_closure_check(k, r)
            rows.append({"k": k, "r": r, "mismatches": len(bad)})
    return _report("coproduct action on expanded wedges", all(x["mismatches"] == 0 for x in rows),
                   coproduct=qm.COPRODUCT, cases=rows)


def check_module_relations(max_k=4):
    rows = []
    for k in range(2, max_k + 1):
        mods = [("vector", qm.vector_rep(k))]
        mods += [(f"wedge{r}", qm.wedge_rep(k, r)) for r in range(2, k)]
        mods.append(("V(x)V", qm.tensor(qm.vector_rep(k), qm.vector_rep(k))))
        for name, M in mods:
            rows.append({"k": k, "module": name, "quantum": qm.relations_hold(M),
                         "classical": qm.relations_hold(qm.specialize_q1(M), classical=True)})
    return _report("quantum group relations", all(x["quantum"] and x["classical"] for x in rows), cases=rows)


# -- Hecke ------------------------------------------------------------------

def check_hecke(max_n=3, max_r=3, cs=(0, 1, 2), seed=0, samples=4):
    rng = random.Random(seed)
    rows, ok = [], True
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            for c in cs:
                model = dahecke.PsiModel(n, r, c)
                rep = dahecke.verify_dahecke_relations(model)
                hom = all(dahecke.homomorphism_check(model, dahecke.random_element(r, rng),
                                                     dahecke.random_element(r, rng))
                          for _ in range(samples))
                good = dahecke.relations_pass(rep) and hom
                ok &= good
                rows.append({"n": n, "r": r, "c": c, "orientation": rep["verified_orientation"],
                             "printed_holds": rep["printed_orientation_holds"], "homomorphism": hom,
                             "ok": good})
    printed = dahecke.verify_dahecke_relations(dahecke.PsiModel(2, 2, 0))["printed_orientation_holds"]
    return _report("degenerate affine Hecke relations", ok and printed is False,
                   printed_orientation_fails_at_2_2_0=printed is False, cases=rows)


# -- Grothendieck group -------------------------------------------------------

def check_slk_action(max_n=4, max_k=4):
    rows = []
    for n in range(1, max_n + 1):
        for k in range(2, max_k + 1):
            a = k0.verify_slk_action(n, k)
            b = k0.iso_to_tensor(n, k)
            rows.append({"n": n, "k": k, "relations": all(x for _, x in a),
                         "intertwines": all(x for _, x in b),
                         "failed": [nm for nm, x in a + b if not x]})
    return _report("class-level sl_k action", all(x["relations"] and x["intertwines"] for x in rows),
                   cases=rows)


def check_block_discipline(max_n=5, max_k=4):
    rows = []
    for n in range(1, max_n + 1):
        for k in range(2, max_k + 1):
            rows.append({"n": n, "k": k, "violations": len(k0.block_discipline(n, k))})
    return _report("block discipline of raising and lowering", all(x["violations"] == 0 for x in rows),
                   cases=rows)


def prinjective_case(lam, k):
    S = k0.PrinjectiveSpan(lam, k)
    T = S.transported()
    ss = tb.enumerate_semistandard(lam, k)
    type_counts = Counter(wt.phi(tb.reading_word(t), k) for t in ss)
    top = Counter(S.weights)
    high = wt.phi(tb.high_label(lam), k)
    out = {
        "shape": [list(p) for p in lam] if tb.is_multipartition(lam) else list(lam), "k": k,
        "parabolic_invariant": S.parabolic.invariant,
        "dim": S.dim, "semistandard": len(ss),
        "F_stable": S.stable("F"), "E_stable": S.stable("E"),
        "projection_iso": S.projection_is_iso(),
        "transported_relations": qm.relations_hold(T, classical=True),
        "top_weight_1dim": top.get(high, 0) == 1 and all(wt.slk_geq(high, w) for w in top),
        "character_matches": top == type_counts,
        "naive_projection_relations": qm.relations_hold(S.naive_projection(), classical=True),
    }
    if not tb.is_multipartition(lam) and len(lam) == 1 and 1 <= lam[0] <= k - 1:
        W = qm.specialize_q1(qm.wedge_rep(k, lam[0]))
        out["matches_wedge"] = ([(a,) for a in T.labels] == W.labels and T.E == W.E and T.F == W.F)
    keys = ["parabolic_invariant", "F_stable", "E_stable", "projection_iso", "transported_relations",
            "top_weight_1dim", "character_matches"]
    out["ok"] = all(out[x] for x in keys) and out["dim"] == out["semistandard"] and out.get("matches_wedge", True)
    return out


def check_prinjective(max_size=6, max_k=4, multi=True):
    rows = []
    for k in range(2, max_k + 1):
        for n in range(max_size + 1):
            for lam in tb.partitions(n, k):
                rows.append(prinjective_case(lam, k))
        if multi:
            for n in range(1, min(max_size, 4) + 1):
                for lam in tb.multipartitions(n, 2, k):
                    rows.append(prinjective_case(lam, k))
    naive = sum(1 for x in rows if not x["naive_projection_relations"])
    return _report("prinjective span", all(x["ok"] for x in rows), cases=rows,
                   naive_projection_failures=naive)


def check_tpc(max_n=5, k=3):
    rows = []
    for n in range(1, max_n + 1):
        for levi in wt.compositions(n):
            labels = list(product(range(1, k + 1), repeat=n))
            nus = {}
            for a in labels:
                nus.setdefault(wt.phi(a, k), set()).add(wt.phi_blocks(a, levi, k))
            pre = True
            for group in nus.values():
                group = sorted(group)
                leq = {(x, y): wt.inverse_dominance_leq(x, y) for x in group for y in group}
                pre &= all(leq[(x, x)] for x in group)
                pre &= all(leq[(x, z)] for x in group for y in group if leq[(x, y)]
                           for z in group if leq[(y, z)])
            where = wt.block_index(levi)
            mono = True
            for a in labels:
                for h in range(n - 1):
                    if a[h] >= a[h + 1] and where[h] != where[h + 1]:
                        b = a[:h] + (a[h + 1], a[h]) + a[h + 2:]
                        mono &= wt.inverse_dominance_leq(wt.phi_blocks(b, levi, k), wt.phi_blocks(a, levi, k))
            split = True
            for a in labels:
                for i in range(1, k):
                    for op in ("F", "E"):
                        groups = k0.tpc3_split(a, levi, i, k, op)
                        total = k0.FormalClassVector()
                        for g in groups:
                            total = total + g
                        whole = k0.op_F_i(a, i, k) if op == "F" else k0.op_E_i(a, i, k)
                        split &= total == whole
                        split &= all(g == k0.factor_raise(a, levi, j, i, k, op) for j, g in enumerate(groups))
            rows.append({"levi": list(levi), "preorder": pre, "p_monotone": mono, "split": split})
    ok = all(x["preorder"] and x["p_monotone"] and x["split"] for x in rows)
    return _report("standardization order and Levi splitting", ok, k=k, cases=rows)


def check_graded(max_n=5, max_k=4):
    rows = []
    for n in range(1, max_n + 1):
        for k in range(2, max_k + 1):
            A = k0.CategAction(n, k) if n <= 4 else None
            kexp = step = comp = True
            for m, a in enumerate(k0.labels(n, k)):
                for i in range(1, k):
                    g = k0.graded_shifts(a, i)
                    if A is not None:
                        kexp &= A.h[i][m].get(m, 0) == g["K_exp"]
                    kexp &= g["K_exp"] == wt.pairing(wt.phi(a, k), i)
                    d2 = wt.plus_i(wt.dominant_rep(a), i)
                    if d2:
                        step &= wt.count_c(d2, i + 1) == wt.count_c(a, i + 1) + 1
                        cs = k0.composed_shift(a, i)
                        comp &= cs - 1 + 2 == g["K_exp"] and g["adj_shift"] - cs == 2
            rows.append({"n": n, "k": k, "K_exp": kexp, "count_step": step, "composed_shift": comp})
    return _report("graded shift bookkeeping",
                   all(x["K_exp"] and x["count_step"] and x["composed_shift"] for x in rows), cases=rows)


def check_weights(max_n=5, max_k=4):
    ok = True
    for n in range(max_n + 1):
        for k in range(2, max_k + 1):
            for a in product(range(1, k + 1), repeat=n):
                m = wt.phi(a, k)
                for i in range(1, k):
                    ok &= wt.pairing(m, i) == wt.count_c(a, i) - wt.count_c(a, i + 1)
                    d = wt.dominant_rep(a)
                    p = wt.plus_i(d, i)
                    if p:
                        ok &= wt.phi(p, k) == wt.wsub(m, wt.alpha(i, k)) and wt.minus_i(p, i) == d
                for l in range(1, n + 1):
                    x = wt.casimir_eigenvalue(a, l)
                    if x < k:
                        b = a[:l - 1] + (x + 1,) + a[l:]
                        ok &= wt.phi(b, k) == wt.wsub(m, wt.alpha(x, k))
    return _report("weights and phi", ok)


def verify_all(max_n=4, max_k=4):
    """Run every suite with bounds scaled by max_n and max_k."""
    reports = [
        check_fixtures(),
        check_recording_criterion(min(max_n, 5)),
        check_semistandard_enumeration(max_n, max_k),
        check_weights(max_n, max_k),
        check_wedge(max_k, 3),
        check_module_relations(max_k),
        check_closure_dimension(max_k, max_n),
        check_hecke(min(max_n, 3), 3),
        check_slk_action(max_n, max_k),
        check_block_discipline(max_n, max_k),
        check_prinjective(max_n, max_k),
        check_tpc(max_n, min(max_k, 3)),
        check_graded(max_n, max_k),
    ]
    return {"passed": all(r["passed"] for r in reports), "reports": reports}
