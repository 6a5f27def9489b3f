"""Command line front end.  Every payload is JSON; exit codes are 0 (ok),
1 (a verification failed) and 2 (usage error)."""

import argparse
import json
import os
import sys
import tempfile

from . import dahecke, grothendieck as k0, qmodules as qm, tableaux as tb, weights as wt
from . import verify


class UsageError(Exception):
    pass


def _ints(text, flag):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag}: expected comma separated integers, got {text!r}")


def _shape(text, flag="--shape"):
    """'3,3,1' is a partition, '2,1|1' a multipartition."""
    try:
        if "|" in text:
            return tuple(tb.as_partition(_ints(p, flag)) for p in text.split("|"))
        return tb.as_partition(_ints(text, flag))
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}")


def _emit(payload, args):
    text = json.dumps(payload, indent=args.json_indent) + "\n"
    if args.out:
        d = os.path.dirname(os.path.abspath(args.out))
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, args.out)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)


def _tableau_json(T):
    return T.to_json()


# -- handlers -----------------------------------------------------------------

def cmd_tableaux(args):
    lam = _shape(args.shape)
    if args.action == "enumerate":
        if args.max_entry is None:
            raise UsageError("--max-entry is required for enumerate")
        return [_tableau_json(T) for T in tb.enumerate_semistandard(lam, args.max_entry)], 0
    if args.action == "type":
        if args.word is None:
            raise UsageError("--word is required for type")
        return [_tableau_json(T) for T in tb.enumerate_semistandard_of_type(lam, _ints(args.word, "--word"))], 0
    if args.word is None:
        raise UsageError("--word is required for predicates")
    a = _ints(args.word, "--word")
    try:
        T = tb.fill_multitableau(lam, a) if tb.is_multipartition(lam) else tb.fill_tableau(lam, a)
    except ValueError as exc:
        raise UsageError(f"--word: {exc}")
    out = {"tableau": _tableau_json(T), "reading_word": list(tb.reading_word(T)),
           "column_strict": tb.is_column_strict(T), "semistandard": tb.is_semistandard(T),
           "standard": tb.is_standard(T)}
    if isinstance(T, tb.Tableau):
        out["rows"] = T.rows()
    return out, 0


def cmd_weights(args):
    a = _ints(args.weight, "--weight")
    if args.action == "phi":
        if args.k is None:
            raise UsageError("--k is required for phi")
        try:
            return list(wt.phi(a, args.k)), 0
        except ValueError as exc:
            raise UsageError(f"--weight: {exc}")
    if args.action in ("plus", "minus"):
        if args.i is None:
            raise UsageError("--i is required")
        d = wt.dominant_rep(a)
        res = (wt.plus_i if args.action == "plus" else wt.minus_i)(d, args.i)
        return (list(res) if res else None), 0
    if args.levi is None:
        raise UsageError("--levi is required for poset")
    try:
        return wt.xi_classes(wt.dominant_rep(a), _ints(args.levi, "--levi")).to_json(), 0
    except ValueError as exc:
        raise UsageError(f"--levi: {exc}")


def _module_from_args(args):
    k = args.k
    if k is None or k < 2:
        raise UsageError("--k must be at least 2")
    if args.kind == "vector":
        return qm.vector_rep(k), None
    if args.kind == "wedge":
        if args.r is None or not 1 <= args.r <= k - 1:
            raise UsageError(f"--r must lie in 1..{k - 1}")
        return qm.wedge_rep(k, args.r), None
    if args.c is None:
        raise UsageError("--c is required for the tilde module")
    c = _ints(args.c, "--c")
    if len(c) != k - 1 or any(x < 0 for x in c):
        raise UsageError(f"--c: need {k - 1} nonnegative integers")
    return qm.build_tilde_V(c, k), c


def cmd_module(args):
    M, c = _module_from_args(args)
    if args.action == "build":
        return M.to_json(), 0
    if args.action == "character":
        return [[list(w), m] for w, m in qm.character(M).items()], 0
    if c is None:
        seeds = qm.singular_vectors(M, max(M.weights))
        lam = None
    else:
        seeds = qm.singular_vectors(M, qm.top_weight(c, M.k))
        lam = tb.partition_from_slk_weight(c)
    C = qm.submodule_closure(M, seeds)
    out = {"ambient_dim": M.dim, "closure_dim": C.dim,
           "character": [[list(w), m] for w, m in C.character().items()]}
    if lam is not None:
        out["shape"] = list(lam)
        out["semistandard"] = len(tb.enumerate_semistandard(lam, M.k))
    return out, 0


def cmd_hecke(args):
    try:
        model = dahecke.PsiModel(args.n, args.r, args.c)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.action == "verify":
        rep = dahecke.verify_dahecke_relations(model)
        return rep, 0 if dahecke.relations_pass(rep) else 1
    h = args.h if args.h is not None else model.r
    if not 1 <= h <= model.r:
        raise UsageError(f"--h must lie in 1..{model.r}")
    spec = dahecke.x_spectrum(model, h)
    return {"h": h, "spectrum": [[v, m] for v, m in spec.items()]}, 0


def cmd_k0(args):
    if args.k is None or args.k < 2:
        raise UsageError("--k must be at least 2")
    k = args.k
    if args.action == "action":
        if args.n is None:
            raise UsageError("--n is required")
        A = k0.CategAction(args.n, k)

        def triples(mats):
            return {str(i): [[r, c, x] for c, col in enumerate(m) for r, x in sorted(col.items())]
                    for i, m in sorted(mats.items())}
        return {"n": args.n, "k": k, "labels": [list(a) for a in A.labels],
                "F": triples(A.F), "E": triples(A.E)}, 0
    if args.action == "verify":
        if args.n is None:
            raise UsageError("--n is required")
        a = k0.verify_slk_action(args.n, k)
        b = k0.iso_to_tensor(args.n, k)
        rep = {"relations": [{"name": nm, "holds": ok} for nm, ok in a],
               "intertwiner": [{"name": nm, "holds": ok} for nm, ok in b]}
        return rep, 0 if all(ok for _, ok in a + b) else 1
    if args.action == "parabolic":
        if args.shape is None:
            raise UsageError("--shape is required")
        case = verify.prinjective_case(_shape(args.shape), k)
        return case, 0 if case["ok"] else 1
    if args.label is None or args.levi is None or args.i is None:
        raise UsageError("tpc3 needs --label, --levi and --i")
    b = _ints(args.label, "--label")
    if not wt.in_range(b, k):
        raise UsageError(f"--label: entries must lie in 1..{k}")
    try:
        groups = k0.tpc3_split(b, _ints(args.levi, "--levi"), args.i, k, args.op)
    except ValueError as exc:
        raise UsageError(f"--levi: {exc}")
    return [g.to_json() for g in groups], 0


def cmd_verify_all(args):
    rep = verify.verify_all(args.max_n, args.max_k)
    summary = {"passed": rep["passed"],
               "reports": [{"name": r["name"], "passed": r["passed"]} for r in rep["reports"]]}
    payload = rep if args.full else summary
    return payload, 0 if rep["passed"] else 1


# -- parser -----------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write JSON here (atomically) instead of stdout")
    common.add_argument("--json-indent", type=int, default=None, help="pretty-print with this indent")

    p = argparse.ArgumentParser(prog="slkcat", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tableaux", parents=[common], help="enumerate tableaux and test predicates")
    t.add_argument("action", choices=["enumerate", "type", "predicates"])
    t.add_argument("--shape", required=True, help="column heights, e.g. 3,3,1 or 2,1|1")
    t.add_argument("--max-entry", type=int)
    t.add_argument("--word", help="sequence a (predicates) or type d (type)")
    t.set_defaults(func=cmd_tableaux)

    w = sub.add_parser("weights", parents=[common], help="phi, block moves and the Xi poset")
    w.add_argument("action", choices=["phi", "plus", "minus", "poset"])
    w.add_argument("--weight", required=True)
    w.add_argument("--k", type=int)
    w.add_argument("--i", type=int)
    w.add_argument("--levi")
    w.set_defaults(func=cmd_weights)

    m = sub.add_parser("module", parents=[common], help="build quantum modules")
    m.add_argument("action", choices=["build", "character", "closure"])
    m.add_argument("--kind", choices=["vector", "wedge", "tilde"], default="tilde")
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--r", type=int)
    m.add_argument("--c", help="fundamental weight coefficients c_1..c_{k-1}")
    m.set_defaults(func=cmd_module)

    h = sub.add_parser("hecke", parents=[common], help="degenerate affine Hecke checks")
    h.add_argument("action", choices=["verify", "spectrum"])
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--r", type=int, required=True)
    h.add_argument("--c", type=int, default=0)
    h.add_argument("--h", type=int)
    h.set_defaults(func=cmd_hecke)

    g = sub.add_parser("k0", parents=[common], help="class-level Verma calculus")
    g.add_argument("action", choices=["action", "verify", "tpc3", "parabolic"])
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--label")
    g.add_argument("--levi")
    g.add_argument("--i", type=int)
    g.add_argument("--op", choices=["F", "E"], default="F")
    g.add_argument("--shape")
    g.set_defaults(func=cmd_k0)

    v = sub.add_parser("verify-all", parents=[common], help="run every verification suite")
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--max-k", type=int, default=4)
    v.add_argument("--full", action="store_true", help="include per-case details")
    v.set_defaults(func=cmd_verify_all)
    return p


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, code = args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"slkcat {args.command}: error: {exc}\n")
        return 2
    _emit(payload, args)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
