"""Finite-dimensional U_q(sl_k) weight modules over exact scalars.

Every basis label is a tuple of factor labels, so tensor products just
concatenate labels: the vector representation has labels ``(j,)``, the
quantum exterior power has labels ``((j_1, ..., j_r),)``, and V^{(x)r} has
plain tuples ``(j_1, ..., j_r)``.

Coproduct:  E -> E(x)K + 1(x)E,   F -> F(x)1 + K^{-1}(x)F,   K -> K(x)K.
"""

from collections import Counter
from itertools import combinations, permutations

from .scalars import LaurentInt, RatFunc, LaurentSpan, kernel_basis, primitive_part, qint, ratfunc_solve, scalar_to_json
from .tableaux import inversions
from .weights import cartan, delta, pairing, varpi, wadd

COPRODUCT = "E(x)K + 1(x)E, F(x)1 + K^-1(x)F, K(x)K"


# -- sparse matrices: list of columns, each a dict row -> scalar ----------

def _add_into(out, row, val):
    s = out.get(row, 0) + val
    if s:
        out[row] = s
    else:
        out.pop(row, None)


def apply(cols, vec):
    out = {}
    for c, x in vec.items():
        for r, a in cols[c].items():
            _add_into(out, r, a * x)
    return out


def matmul(A, B):
    return [apply(A, col) for col in B]


def matadd(A, B, scale=1):
    out = []
    for a, b in zip(A, B):
        col = dict(a)
        for r, x in b.items():
            _add_into(col, r, x * scale)
        out.append(col)
    return out


def matscale(A, s):
    return [{r: x * s for r, x in col.items() if x * s} for col in A]


def is_zero_matrix(A):
    return all(not col for col in A)


def diagonal(vals):
    return [{i: v} if v else {} for i, v in enumerate(vals)]


def identity(n):
    return diagonal([1] * n)


class QModule:
    """A weight module: labels, count-vector weights, and E_i, F_i (1 <= i < k)."""

    def __init__(self, k, labels, weights, E, F):
        self.k = k
        self.labels = list(labels)
        self.weights = [tuple(w) for w in weights]
        self.E = E      # dict i -> list of column dicts
        self.F = F
        self.index = {lab: n for n, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate basis labels")

    @property
    def dim(self):
        return len(self.labels)

    def K_exp(self, idx, i):
        return pairing(self.weights[idx], i)

    def act(self, op, i, vec):
        """Apply ``E`` or ``F`` with index i to a sparse vector."""
        mats = self.E if op == "E" else self.F
        return apply(mats[i], vec)

    def weight_space(self, mu):
        mu = tuple(mu)
        return [n for n, w in enumerate(self.weights) if w == mu]

    def to_json(self):
        def triples(mats):
            return {str(i): [[r, c, scalar_to_json(x)] for c, col in enumerate(m)
                             for r, x in sorted(col.items())]
                    for i, m in sorted(mats.items())}
        return {"k": self.k, "basis": [_jsonable(lab) for lab in self.labels],
                "weights": [list(w) for w in self.weights],
                "E": triples(self.E), "F": triples(self.F)}


def _jsonable(lab):
    if isinstance(lab, tuple):
        return [_jsonable(x) for x in lab]
    return lab


def trivial_module(k):
    zero = [{}]
    return QModule(k, [()], [(0,) * k], {i: list(zero) for i in range(1, k)},
                   {i: list(zero) for i in range(1, k)})


def vector_rep(k):
    if k < 2:
        raise ValueError("k must be at least 2")
    labels = [(j,) for j in range(1, k + 1)]
    weights = [delta(j, k) for j in range(1, k + 1)]
    one = LaurentInt(1)
    E = {i: [{i - 1: one} if j == i + 1 else {} for j in range(1, k + 1)] for i in range(1, k)}
    F = {i: [{i: one} if j == i else {} for j in range(1, k + 1)] for i in range(1, k)}
    return QModule(k, labels, weights, E, F)


def tensor(M, N):
    if M.k != N.k:
        raise ValueError(f"rank mismatch: {M.k} vs {N.k}")
    k, dn = M.k, N.dim
    labels = [a + b for a in M.labels for b in N.labels]
    weights = [wadd(a, b) for a in M.weights for b in N.weights]
    E, F = {}, {}
    for i in range(1, k):
        EM, EN, FM, FN = M.E[i], N.E[i], M.F[i], N.F[i]
        kN = [N.K_exp(y, i) for y in range(dn)]
        Ecols, Fcols = [], []
        for x in range(M.dim):
            kx = M.K_exp(x, i)
            for y in range(dn):
                e, f = {}, {}
                # E(x (x) y) = Ex (x) K y + x (x) Ey
                for r, a in EM[x].items():
                    _add_into(e, r * dn + y, a.shift(kN[y]) if kN[y] else a)
                for r, a in EN[y].items():
                    _add_into(e, x * dn + r, a)
                # F(x (x) y) = Fx (x) y + K^{-1} x (x) Fy
                for r, a in FM[x].items():
                    _add_into(f, r * dn + y, a)
                for r, a in FN[y].items():
                    _add_into(f, x * dn + r, a.shift(-kx) if kx else a)
                Ecols.append(e)
                Fcols.append(f)
        E[i], F[i] = Ecols, Fcols
    return QModule(k, labels, weights, E, F)


def tensor_power(M, r):
    out = trivial_module(M.k)
    for _ in range(r):
        out = tensor(out, M)
    return out


# -- quantum exterior powers ------------------------------------------------

def _check_wedge_label(label):
    label = tuple(label)
    if any(x <= y for x, y in zip(label, label[1:])):
        raise ValueError(f"wedge label {label} is not strictly decreasing")
    return label


def wedge_expand(label):
    """v_{j_1} ^ ... ^ v_{j_r} as a vector of V^{(x)r}: sum of sgn * q^len over S_r."""
    label = _check_wedge_label(label)
    out = {}
    for s in permutations(range(len(label))):
        ell = inversions(s)
        out[tuple(label[x] for x in s)] = LaurentInt({ell: -1 if ell % 2 else 1})
    return out


def wedge_labels(k, r):
    return sorted(combinations(range(k, 0, -1), r))


def wedge_E(label, i):
    """E_i on a wedge label: lower the entry i+1 to i when the result stays strict."""
    if i + 1 in label and i not in label:
        return tuple(i if x == i + 1 else x for x in label)
    return None


def wedge_F(label, i):
    if i in label and i + 1 not in label:
        return tuple(i + 1 if x == i else x for x in label)
    return None


def wedge_rep(k, r):
    if not 1 <= r <= k - 1:
        raise ValueError(f"r must lie in 1..{k - 1}")
    labs = wedge_labels(k, r)
    idx = {lab: n for n, lab in enumerate(labs)}
    one = LaurentInt(1)
    weights = []
    for lab in labs:
        w = (0,) * k
        for j in lab:
            w = wadd(w, delta(j, k))
        weights.append(w)
    E, F = {}, {}
    for i in range(1, k):
        E[i] = [{idx[t]: one} if (t := wedge_E(lab, i)) else {} for lab in labs]
        F[i] = [{idx[t]: one} if (t := wedge_F(lab, i)) else {} for lab in labs]
    return QModule(k, [(lab,) for lab in labs], weights, E, F)


def wedge_closure_check(k, r):
    """Compare the coproduct action on expanded wedges with the wedge formulas.

    Returns a list of mismatches ``(label, op, i)``; empty means exact agreement.
    """
    V = tensor_power(vector_rep(k), r)
    bad = []
    for lab in wedge_labels(k, r):
        vec = {V.index[t]: c for t, c in wedge_expand(lab).items()}
        for i in range(1, k):
            for op, formula in (("E", wedge_E), ("F", wedge_F)):
                got = V.act(op, i, vec)
                t = formula(lab, i)
                want = {} if t is None else {V.index[u]: c for u, c in wedge_expand(t).items()}
                if got != want:
                    bad.append((lab, op, i))
    return bad


def build_tilde_V(c, k):
    """The tensor product of c_r copies of the r-th exterior power, r increasing."""
    c = list(c)
    if len(c) != k - 1 or any(x < 0 for x in c):
        raise ValueError(f"need k-1 = {k - 1} nonnegative coefficients, got {c}")
    M = trivial_module(k)
    for r, mult in enumerate(c, start=1):
        for _ in range(mult):
            M = tensor(M, vector_rep(k) if r == 1 else wedge_rep(k, r))
    return M


def top_weight(c, k):
    w = (0,) * k
    for r, mult in enumerate(c, start=1):
        for _ in range(mult):
            w = wadd(w, varpi(r, k))
    return w


# -- characters, specialization, relations ----------------------------------

def character(M):
    return dict(sorted(Counter(M.weights).items()))


def _eval1(x):
    if isinstance(x, RatFunc):
        return x.eval_q1()
    if isinstance(x, LaurentInt):
        return x.eval_q1()
    return x


def specialize_q1(M):
    def spec(mats):
        return {i: [{r: v for r, x in col.items() if (v := _eval1(x))} for col in m]
                for i, m in mats.items()}
    return QModule(M.k, M.labels, M.weights, spec(M.E), spec(M.F))


def relation_report(M, classical=False):
    """Check the defining relations of U_q(sl_k) (or U(sl_k) when classical).

    Returns a list of (name, holds) pairs.
    """
    k, n = M.k, M.dim
    out = []
    idx = range(1, k)

    def record(name, ok):
        out.append((name, bool(ok)))

    for i in idx:
        for j in idx:
            ok = True
            for op, sign in (("E", 1), ("F", -1)):
                mats = M.E if op == "E" else M.F
                for c, col in enumerate(mats[j]):
                    for r, x in col.items():
                        step = pairing(M.weights[r], i) - pairing(M.weights[c], i)
                        if step != sign * cartan(i, j):
                            ok = False
            record(f"K{i} E{j}/F{j} weight step", ok)

    def h_diag(i):
        if classical:
            return diagonal([pairing(w, i) for w in M.weights])
        return diagonal([qint(pairing(w, i)) for w in M.weights])

    for i in idx:
        for j in idx:
            comm = matadd(matmul(M.E[i], M.F[j]), matmul(M.F[j], M.E[i]), -1)
            target = h_diag(i) if i == j else [{} for _ in range(n)]
            record(f"[E{i},F{j}]", is_zero_matrix(matadd(comm, target, -1)))

    two = 2 if classical else qint(2)
    for mats, name in ((M.E, "E"), (M.F, "F")):
        for i in idx:
            for j in idx:
                if abs(i - j) == 1:
                    a = matmul(mats[i], matmul(mats[i], mats[j]))
                    b = matmul(mats[i], matmul(mats[j], mats[i]))
                    c = matmul(mats[j], matmul(mats[i], mats[i]))
                    s = matadd(matadd(a, c), b, -two)
                    record(f"Serre {name}{i}{name}{j}", is_zero_matrix(s))
                elif abs(i - j) > 1:
                    s = matadd(matmul(mats[i], mats[j]), matmul(mats[j], mats[i]), -1)
                    record(f"commute {name}{i}{name}{j}", is_zero_matrix(s))
    return out


def relations_hold(M, classical=False):
    return all(ok for _, ok in relation_report(M, classical))


# -- singular vectors and closures ------------------------------------------

def _clear_denominators(vec):
    # RatFunc vector -> primitive Laurent vector spanning the same line
    den = LaurentInt(1)
    for x in vec.values():
        if x.den != den:
            den = den * x.den
    out = {}
    for i, x in vec.items():
        y = x * den
        if y:
            out[i] = y.to_laurent()
    span = LaurentSpan()
    span.add(out)
    return span.rows[0][1] if span.rows else {}


def singular_vectors(M, mu):
    """Basis of the weight-mu vectors killed by every E_i (as Laurent vectors)."""
    ws = M.weight_space(mu)
    if not ws:
        return []
    pos = {c: n for n, c in enumerate(ws)}
    rows = {}
    for i in range(1, M.k):
        for c in ws:
            for r, x in M.E[i][c].items():
                rows.setdefault((i, r), [0] * len(ws))[pos[c]] = x
    system = [rows[key] for key in sorted(rows)]
    if not system:
        basis = [[RatFunc(1) if a == b else RatFunc(0) for a in range(len(ws))] for b in range(len(ws))]
    else:
        basis = kernel_basis(system, len(ws))
    return [_clear_denominators({ws[n]: x for n, x in enumerate(v) if x}) for v in basis]


def weight_components(M, vec):
    parts = {}
    for i, x in vec.items():
        parts.setdefault(M.weights[i], {})[i] = x
    return [parts[w] for w in sorted(parts, reverse=True)]


class Closure:
    """A submodule given by a spanning basis found breadth first from seeds."""

    def __init__(self, M, vectors, weights):
        self.ambient = M
        self.vectors = vectors
        self.weights = weights

    @property
    def dim(self):
        return len(self.vectors)

    def character(self):
        return dict(sorted(Counter(self.weights).items()))

    def induced(self):
        """The action in the closure basis, as a QModule with RatFunc entries."""
        M = self.ambient
        by_weight = {}
        for n, w in enumerate(self.weights):
            by_weight.setdefault(w, []).append(n)

        def coords(vec):
            if not vec:
                return {}
            w = M.weights[next(iter(vec))]
            cols = by_weight.get(w, [])
            support = sorted(set(vec).union(*(self.vectors[c].keys() for c in cols)))
            system = [[self.vectors[c].get(s, 0) for c in cols] for s in support]
            sol = ratfunc_solve(system, [vec.get(s, 0) for s in support])
            return {cols[n]: x for n, x in enumerate(sol) if x}

        E, F = {}, {}
        for i in range(1, M.k):
            E[i] = [coords(M.act("E", i, v)) for v in self.vectors]
            F[i] = [coords(M.act("F", i, v)) for v in self.vectors]
        return QModule(M.k, list(range(self.dim)), self.weights, E, F)


def submodule_closure(M, seeds, ops=("F", "E")):
    """Smallest subspace containing the seeds and stable under the given operators.

    Generators are applied in the order F_1 < ... < F_{k-1} < E_1 < ...; only
    vectors that enlarge the span are kept, so the result is a basis.
    """
    spans = {}
    vectors, weights = [], []
    queue = []

    def offer(vec):
        if not vec:
            return
        vec = primitive_part(vec)
        w = M.weights[next(iter(vec))]
        span = spans.setdefault(w, LaurentSpan())
        if span.add(vec):
            vectors.append(vec)
            weights.append(w)
            queue.append(vec)

    for s in seeds:
        for part in weight_components(M, s):
            offer(part)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for op in ops:
            for i in range(1, M.k):
                offer(M.act(op, i, v))
    return Closure(M, vectors, weights)
