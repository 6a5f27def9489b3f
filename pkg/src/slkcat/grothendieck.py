"""The formal Verma calculus on the free abelian group spanned by M(a), a in I^n.

Raising a position adds epsilon_l to a label, lowering subtracts it, and
anything that leaves I^n = {1..k}^n is dropped.  All matrices here are
integer sparse column lists (see ``qmodules.apply``).
"""

from collections import Counter
from fractions import Fraction
from itertools import permutations, product

from .qmodules import (QModule, apply, diagonal, is_zero_matrix, matadd, matmul, relation_report,
                       specialize_q1, tensor_power, vector_rep, wedge_labels, wedge_rep)
from .scalars import LaurentSpan, rank
from .tableaux import (as_multipartition, as_partition, enumerate_semistandard, fill_multitableau,
                       fill_tableau, high_label, is_column_strict, is_multipartition, is_semistandard,
                       size)
from .weights import (alpha, block_index, cartan, count_c, dominant_rep, levi_blocks, minus_i,
                      pairing, phi, plus_i, wsub)


class FormalClassVector(dict):
    """Finitely supported integer combination of Verma symbols, keyed by label."""

    def __add__(self, other):
        out = FormalClassVector(self)
        for a, c in other.items():
            s = out.get(a, 0) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return out

    def scaled(self, s):
        return FormalClassVector({a: c * s for a, c in self.items() if c * s})

    def to_json(self):
        return {",".join(map(str, a)): c for a, c in sorted(self.items())}


def labels(n, k):
    """I^n in lexicographic order (the same order as the tensor basis)."""
    return list(product(range(1, k + 1), repeat=n))


def _step(a, k, delta, keep):
    out = FormalClassVector()
    for l, x in enumerate(a):
        y = x + delta
        if 1 <= y <= k and keep(x):
            b = a[:l] + (y,) + a[l + 1:]
            out[b] = out.get(b, 0) + 1
    return out


def op_F(a, k):
    return _step(tuple(a), k, 1, lambda x: True)


def op_E(a, k):
    return _step(tuple(a), k, -1, lambda x: True)


def op_F_i(a, i, k):
    """Raises at positions with (a, epsilon_l) = i."""
    return _step(tuple(a), k, 1, lambda x: x == i)


def op_E_i(a, i, k):
    return _step(tuple(a), k, -1, lambda x: x == i + 1)


class CategAction:
    def __init__(self, n, k):
        self.n, self.k = n, k
        self.labels = labels(n, k)
        self.index = {a: m for m, a in enumerate(self.labels)}
        self.F = {i: [self._col(op_F_i(a, i, k)) for a in self.labels] for i in range(1, k)}
        self.E = {i: [self._col(op_E_i(a, i, k)) for a in self.labels] for i in range(1, k)}
        self.h = {i: diagonal([count_c(a, i) - count_c(a, i + 1) for a in self.labels])
                  for i in range(1, k)}

    def _col(self, vec):
        return {self.index[b]: c for b, c in vec.items()}


def verify_slk_action(n, k):
    """sl_k relations, weight steps and nilpotency for the class-level operators.

    Returns a list of (name, holds).
    """
    A = CategAction(n, k)
    dim = len(A.labels)
    zero = [{} for _ in range(dim)]
    out = []
    idx = range(1, k)
    for i in idx:
        for j in idx:
            comm = matadd(matmul(A.E[i], A.F[j]), matmul(A.F[j], A.E[i]), -1)
            target = A.h[i] if i == j else zero
            out.append((f"[e{i},f{j}] = delta h{i}", is_zero_matrix(matadd(comm, target, -1))))
            for op, sgn in (("e", 1), ("f", -1)):
                X = A.E[j] if op == "e" else A.F[j]
                comm = matadd(matmul(A.h[i], X), matmul(X, A.h[i]), -1)
                ok = is_zero_matrix(matadd(comm, X, -sgn * cartan(i, j)))
                out.append((f"[h{i},{op}{j}] = {sgn * cartan(i, j)} {op}{j}", ok))
    for mats, name in ((A.E, "e"), (A.F, "f")):
        for i in idx:
            for j in idx:
                if abs(i - j) == 1:
                    a = matmul(mats[i], matmul(mats[i], mats[j]))
                    b = matmul(mats[i], matmul(mats[j], mats[i]))
                    c = matmul(mats[j], matmul(mats[i], mats[i]))
                    out.append((f"Serre {name}{i}{name}{j}", is_zero_matrix(matadd(matadd(a, c), b, -2))))
                elif abs(i - j) > 1:
                    s = matadd(matmul(mats[i], mats[j]), matmul(mats[j], mats[i]), -1)
                    out.append((f"commute {name}{i}{name}{j}", is_zero_matrix(s)))
            P = mats[i]
            for _ in range(n):
                P = matmul(mats[i], P)
            out.append((f"{name}{i}^{n + 1} = 0", is_zero_matrix(P)))
    return out


def iso_to_tensor(n, k):
    """Compare the class operators with V^{(x)n} at q = 1 under a -> v_{a_1} (x) ... (x) v_{a_n}.

    Returns a list of (name, holds).
    """
    A = CategAction(n, k)
    V = specialize_q1(tensor_power(vector_rep(k), n))
    out = [("basis labels agree", V.labels == A.labels)]
    for i in range(1, k):
        out.append((f"f{i} intertwines", V.F[i] == A.F[i]))
        out.append((f"e{i} intertwines", V.E[i] == A.E[i]))
    char_classes = Counter(phi(a, k) for a in A.labels)
    out.append(("characters agree", Counter(V.weights) == char_classes))
    return out


def block_discipline(n, k):
    """Violations of the block and weight rules for op_F_i and op_E_i over I^n."""
    bad = []
    for a in labels(n, k):
        d, m = dominant_rep(a), phi(a, k)
        total = FormalClassVector()
        for i in range(1, k):
            f = op_F_i(a, i, k)
            total = total + f
            for b in f:
                if dominant_rep(b) != plus_i(d, i) or phi(b, k) != wsub(m, alpha(i, k)):
                    bad.append(("F", a, i, b))
            for b in op_E_i(a, i, k):
                if dominant_rep(b) != minus_i(d, i) or wsub(phi(b, k), alpha(i, k)) != m:
                    bad.append(("E", a, i, b))
        if total != op_F(a, k):
            bad.append(("sum", a, None, None))
    return bad


def graded_shifts(a, i):
    c_i, c_next = count_c(a, i), count_c(a, i + 1)
    return {"K_exp": c_i - c_next, "adj_shift": c_i - c_next + 1}


def composed_shift(d, i):
    """Shift from composing the two translation functors around (+i)d.

    Equals c_{d,i} - c_{(+i)d,i+1}; returns None when (+i)d does not exist.
    """
    d2 = plus_i(dominant_rep(d), i)
    if not d2:
        return None
    return count_c(d, i) - count_c(d2, i + 1)


# -- Levi splitting --------------------------------------------------------

def tpc3_split(b, levi, i, k, op="F"):
    """Summands of op_F_i(b) (or op_E_i) grouped by the Levi block of the moved position."""
    b = tuple(b)
    levi = tuple(levi)
    if sum(levi) != len(b):
        raise ValueError(f"composition {levi} does not sum to {len(b)}")
    where = block_index(levi)
    groups = [FormalClassVector() for _ in levi]
    src, step = (i, 1) if op == "F" else (i + 1, -1)
    for l, x in enumerate(b):
        y = x + step
        if x == src and 1 <= y <= k:
            c = b[:l] + (y,) + b[l + 1:]
            g = groups[where[l]]
            g[c] = g.get(c, 0) + 1
    return groups


def factor_raise(b, levi, j, i, k, op="F"):
    """Apply op_F_i (or op_E_i) to the j-th block of b only and splice back."""
    blk = levi_blocks(levi)[j]
    head, mid, tail = b[:blk.start], b[blk.start:blk.stop], b[blk.stop:]
    f = op_F_i(mid, i, k) if op == "F" else op_E_i(mid, i, k)
    return FormalClassVector({head + c + tail: v for c, v in f.items()})


# -- parabolic spans --------------------------------------------------------

def column_heights(lam):
    if is_multipartition(lam):
        return tuple(h for p in as_multipartition(lam) for h in p)
    return as_partition(lam)


def _column_perms(heights):
    """All (sign, permutation of positions) in the product of column symmetric groups."""
    blocks = levi_blocks(heights)
    per = []
    for blk in blocks:
        items = []
        for s in permutations(range(len(blk))):
            inv = sum(1 for x in range(len(s)) for y in range(x + 1, len(s)) if s[x] > s[y])
            items.append((-1 if inv % 2 else 1, [blk.start + t for t in s]))
        per.append(items)
    out = []
    for combo in product(*per):
        sign = 1
        perm = []
        for sg, p in combo:
            sign *= sg
            perm.extend(p)
        out.append((sign, tuple(perm)))
    return out


def parabolic_class(a, heights, perms=None):
    """A(a) = sum over the column groups of sgn(w) M(w.a)."""
    if perms is None:
        perms = _column_perms(heights)
    out = FormalClassVector()
    for sign, p in perms:
        b = tuple(a[x] for x in p)
        s = out.get(b, 0) + sign
        if s:
            out[b] = s
        else:
            out.pop(b, None)
    return out


def _column_strict_labels(heights, k):
    """Labels whose columns strictly decrease, lexicographic."""
    out = []
    for a in product(range(1, k + 1), repeat=sum(heights)):
        pos, ok = 0, True
        for h in heights:
            col = a[pos:pos + h]
            if any(x <= y for x, y in zip(col, col[1:])):
                ok = False
                break
            pos += h
        if ok:
            out.append(a)
    return out


class ParabolicSpan:
    """Span of the classes A(a), a column strict, with the induced action.

    ``check`` records whether every raw [F_i] A(a), [E_i] A(a) is again an
    antisymmetric combination, i.e. the span is invariant.
    """

    def __init__(self, lam, k):
        self.lam = lam
        self.k = k
        self.heights = column_heights(lam)
        self.labels = _column_strict_labels(self.heights, k)
        self.index = {a: m for m, a in enumerate(self.labels)}
        self.weights = [phi(a, k) for a in self.labels]
        perms = _column_perms(self.heights)
        self.invariant = True
        self.F, self.E = {}, {}
        classes = {a: parabolic_class(a, self.heights, perms) for a in self.labels}
        for i in range(1, k):
            for op, mats in (("F", self.F), ("E", self.E)):
                cols = []
                for a in self.labels:
                    raw = FormalClassVector()
                    for b, c in classes[a].items():
                        step = op_F_i(b, i, k) if op == "F" else op_E_i(b, i, k)
                        raw = raw + step.scaled(c)
                    col = {self.index[b]: c for b, c in raw.items() if b in self.index}
                    rebuilt = FormalClassVector()
                    for m, c in col.items():
                        rebuilt = rebuilt + classes[self.labels[m]].scaled(c)
                    if rebuilt != raw:
                        self.invariant = False
                    cols.append(col)
                mats[i] = cols

    @property
    def dim(self):
        return len(self.labels)

    def act(self, op, i, vec):
        return apply(self.F[i] if op == "F" else self.E[i], vec)


def _semistandard_filter(lam):
    if is_multipartition(lam):
        lam = as_multipartition(lam)
        return lambda a: is_semistandard(fill_multitableau(lam, a))
    lam = as_partition(lam)
    return lambda a: is_semistandard(fill_tableau(lam, a))


def _closure(span, seeds, ops=("F", "E")):
    """Breadth-first closure of integer vectors inside a ParabolicSpan."""
    spans, vectors = {}, []
    queue = []

    def offer(vec):
        if not vec:
            return
        w = span.weights[next(iter(vec))]
        s = spans.setdefault(w, LaurentSpan())
        if s.add(vec):
            vectors.append({m: int(c.eval_q1()) for m, c in s.rows[-1][1].items()})
            queue.append(vectors[-1])

    for s in seeds:
        offer(s)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for op in ops:
            for i in range(1, span.k):
                offer(span.act(op, i, v))
    return vectors


def _in_span(vectors, vec):
    s = LaurentSpan()
    for v in vectors:
        s.add(v)
    return s.contains(vec)


class PrinjectiveSpan:
    """The span modelling the prinjective truncation for a (multi)partition.

    For a partition it is the F-closure of A(a^high) in the parabolic span.
    For a multipartition it is the tensor product of the per-component
    closures.  The action is transported to semistandard labels through the
    coordinate projection, which is checked to be an isomorphism.
    """

    def __init__(self, lam, k):
        self.lam, self.k = lam, k
        self.parabolic = ParabolicSpan(lam, k)
        P = self.parabolic
        comps = as_multipartition(lam) if is_multipartition(lam) else (as_partition(lam),)
        factors = []
        for comp in comps:
            sub = ParabolicSpan(comp, k)
            seed = {sub.index[high_label(comp)]: 1}
            factors.append((sub, _closure(sub, [seed], ops=("F",))))
        self.vectors = _tensor_vectors(factors, P)
        self.weights = [P.weights[next(iter(v))] for v in self.vectors]
        ss = _semistandard_filter(lam)
        self.ss_labels = [a for a in P.labels if ss(a)]
        self.ss_index = [P.index[a] for a in self.ss_labels]

    @property
    def dim(self):
        return len(self.vectors)

    def stable(self, op):
        P = self.parabolic
        s = LaurentSpan()
        for v in self.vectors:
            s.add(v)
        return all(s.contains(P.act(op, i, v)) for v in self.vectors for i in range(1, self.k))

    def projection_matrix(self):
        """Rows: semistandard labels; columns: span basis vectors."""
        return [[v.get(m, 0) for v in self.vectors] for m in self.ss_index]

    def projection_is_iso(self):
        M = self.projection_matrix()
        return len(M) == self.dim and (self.dim == 0 or rank(M) == self.dim)

    def transported(self):
        """The action moved to semistandard labels: pi X pi^{-1}, over Fractions."""
        P = self.parabolic
        M = [[Fraction(x) for x in row] for row in self.projection_matrix()]
        inv = _invert(M)
        n = self.dim
        pre = [{c: inv[c][s] for c in range(n) if inv[c][s]} for s in range(n)]

        def lift(s):
            out = {}
            for c, x in pre[s].items():
                for m, y in self.vectors[c].items():
                    out[m] = out.get(m, 0) + x * y
            return {m: x for m, x in out.items() if x}

        lifts = [lift(s) for s in range(n)]
        pos = {m: s for s, m in enumerate(self.ss_index)}
        F, E = {}, {}
        for i in range(1, self.k):
            for op, mats in (("F", F), ("E", E)):
                cols = []
                for s in range(n):
                    img = P.act(op, i, lifts[s])
                    cols.append({pos[m]: _intify(x) for m, x in img.items() if m in pos and x})
                mats[i] = cols
        return QModule(self.k, self.ss_labels, [P.weights[m] for m in self.ss_index], E, F)

    def naive_projection(self):
        """The parabolic action cut down to semistandard coordinates (no transport)."""
        P = self.parabolic
        pos = {m: s for s, m in enumerate(self.ss_index)}
        F, E = {}, {}
        for i in range(1, self.k):
            F[i] = [{pos[r]: x for r, x in P.F[i][m].items() if r in pos} for m in self.ss_index]
            E[i] = [{pos[r]: x for r, x in P.E[i][m].items() if r in pos} for m in self.ss_index]
        return QModule(self.k, self.ss_labels, [P.weights[m] for m in self.ss_index], E, F)


def _tensor_vectors(factors, P):
    """Products of per-component closure vectors, as vectors on the parabolic labels."""
    result = [{(): 1}]
    for sub, basis in factors:
        nxt = []
        for v in result:
            for u in basis:
                w = {}
                for a, x in v.items():
                    for m, y in u.items():
                        w[a + sub.labels[m]] = x * y
                nxt.append(w)
        result = nxt
    return [{P.index[a]: x for a, x in v.items()} for v in result]


def _intify(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _invert(M):
    n = len(M)
    A = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c])
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]
