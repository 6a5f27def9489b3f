"""Partitions and tableaux in the transposed drawing convention.

A partition lists column heights.  A tableau stores each column bottom to
top, in the order the boxes are filled, and the displayed rows are aligned
at the top of the diagram.  "Increasing along a column" means increasing
from the top of the displayed column downwards, so a stored column strictly
decreases.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product


def as_partition(parts):
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must weakly decrease: {parts}")
    return parts


def is_multipartition(lam):
    return bool(lam) and all(isinstance(p, (tuple, list)) for p in lam)


def as_multipartition(lam):
    return tuple(as_partition(p) for p in lam)


def size(lam):
    if is_multipartition(lam):
        return sum(sum(p) for p in lam)
    return sum(lam)


def partitions(n, max_part=None):
    """Partitions of n with parts at most max_part, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def multipartitions(n, m, max_part=None):
    """Multipartitions of n with m components (components may be empty)."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for p in partitions(first, max_part):
            for rest in multipartitions(n - first, m - 1, max_part):
                yield (p,) + rest


def transpose(lam):
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partition_from_slk_weight(c):
    """Partition attached to the dominant weight sum c_r * varpi_r.

    The transpose has parts c_j + ... + c_{k-1}, i.e. c_r counts the columns
    of height r.
    """
    c = [int(x) for x in c]
    if any(x < 0 for x in c):
        raise ValueError("fundamental weight coefficients must be nonnegative")
    parts = []
    for r in range(len(c), 0, -1):
        parts.extend([r] * c[r - 1])
    return tuple(parts)


def slk_weight_from_partition(lam, k):
    lam = as_partition(lam)
    if lam and lam[0] > k - 1:
        raise ValueError(f"parts of {lam} exceed k-1 = {k - 1}")
    return tuple(lam.count(r) for r in range(1, k))


@dataclass(frozen=True)
class Tableau:
    shape: tuple
    columns: tuple

    def __post_init__(self):
        shape = as_partition(self.shape)
        cols = tuple(tuple(int(x) for x in col) for col in self.columns)
        if tuple(len(col) for col in cols) != shape:
            raise ValueError(f"column lengths {[len(c) for c in cols]} do not match shape {shape}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "columns", cols)

    def rows(self):
        """Displayed rows, top first, aligned at the top of the diagram."""
        height = self.shape[0] if self.shape else 0
        return [[col[-1 - r] for col in self.columns if len(col) > r] for r in range(height)]

    def to_json(self):
        return {"shape": list(self.shape), "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["shape"]), tuple(tuple(c) for c in obj["columns"]))

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows())


@dataclass(frozen=True)
class Multitableau:
    shape: tuple
    tableaux: tuple

    def __post_init__(self):
        if tuple(t.shape for t in self.tableaux) != tuple(as_partition(p) for p in self.shape):
            raise ValueError("component shapes do not match")

    def to_json(self):
        return {"shape": [list(p) for p in self.shape], "tableaux": [t.to_json() for t in self.tableaux]}


def fill_tableau(lam, a):
    """T^lam(a): fill each column bottom to top, columns left to right."""
    lam = as_partition(lam)
    a = tuple(a)
    if sum(lam) != len(a):
        raise ValueError(f"|lambda| = {sum(lam)} but the sequence has length {len(a)}")
    cols, pos = [], 0
    for h in lam:
        cols.append(a[pos:pos + h])
        pos += h
    return Tableau(lam, tuple(cols))


def fill_multitableau(lam, a):
    lam = as_multipartition(lam)
    a = tuple(a)
    if size(lam) != len(a):
        raise ValueError("sequence length does not match the multipartition")
    out, pos = [], 0
    for p in lam:
        out.append(fill_tableau(p, a[pos:pos + sum(p)]))
        pos += sum(p)
    return Multitableau(lam, tuple(out))


def reading_word(T):
    if isinstance(T, Multitableau):
        return tuple(x for t in T.tableaux for x in reading_word(t))
    return tuple(x for col in T.columns for x in col)


def _parts(T):
    return T.tableaux if isinstance(T, Multitableau) else (T,)


def is_column_strict(T):
    return all(col[i] > col[i + 1] for t in _parts(T) for col in t.columns for i in range(len(col) - 1))


def _rows_ok(T, strict):
    for t in _parts(T):
        for row in t.rows():
            for x, y in zip(row, row[1:]):
                if x > y or (strict and x == y):
                    return False
    return True


def is_semistandard(T):
    return is_column_strict(T) and _rows_ok(T, strict=False)


def is_standard(T):
    return is_column_strict(T) and _rows_ok(T, strict=True)


def high_tableau(lam):
    """The column-strict tableau whose column of height h reads h, ..., 1."""
    if is_multipartition(lam):
        lam = as_multipartition(lam)
        return Multitableau(lam, tuple(high_tableau(p) for p in lam))
    lam = as_partition(lam)
    return Tableau(lam, tuple(tuple(range(h, 0, -1)) for h in lam))


def high_label(lam):
    return reading_word(high_tableau(lam))


def _semistandard_single(lam, k):
    lam = as_partition(lam)
    out = []

    def extend(cols):
        c = len(cols)
        if c == len(lam):
            out.append(Tableau(lam, tuple(cols)))
            return
        for subset in combinations(range(k, 0, -1), lam[c]):
            # subset is strictly decreasing; check displayed rows against the previous column
            if cols:
                prev = cols[-1]
                if any(prev[-1 - r] > subset[-1 - r] for r in range(len(subset))):
                    continue
            extend(cols + [subset])

    extend([])
    out.sort(key=reading_word)
    return out


def enumerate_semistandard(lam, k):
    """All semistandard tableaux (or multitableaux) with entries in 1..k, by reading word."""
    if is_multipartition(lam):
        lam = as_multipartition(lam)
        per = [_semistandard_single(p, k) for p in lam]
        return [Multitableau(lam, combo) for combo in product(*per)]
    return _semistandard_single(lam, k)


def enumerate_column_strict(lam, k):
    """All column-strict fillings with entries in 1..k (no row condition), by reading word."""
    if is_multipartition(lam):
        lam = as_multipartition(lam)
        per = [enumerate_column_strict(p, k) for p in lam]
        return [Multitableau(lam, combo) for combo in product(*per)]
    lam = as_partition(lam)
    per = [list(combinations(range(k, 0, -1), h)) for h in lam]
    out = [Tableau(lam, cols) for cols in product(*per)]
    out.sort(key=reading_word)
    return out


def distinct_permutations(d):
    return sorted(set(permutations(d)))


def enumerate_semistandard_of_type(lam, d):
    """St^lam(d): the semistandard T^lam(a) with a a rearrangement of d."""
    filler = fill_multitableau if is_multipartition(lam) else fill_tableau
    if size(lam) != len(d):
        raise ValueError("|lambda| does not match the length of d")
    out = [filler(lam, a) for a in distinct_permutations(tuple(d))]
    return [t for t in out if is_semistandard(t)]


# -- Robinson-Schensted ------------------------------------------------------

def _classical_to_columns(rows):
    # classical (English, row-major) tableau -> this module's column storage
    if not rows:
        return Tableau((), ())
    ncols = len(rows[0])
    cols = [[row[c] for row in rows if len(row) > c] for c in range(ncols)]
    return Tableau(tuple(len(c) for c in cols), tuple(tuple(reversed(c)) for c in cols))


def rs_insert(w):
    """Robinson-Schensted row insertion; returns (insertion, recording) tableaux."""
    w = tuple(w)
    if len(set(w)) != len(w):
        raise ValueError("Robinson-Schensted needs distinct entries")
    P, Q = [], []
    for step, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            j = next((i for i, y in enumerate(row) if y > x), None)
            if j is None:
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return _classical_to_columns(P), _classical_to_columns(Q)


def act(w, d):
    """Permutation action on sequences, (w.d)_i = d_{w^{-1}(i)} (w is 0-based one-line)."""
    out = [None] * len(d)
    for i, wi in enumerate(w):
        out[wi] = d[i]
    return tuple(out)


def inverse_perm(w):
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi] = i
    return tuple(out)


def longest_min_coset_rep(lam):
    """Longest w with w^{-1}(i) < w^{-1}(i+1) whenever i, i+1 share a column block.

    These are the shortest representatives of the cosets S_lam w, where S_lam
    permutes positions inside each column; S_lam w . d differ from w . d by
    reordering entries inside columns.
    """
    lam = as_partition(lam)
    n = sum(lam)
    # w^{-1} hands the smallest values to the last block
    winv = [0] * n
    start, nxt = n, 0
    for h in reversed(lam):
        start -= h
        for i in range(start, start + h):
            winv[i] = nxt
            nxt += 1
    return inverse_perm(winv)


def recording_criterion(lam, d):
    """Check, over all of S_n, that T^lam(w.d) is standard iff Q(w.d) = Q(w_lam.d).

    ``d`` must be strictly decreasing.  Returns the list of permutations
    where the two sides disagree (empty when the criterion holds).
    """
    lam = as_partition(lam)
    d = tuple(d)
    if any(x <= y for x, y in zip(d, d[1:])):
        raise ValueError("d must be strictly decreasing")
    ref = rs_insert(act(longest_min_coset_rep(lam), d))[1]
    bad = []
    for w in permutations(range(len(d))):
        a = act(w, d)
        if is_standard(fill_tableau(lam, a)) != (rs_insert(a)[1] == ref):
            bad.append(w)
    return bad


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
