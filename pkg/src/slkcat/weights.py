"""Integer weights for gl_n and sl_k, the map phi, blocks and orders.

A gl_n weight is a tuple of integers.  An sl_k weight is stored as a count
vector (m_1, ..., m_k), the multiplicity of each delta_i; it is only
defined modulo (1, ..., 1), and every comparison here respects that.
"""

from dataclasses import dataclass
from itertools import permutations


class _Absent:
    """Marker for a block that does not exist (the functor lands in zero)."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __bool__(self):
        return False

    def __repr__(self):
        return "Absent"


Absent = _Absent()


def rho(n):
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(-i for i in range(n))


def is_dominant(a):
    """Strict decrease, the shifted dominance used for gl_n parameters."""
    return all(x > y for x, y in zip(a, a[1:]))


def is_weakly_decreasing(a):
    return all(x >= y for x, y in zip(a, a[1:]))


def dominant_rep(a):
    """The block label of the orbit: entries sorted weakly decreasing."""
    return tuple(sorted(a, reverse=True))


def in_range(a, k):
    return all(1 <= x <= k for x in a)


def phi(a, k):
    """Counts of each value 1..k among the entries of a."""
    m = [0] * k
    for x in a:
        if not 1 <= x <= k:
            raise ValueError(f"entry {x} outside 1..{k}")
        m[x - 1] += 1
    return tuple(m)


def pairing(m, i):
    """(mu, alpha_i) for a count vector mu."""
    return m[i - 1] - m[i]


def alpha(i, k):
    v = [0] * k
    v[i - 1], v[i] = 1, -1
    return tuple(v)


def varpi(i, k):
    return tuple([1] * i + [0] * (k - i))


def delta(j, k):
    v = [0] * k
    v[j - 1] = 1
    return tuple(v)


def wadd(m, n):
    return tuple(x + y for x, y in zip(m, n))


def wsub(m, n):
    return tuple(x - y for x, y in zip(m, n))


def cartan(i, j):
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def slk_equal(m, n):
    d = wsub(m, n)
    return all(x == d[0] for x in d)


def slk_geq(m, n):
    """mu >= nu for sl_k: mu - nu is a nonnegative sum of simple roots."""
    d = wsub(m, n)
    k = len(d)
    tot = sum(d)
    if tot % k:
        return False
    t = tot // k
    s = 0
    for x in d[:-1]:
        s += x - t
        if s < 0:
            return False
    return True


def _plus_minus(d, src, dst):
    d = tuple(d)
    if src not in d:
        return Absent
    j = d.index(src)
    return dominant_rep(d[:j] + (dst,) + d[j + 1:])


def plus_i(d, i):
    """(+i)d: one entry i becomes i+1, so phi drops by alpha_i."""
    return _plus_minus(d, i, i + 1)


def minus_i(d, i):
    return _plus_minus(d, i + 1, i)


def count_c(d, i):
    return sum(1 for x in d if x == i)


def casimir_eigenvalue(a, l):
    """(a, epsilon_l) = a_l, with l counted from 1."""
    if not 1 <= l <= len(a):
        raise IndexError(f"position {l} outside 1..{len(a)}")
    return a[l - 1]


def dominance_leq(a, b):
    if len(a) != len(b):
        raise ValueError("weights of different length")
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def inverse_dominance_leq(nu, nu2):
    """nu <= nu2: equal totals and every prefix sum of nu dominates that of nu2."""
    if len(nu) != len(nu2):
        raise ValueError("tuples of different length")
    if not nu:
        return True
    k = len(nu[0])
    zero = (0,) * k
    tot, tot2 = zero, zero
    pre = []
    for a, b in zip(nu, nu2):
        tot, tot2 = wadd(tot, a), wadd(tot2, b)
        pre.append((tot, tot2))
    if not slk_equal(tot, tot2):
        return False
    return all(slk_geq(a, b) for a, b in pre)


# -- Levi compositions and Xi ---------------------------------------------

def compositions(n):
    """All compositions of n into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def levi_blocks(levi):
    out, s = [], 0
    for n in levi:
        out.append(range(s, s + n))
        s += n
    return out


def block_index(levi):
    """For each position (0-based) the 0-based Levi block containing it."""
    return [j for j, n in enumerate(levi) for _ in range(n)]


def blockwise_sort(a, levi):
    if sum(levi) != len(a):
        raise ValueError(f"composition {tuple(levi)} does not sum to {len(a)}")
    a = tuple(a)
    return tuple(x for b in levi_blocks(levi) for x in sorted(a[b.start:b.stop], reverse=True))


def phi_blocks(a, levi, k):
    """(phi_1(a), ..., phi_m(a)), phi applied to each Levi block."""
    a = tuple(a)
    return tuple(phi(a[b.start:b.stop], k) for b in levi_blocks(levi))


def rho_twist(levi):
    """rho(gl_n) - rho(l) for the Levi of the composition."""
    n = sum(levi)
    inner = tuple(-(i - b.start) for b in levi_blocks(levi) for i in b)
    return wsub(rho(n), inner)


@dataclass(frozen=True)
class XiClass:
    representative: tuple
    levi: tuple

    def to_json(self):
        return list(self.representative)


class XiPoset:
    """Orbit W.d modulo the Levi subgroup, ordered by dominance of representatives."""

    def __init__(self, d, levi):
        d = tuple(d)
        levi = tuple(levi)
        if sum(levi) != len(d):
            raise ValueError(f"composition {levi} does not sum to {len(d)}")
        self.d, self.levi = d, levi
        reps = {blockwise_sort(a, levi) for a in set(permutations(d))}
        self.classes = [XiClass(r, levi) for r in sorted(reps, reverse=True)]
        self._index = {c.representative: i for i, c in enumerate(self.classes)}

    def __len__(self):
        return len(self.classes)

    def project(self, a):
        """p: an orbit element to its class."""
        rep = blockwise_sort(a, self.levi)
        if rep not in self._index:
            raise ValueError(f"{tuple(a)} is not in the orbit of {self.d}")
        return self.classes[self._index[rep]]

    def leq(self, x, y):
        return dominance_leq(x.representative, y.representative)

    def leq_pairs(self):
        return [[i, j] for i, x in enumerate(self.classes) for j, y in enumerate(self.classes)
                if self.leq(x, y)]

    def to_json(self):
        return {"classes": [c.to_json() for c in self.classes], "leq_pairs": self.leq_pairs()}


def xi_classes(d, levi):
    return XiPoset(d, levi)
