"""Exact scalars: integer Laurent polynomials in q and their fraction field.

Everything here is immutable.  ``LaurentInt`` keeps a canonical sparse map
exponent -> coefficient with no zero entries, so ``==`` is structural.
``RatFunc`` is reduced by a full polynomial gcd, which makes structural
equality decide mathematical equality as well.
"""

from math import gcd
from numbers import Integral


class NoSolution(ArithmeticError):
    """Raised by :func:`ratfunc_solve` for an inconsistent system."""


class LaurentInt:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, Integral):
            terms = {0: int(terms)} if terms else {}
        elif isinstance(terms, LaurentInt):
            terms = terms._terms
        else:
            terms = {int(e): int(c) for e, c in dict(terms).items() if c}
        self._terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # terms already canonical; skips the copy
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff=1, exp=0):
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection ----------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def low_degree(self):
        if not self._terms:
            raise ValueError("zero has no degree")
        return min(self._terms)

    def degree(self):
        if not self._terms:
            raise ValueError("zero has no degree")
        return max(self._terms)

    def coeff(self, exp):
        return self._terms.get(exp, 0)

    def content(self):
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def leading_coeff(self):
        return self._terms[self.degree()]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Integral):
            other = LaurentInt(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Integral):
            other = LaurentInt(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Integral):
            if not other:
                return ZERO
            return LaurentInt._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return LaurentInt._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) == 1:
            ((ea, ca),) = a.items()
            return LaurentInt._raw({e + ea: c * ca for e, c in b.items()})
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentInt._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial() or abs(self.leading_coeff()) != 1:
                raise ValueError("only unit monomials have negative powers")
            ((e, c),) = self._terms.items()
            return LaurentInt._raw({e * n: c ** (-n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by q**k."""
        if not k:
            return self
        return LaurentInt._raw({e + k: c for e, c in self._terms.items()})

    def bar(self):
        """The involution q -> q^{-1}."""
        return LaurentInt._raw({-e: c for e, c in self._terms.items()})

    def divexact(self, other):
        """Exact quotient ``self / other``; raises ArithmeticError if inexact."""
        if isinstance(other, Integral):
            other = LaurentInt(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return ZERO
        lo_a, lo_b = self.low_degree(), other.low_degree()
        qa, qb = _to_poly(self, lo_a), _to_poly(other, lo_b)
        quot, rem = _poly_divmod_exact(qa, qb)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return _from_poly(quot, lo_a - lo_b)

    def eval_q1(self):
        return sum(self._terms.values())

    def evaluate(self, value):
        """Evaluate at a (nonzero) number; exact for Fractions."""
        return sum(c * value ** e for e, c in self._terms.items())

    # -- protocol ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentInt):
            return self._terms == other._terms
        if isinstance(other, Integral):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    def to_json(self):
        return {str(e): c for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): int(c) for e, c in obj.items()})


ZERO = LaurentInt()
ONE = LaurentInt(1)
q = LaurentInt({1: 1})


def laurent_add(a, b):
    return LaurentInt(a) + LaurentInt(b)


def laurent_mul(a, b):
    return LaurentInt(a) * LaurentInt(b)


def eval_q1(a):
    """Substitute q = 1."""
    if isinstance(a, Integral):
        return int(a)
    return a.eval_q1()


def qint(m):
    """The quantum integer [m] = (q^m - q^-m) / (q - q^-1) as a Laurent polynomial."""
    if m == 0:
        return ZERO
    sign = 1 if m > 0 else -1
    m = abs(m)
    return LaurentInt._raw({e: sign for e in range(-(m - 1), m, 2)})


# -- dense integer polynomials (low degree first) ------------------------

def _to_poly(a, lo):
    deg = a.degree()
    return [a._terms.get(e, 0) for e in range(lo, deg + 1)]


def _from_poly(coeffs, lo=0):
    return LaurentInt._raw({i + lo: c for i, c in enumerate(coeffs) if c})


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _poly_primitive(p):
    g = _poly_content(p)
    if g == 0:
        return []
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _poly_divmod_exact(a, b):
    """Divide over Z; returns (quotient, nonzero-remainder flag)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    quot = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db]
        if c == 0:
            continue
        if c % lb:
            return quot, True
        t = c // lb
        quot[i] = t
        for j, bj in enumerate(b):
            a[i + j] -= t * bj
    return _trim(quot), any(a)


def _poly_prem(a, b):
    """Pseudo-remainder of a by b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _trim(a)
    return a


def _poly_gcd(a, b):
    if not a or not b:
        p = a or b
        return [c * _poly_content(p) for c in _poly_primitive(p)]
    c = gcd(_poly_content(a), _poly_content(b))
    a, b = _poly_primitive(a), _poly_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _poly_prem(a, b)
        a, b = b, _poly_primitive(r)
    return [c * x for x in _poly_primitive(a)]


class RatFunc:
    """Element of Q(q) stored as a reduced pair of Laurent polynomials.

    Canonical form: the denominator is an honest polynomial with nonzero
    constant term and positive leading coefficient, and numerator and
    denominator share no common factor (integer content included).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_laurent(num)
        den = _as_laurent(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        lo_n, lo_d = num.low_degree(), den.low_degree()
        pn, pd = _to_poly(num, lo_n), _to_poly(den, lo_d)
        if len(pd) == 1:
            g = gcd(_poly_content(pn), pd[0])
        else:
            g = None
        if g is not None:
            if pd[0] < 0:
                g = -g
            pn = [c // g for c in pn]
            pd = [pd[0] // g]
        else:
            h = _poly_gcd(pn, pd)
            if h[-1] < 0:
                h = [-c for c in h]
            pn, _ = _poly_divmod_exact(pn, h)
            pd, _ = _poly_divmod_exact(pd, h)
            if pd[-1] < 0:
                pn = [-c for c in pn]
                pd = [-c for c in pd]
        self.num = _from_poly(pn, lo_n - lo_d)
        self.den = _from_poly(pd, 0)

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self):
        return self.den.is_monomial()

    def to_laurent(self):
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num.divexact(self.den)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def eval_q1(self):
        d = self.den.eval_q1()
        if d == 0:
            raise ZeroDivisionError("pole at q = 1")
        from fractions import Fraction
        return Fraction(self.num.eval_q1(), d)

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == ONE:
            return repr(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(LaurentInt.from_json(obj["num"]), LaurentInt.from_json(obj["den"]))


def _as_laurent(x):
    if isinstance(x, LaurentInt):
        return x
    if isinstance(x, Integral):
        return LaurentInt(x)
    raise TypeError(f"cannot convert {type(x).__name__} to LaurentInt")


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (LaurentInt, Integral)):
        return RatFunc(x)
    return NotImplemented


def scalar_to_json(x):
    if isinstance(x, RatFunc):
        if x.den == ONE:
            return x.num.to_json()
        return x.to_json()
    return _as_laurent(x).to_json()


def scalar_from_json(obj):
    if "num" in obj:
        return RatFunc.from_json(obj)
    return LaurentInt.from_json(obj)


# -- linear algebra over Q(q) --------------------------------------------

def _rref(matrix, ncols):
    """Reduced row echelon form with leftmost-column, first-nonzero-row pivots."""
    rows = [[_as_ratfunc(x) for x in row] for row in matrix]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def ratfunc_solve(system, rhs):
    """Solve ``system @ x = rhs`` exactly; free variables are set to zero."""
    ncols = len(system[0]) if system else 0
    if len(rhs) != len(system):
        raise ValueError("rhs length does not match the number of rows")
    aug = [list(row) + [b] for row, b in zip(system, rhs)]
    rows, pivots = _rref(aug, ncols + 1)
    if ncols in pivots:
        raise NoSolution("inconsistent linear system")
    x = [RatFunc(0)] * ncols
    for row, col in zip(rows, pivots):
        x[col] = row[ncols]
    return x


def kernel_basis(system, ncols=None):
    """Basis of the nullspace, one vector per free column (left to right)."""
    if ncols is None:
        ncols = len(system[0]) if system else 0
    rows, pivots = _rref(system, ncols) if system else ([], [])
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [RatFunc(0)] * ncols
        v[free] = RatFunc(1)
        for row, col in zip(rows, pivots):
            if row[free]:
                v[col] = -row[free]
        basis.append(v)
    return basis


def rank(system, ncols=None):
    if not system:
        return 0
    if ncols is None:
        ncols = len(system[0])
    return len(_rref(system, ncols)[1])


class LaurentSpan:
    """Incremental echelon basis of sparse vectors over Z[q, q^-1].

    Reduction is fraction free (cross multiplication), with each stored row
    made primitive: integer content and the common power of q are divided
    out.  Independence over Z[q, q^-1] is independence over Q(q), so the
    rank equals the dimension of the Q(q)-span.
    """

    def __init__(self):
        self.rows = []      # (pivot, vector) in insertion order

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        vec = {i: _as_laurent(c) for i, c in vec.items() if c}
        for piv, row in self.rows:
            c = vec.get(piv)
            if not c:
                continue
            a = row[piv]
            out = {}
            for i in vec.keys() | row.keys():
                x = vec.get(i, ZERO) * a - row.get(i, ZERO) * c
                if x:
                    out[i] = x
            vec = _primitive_vector(out)
        return vec

    def add(self, vec):
        """Insert ``vec``; returns True when it enlarged the span."""
        red = self.reduce(vec)
        if not red:
            return False
        red = _primitive_vector(red)
        piv = min(red)
        if red[piv].leading_coeff() < 0:
            red = {i: -c for i, c in red.items()}
        self.rows.append((piv, red))
        return True

    def contains(self, vec):
        return not self.reduce(vec)


def _primitive_vector(vec):
    if not vec:
        return vec
    g = 0
    lo = None
    for c in vec.values():
        c = _as_laurent(c)
        g = gcd(g, c.content())
        m = c.low_degree()
        lo = m if lo is None else min(lo, m)
    if g == 1 and lo == 0:
        return vec
    out = {}
    for i, c in vec.items():
        c = _as_laurent(c)
        out[i] = LaurentInt._raw({e - lo: v // g for e, v in c._terms.items()})
    return out


def primitive_part(vec):
    """Divide a sparse Laurent vector by the gcd of its entries in Z[q, q^-1].

    The result spans the same line; its leading entry (smallest key) has a
    positive leading coefficient.
    """
    vec = _primitive_vector({i: c for i, c in vec.items() if c})
    if not vec:
        return vec
    g = None
    for c in vec.values():
        p = _to_poly(c, c.low_degree())
        g = p if g is None else _poly_gcd(g, p)
        if len(g) == 1:
            break
    if len(g) > 1:
        vec = {i: _from_poly(_poly_divmod_exact(_to_poly(c, c.low_degree()), g)[0], c.low_degree())
               for i, c in vec.items()}
        vec = _primitive_vector(vec)
    if vec[min(vec)].leading_coeff() < 0:
        vec = {i: -c for i, c in vec.items()}
    return vec
