"""Truncated formal power series in X over Laurent coefficients, and the
set-function calculus they carry.

For a formal shift multiset A = {a_1, ..., a_k} the sequence A(n) is the
complete homogeneous symmetric polynomial h_n of the monomials y_{a_i},
which is the local divisor sum tau_A(p^n) with X = 1/p suppressed.  The
generating objects are

    C(A, B)        = sum_M A(M) B(M) X^M
    F(a, A; b, B)  = sum_{K,L,M} a(K) A(K+M) b(L) B(L+M) X^{K+L+M}
    Z(A)           = sum_j A(j) X^j = prod_a (1 - X^{1+a})^{-1}

all truncated at a caller-chosen degree; only integer parts of exponents
count toward the X-degree, symbol parts live in the Laurent coefficients.
"""

from ..errors import DomainError
from .laurent import ONE, ZERO, LaurentPoly, ypart_str, ypow


class FormalSeries:
    """coefficients[n] is the Laurent coefficient of X^n, n <= trunc."""

    __slots__ = ("trunc", "coeff")

    def __init__(self, trunc, coeff=None):
        self.trunc = int(trunc)
        if self.trunc < 0:
            raise DomainError("FormalSeries needs trunc >= 0")
        self.coeff = {}
        for n, p in (coeff or {}).items():
            if 0 <= n <= self.trunc and p:
                self.coeff[int(n)] = p

    @classmethod
    def one(cls, trunc):
        return cls(trunc, {0: ONE})

    def at(self, n):
        return self.coeff.get(n, ZERO)

    def add_term(self, n, poly):
        """Accumulate poly * X^n in place; silently drops n > trunc."""
        if 0 <= n <= self.trunc and poly:
            cur = self.coeff.get(n)
            self.coeff[n] = poly if cur is None else cur + poly

    def __add__(self, other):
        out = FormalSeries(min(self.trunc, other.trunc))
        for n in range(out.trunc + 1):
            p = self.at(n) + other.at(n)
            if p:
                out.coeff[n] = p
        return out

    def __sub__(self, other):
        return self + other.scaled(coeff=-1)

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            out = FormalSeries(min(self.trunc, other.trunc))
            for i, pi in self.coeff.items():
                for j, pj in other.coeff.items():
                    if i + j <= out.trunc:
                        out.add_term(i + j, pi * pj)
            return out
        return self.scaled(coeff=other)

    def scaled(self, xdeg=0, ypart=(), coeff=1):
        """self times coeff * X^xdeg * (monomial ypart).

        A positive xdeg widens the truncation: exactness to degree trunc
        shifts to trunc + xdeg.
        """
        out = FormalSeries(self.trunc + max(xdeg, 0))
        for n, p in self.coeff.items():
            out.add_term(n + xdeg, p.scaled(ypart, coeff))
        return out

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        if self.trunc != other.trunc:
            return False
        return self.first_mismatch(other) is None

    __hash__ = None

    def first_mismatch(self, other):
        """The lowest-degree differing monomial, or None if equal.

        Returns {degree, monomial, lhs, rhs} with string renderings of
        the two coefficients.
        """
        for n in range(min(self.trunc, other.trunc) + 1):
            a, b = self.at(n), other.at(n)
            if a == b:
                continue
            for yp in sorted(set(a.terms) | set(b.terms)):
                ca = a.terms.get(yp, 0)
                cb = b.terms.get(yp, 0)
                if ca != cb:
                    return {"degree": n, "monomial": ypart_str(yp),
                            "lhs": str(ca), "rhs": str(cb)}
        return None

    def __repr__(self):
        bits = [f"({self.at(n)!r})*X^{n}"
                for n in sorted(self.coeff)]
        return " + ".join(bits) if bits else "0"


class SeqFun:
    """Memoized integer-indexed sequence of Laurent polynomials.

    Negative indices evaluate to 0, matching A+(-1) = 0 in the
    recurrences.  ``size`` records the multiset size when known (for
    certificates); None otherwise.
    """

    __slots__ = ("_eval", "_memo", "size")

    def __init__(self, evaluator, size=None):
        self._eval = evaluator
        self._memo = {}
        self.size = size

    def at(self, n):
        if n < 0:
            return ZERO
        got = self._memo.get(n)
        if got is None:
            got = self._memo[n] = self._eval(n)
        return got


def as_fun(x):
    """SeqFun passthrough; anything else is taken as a shift multiset."""
    if isinstance(x, SeqFun):
        return x
    return set_fun(x)


def set_fun(elements):
    """The h_n evaluator of a formal shift multiset.

    Uses the Newton-style recurrence h_n = sum_j (-1)^(j+1) e_j h_(n-j)
    against the elementary symmetric polynomials e_j of the element
    monomials; the empty set gives A(n) = [n == 0].
    """
    elements = tuple(tuple(yp) for yp in elements)
    k = len(elements)
    es = [ONE] + [ZERO] * k
    for yp in elements:
        m = LaurentPoly.monomial(yp)
        for j in range(k, 0, -1):
            es[j] = es[j] + m * es[j - 1]
    memo = [ONE]

    def at(n):
        while len(memo) <= n:
            t = len(memo)
            acc = ZERO
            for j in range(1, min(t, k) + 1):
                term = es[j] * memo[t - j]
                acc = acc + (term if j % 2 else -term)
            memo.append(acc)
        return memo[n]

    return SeqFun(at, size=k)


def shift_fun(fun, ypart):
    """The shifted sequence A_alpha(n) = y_alpha^n * A(n)."""
    fun = as_fun(fun)
    return SeqFun(lambda n: fun.at(n).scaled(ypow(ypart, n)),
                  size=fun.size)


def plus_fun(fun):
    """The A+ operator (adjoin shift 0): A+(d) = sum_{r<=d} A(r)."""
    fun = as_fun(fun)
    memo = []

    def at(d):
        while len(memo) <= d:
            prev = memo[-1] if memo else ZERO
            memo.append(prev + fun.at(len(memo)))
        return memo[d]

    return SeqFun(at, size=None if fun.size is None else fun.size + 1)


def star(a, b):
    """Cauchy convolution (a*b)(m) = sum_{i+j=m} a(i) b(j)."""
    a = as_fun(a)
    b = as_fun(b)

    def at(m):
        acc = ZERO
        for i in range(m + 1):
            acc = acc + a.at(i) * b.at(m - i)
        return acc

    size = None
    if a.size is not None and b.size is not None:
        size = a.size + b.size
    return SeqFun(at, size=size)


def c_op(a, b, N):
    """C(A, B) = sum_{M<=N} A(M) B(M) X^M."""
    a = as_fun(a)
    b = as_fun(b)
    out = FormalSeries(N)
    for m in range(N + 1):
        out.add_term(m, a.at(m) * b.at(m))
    return out


def f_op(a, A, b, B, N):
    """F(a, A; b, B) = sum_{K+L+M<=N} a(K) A(K+M) b(L) B(L+M) X^{K+L+M}."""
    a, A, b, B = as_fun(a), as_fun(A), as_fun(b), as_fun(B)
    out = FormalSeries(N)
    for k in range(N + 1):
        ak = a.at(k)
        if not ak:
            continue
        for m in range(N + 1 - k):
            left = ak * A.at(k + m)
            if not left:
                continue
            for l in range(N + 1 - k - m):
                right = b.at(l) * B.at(l + m)
                if right:
                    out.add_term(k + l + m, left * right)
    return out


def z_op(A, N, form="sum"):
    """Z(A) as a series: the coefficient sum or the Euler product.

    The two forms agree identically; the product form needs the multiset
    itself (each element contributes a geometric factor in X^{1+a}).
    """
    if form == "sum":
        fun = as_fun(A)
        out = FormalSeries(N)
        for j in range(N + 1):
            out.add_term(j, fun.at(j))
        return out
    if form != "product":
        raise DomainError(f"unknown z_op form {form!r}")
    if isinstance(A, SeqFun):
        raise DomainError("z_op product form needs the multiset, "
                          "not a SeqFun")
    out = FormalSeries.one(N)
    for yp in A:
        geo = FormalSeries(N, {j: LaurentPoly.monomial(ypow(tuple(yp), j))
                               for j in range(N + 1)})
        out = out * geo
    return out
