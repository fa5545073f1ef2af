"""The three exact identities behind the swap-term calculus, verified by
brute truncated-series expansion.

* lemma1: F(a,A;b,B) + F(A,a;B,b) = C(A*b, a*B) + C(a,A) C(b,B) for any
  four sequences (* is Cauchy convolution).
* semidiagonal: the local factor of the degenerate-pair term, summed over
  min(M,N) = 0 as S_L + S_R - S_0, collapses to
  (1 - X^{1-alpha-beta}) C(A1' u A2 u {-beta}, B1' u B2 u {-alpha}).
* theorem2: the two-swap analogue with four sets and four shifts,
  collapsing to (1 - X^{1-alpha-beta})(1 - X^{1-gamma-delta})
  C(A u C u {-beta,-delta}, B u D u {-alpha,-gamma}).

The left sides are built from the raw defining sums (q in {0,1} encodes
the mu(p^q) sign; all other index ranges follow from each term's integer
X-degree), not from any intermediate simplification, so equality checks
the whole derivation.  Everything is exact; a failed identity is
reported in the certificate, never raised.
"""

import json
import time
from dataclasses import asdict, dataclass

from ..errors import DomainError
from .laurent import neg, sym, ymul, ypow
from .series import FormalSeries, as_fun, c_op, f_op, set_fun, star


@dataclass(frozen=True)
class Certificate:
    """Outcome of one identity verification."""

    identity: str
    sizes: tuple
    degree: int
    equal: bool
    first_mismatch: dict
    wall_time: float

    def to_json(self):
        return json.dumps(asdict(self), indent=2, default=list)


def _certify(identity, sizes, degree, lhs, rhs, t0):
    mism = lhs.first_mismatch(rhs)
    return Certificate(identity, tuple(sizes), degree, mism is None, mism,
                       time.perf_counter() - t0)


def verify_lemma1(a, A, b, B, N, sizes=None):
    """Check F(a,A;b,B) + F(A,a;B,b) = C(A*b, a*B) + C(a,A) C(b,B)."""
    t0 = time.perf_counter()
    a, A, b, B = as_fun(a), as_fun(A), as_fun(b), as_fun(B)
    lhs = f_op(a, A, b, B, N) + f_op(A, a, B, b, N)
    rhs = c_op(star(A, b), star(a, B), N) + c_op(a, A, N) * c_op(b, B, N)
    if sizes is None:
        sizes = tuple(f.size if f.size is not None else "fun"
                      for f in (a, A, b, B))
    return _certify("lemma1", sizes, N, lhs, rhs, t0)


# ---- semidiagonal identity ----


def _remove_once(elements, target):
    elements = [tuple(e) for e in elements]
    if tuple(target) not in elements:
        raise DomainError("the removed shift must belong to its set")
    elements.remove(tuple(target))
    return tuple(elements)


def semidiagonal_sides(A1, B1, A2, B2, alpha, beta, N):
    """Both sides of the semidiagonal identity, truncated at N.

    alpha must lie in A1 and beta in B1; the primed sets drop one copy.
    The left side is the raw sum S_L + S_R - S_0 with every monomial's
    integer X-degree filtered to <= N; symbol parts of exponents (the
    M(1-beta) and q(2-alpha-beta) weights) land in the Laurent
    coefficients.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    a1p = set_fun(_remove_once(A1, alpha))
    b1p = set_fun(_remove_once(B1, beta))
    a2 = set_fun(A2)
    b2 = set_fun(B2)
    na, nb = neg(alpha), neg(beta)

    lhs = FormalSeries(N)
    # S_L: alpha side swapped out; its mirror S_R swaps the roles
    for mirror in (False, True):
        fa, fb = (b1p, a1p) if mirror else (a1p, b1p)
        f2a, f2b = (b2, a2) if mirror else (a2, b2)
        youter = na if mirror else nb
        for M in range(N + 1):
            for l in range(N + 1 - M):
                v2 = f2a.at(l) * f2b.at(M + l)
                if not v2:
                    continue
                for q in (0, 1):
                    qs = 1 if q == 0 else -1
                    for d in range(N + 1):
                        mn = min(q + d, M)
                        base = M + l + d - mn + 2 * q
                        if base > N:
                            continue
                        # X^{M(1-beta)} X^{-mn(1-beta)} X^{q(2-a-b)}
                        ypart = ymul(ypow(youter, M - mn),
                                     ypow(ymul(na, nb), q))
                        for j in range(N + 1 - base):
                            vj = fa.at(j + q + d)
                            if not vj:
                                continue
                            vj = vj.scaled(ypow(na if not mirror else nb, j))
                            for k in range(N + 1 - base - j):
                                vk = fb.at(k + q + d - mn)
                                if not vk:
                                    continue
                                vk = vk.scaled(
                                    ypow(nb if not mirror else na, k))
                                term = (v2 * vj * vk).scaled(ypart, qs)
                                lhs.add_term(base + j + k, term)
    # -S_0
    for l in range(N + 1):
        v2 = a2.at(l) * b2.at(l)
        if not v2:
            continue
        for q in (0, 1):
            qs = 1 if q == 0 else -1
            yq = ypow(ymul(na, nb), q)
            for d in range(N + 1 - l - 2 * q):
                for j in range(N + 1 - l - 2 * q - d):
                    vj = a1p.at(j + q + d)
                    if not vj:
                        continue
                    vj = vj.scaled(ypow(na, j))
                    for k in range(N + 1 - l - 2 * q - d - j):
                        vk = b1p.at(k + q + d)
                        if not vk:
                            continue
                        term = (v2 * vj * vk.scaled(ypow(nb, k))).scaled(
                            yq, -qs)
                        lhs.add_term(2 * q + l + d + j + k, term)

    left_set = _remove_once(A1, alpha) + tuple(A2) + (nb,)
    right_set = _remove_once(B1, beta) + tuple(B2) + (na,)
    cc = c_op(set_fun(left_set), set_fun(right_set), N)
    rhs = cc - cc.scaled(xdeg=1, ypart=ymul(na, nb))
    return lhs, rhs


def verify_semidiagonal(A1, B1, A2, B2, alpha, beta, N):
    t0 = time.perf_counter()
    lhs, rhs = semidiagonal_sides(A1, B1, A2, B2, alpha, beta, N)
    sizes = (len(A1), len(B1), len(A2), len(B2))
    return _certify("semidiagonal", sizes, N, lhs, rhs, t0)


# ---- reformulated two-swap identity ----


def _sigma(shifted_j, shifted_k, pair_y, Mcap, Ncap, N):
    """sum over q,d,j,k of (-1)^q X^{d(pair)} J(j+q+d-min(q+d,Ncap))
    K(k+q+d-min(q+d,Mcap)) X^{2q+d+j+k-min(q+d,Mcap)-min(q+d,Ncap)}."""
    out = FormalSeries(N)
    for q in (0, 1):
        qs = 1 if q == 0 else -1
        # the min terms can cancel up to max(Mcap, Ncap) of d's X-weight
        for d in range(N + max(Mcap, Ncap) + 2):
            mn_m = min(q + d, Mcap)
            mn_n = min(q + d, Ncap)
            base = 2 * q + d - mn_m - mn_n
            if base > N:
                continue
            yd = ypow(pair_y, d)
            for j in range(N + 1 - base):
                vj = shifted_j.at(j + q + d - mn_n)
                if not vj:
                    continue
                for k in range(N + 1 - base - j):
                    vk = shifted_k.at(k + q + d - mn_m)
                    if vk:
                        out.add_term(base + j + k,
                                     (vj * vk).scaled(yd, qs))
    return out


def theorem2_sides(A, B, C, D, alpha, beta, gamma, delta, N):
    """Both sides of the reformulated two-swap identity, truncated at N.

    lhs = sum over min(M,N)=0 of X^{-M(gamma+beta)-N(alpha+delta)}
    Sigma1(M,N) Sigma2(M,N) X^{M+N} with the displayed Sigma sums; rhs is
    the double (1 - X) factor times C(A u C u {-beta,-delta},
    B u D u {-alpha,-gamma}).
    """
    alpha, beta = tuple(alpha), tuple(beta)
    gamma, delta = tuple(gamma), tuple(delta)
    am = set_fun([ymul(a, neg(alpha)) for a in A])
    bm = set_fun([ymul(b, neg(beta)) for b in B])
    cm = set_fun([ymul(c, neg(gamma)) for c in C])
    dm = set_fun([ymul(d, neg(delta)) for d in D])
    yab = ymul(alpha, beta)
    ygd = ymul(gamma, delta)

    lhs = FormalSeries(N)
    # axis M (N=0), axis N (M=0), minus the origin counted twice.  The
    # Sigma2 mins are mirrored: C takes min(q+d,M), D takes min(q+d,N),
    # so its cap arguments are swapped relative to Sigma1.
    for m in range(N + 1):
        s1 = _sigma(am, bm, yab, m, 0, N - m)
        s2 = _sigma(cm, dm, ygd, 0, m, N - m)
        prod = (s1 * s2).scaled(xdeg=m,
                                ypart=neg(ypow(ymul(gamma, beta), m)))
        for n, p in prod.coeff.items():
            lhs.add_term(n, p)
    for n_ax in range(N + 1):
        s1 = _sigma(am, bm, yab, 0, n_ax, N - n_ax)
        s2 = _sigma(cm, dm, ygd, n_ax, 0, N - n_ax)
        prod = (s1 * s2).scaled(xdeg=n_ax,
                                ypart=neg(ypow(ymul(alpha, delta), n_ax)))
        for n, p in prod.coeff.items():
            lhs.add_term(n, p)
    origin = _sigma(am, bm, yab, 0, 0, N) * _sigma(cm, dm, ygd, 0, 0, N)
    for n, p in origin.coeff.items():
        lhs.add_term(n, -p)

    left_set = (tuple(tuple(a) for a in A) + tuple(tuple(c) for c in C)
                + (neg(beta), neg(delta)))
    right_set = (tuple(tuple(b) for b in B) + tuple(tuple(d) for d in D)
                 + (neg(alpha), neg(gamma)))
    cc = c_op(set_fun(left_set), set_fun(right_set), N)
    for ypair in (neg(yab), neg(ygd)):
        cc = cc - cc.scaled(xdeg=1, ypart=ypair)
    return lhs, cc


def verify_theorem2(A, B, C, D, alpha, beta, gamma, delta, N):
    t0 = time.perf_counter()
    lhs, rhs = theorem2_sides(A, B, C, D, alpha, beta, gamma, delta, N)
    sizes = (len(A), len(B), len(C), len(D))
    return _certify("theorem2", sizes, N, lhs, rhs, t0)


# ---- generic instances for the CLI ----


def _fresh_sets(sizes, tags):
    return [tuple(sym(f"{tag}{i}") for i in range(size))
            for tag, size in zip(tags, sizes)]


def run_verification(identity, sizes, degree):
    """Build a generic instance with all-distinct symbols and verify.

    lemma1 takes the four sizes as divisor-set sizes; semidiagonal reads
    them as |A1|, |B1|, |A2|, |B2| (alpha and beta are the first elements
    of A1 and B1); theorem2 as |A|, |B|, |C|, |D| with four fresh shifts.
    """
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) != 4 or min(sizes) < 0:
        raise DomainError("verification needs four nonnegative sizes")
    degree = int(degree)
    if identity == "lemma1":
        a, A, b, B = _fresh_sets(sizes, ("a", "b", "c", "d"))
        return verify_lemma1(a, A, b, B, degree, sizes=sizes)
    if identity == "semidiagonal":
        if sizes[0] < 1 or sizes[1] < 1:
            raise DomainError("semidiagonal needs |A1| >= 1 and |B1| >= 1")
        A1, B1, A2, B2 = _fresh_sets(sizes, ("a", "b", "c", "d"))
        return verify_semidiagonal(A1, B1, A2, B2, A1[0], B1[0], degree)
    if identity == "theorem2":
        A, B, C, D = _fresh_sets(sizes, ("a", "b", "c", "d"))
        al, be, ga, de = (sym("al"), sym("be"), sym("ga"), sym("de"))
        return verify_theorem2(A, B, C, D, al, be, ga, de, degree)
    raise DomainError(f"unknown identity {identity!r}; pick lemma1, "
                      "semidiagonal, or theorem2")
