"""Exact Laurent polynomials in shift symbols.

A symbol alpha stands for the monomial y_alpha = X^alpha; a monomial's
y-part is a sorted tuple of (symbol, integer exponent) pairs, so negated
shifts carry negative exponents.  Coefficients are exact rationals; no
floating point enters this module or its users.
"""

from fractions import Fraction


def sym(name):
    """The y-part of a single shift symbol."""
    return ((str(name), 1),)


def neg(ypart):
    """y-part of the negated exponent (alpha -> -alpha)."""
    return tuple((s, -e) for s, e in ypart)


def ymul(*yparts):
    """Product of y-parts: exponents add componentwise."""
    acc = {}
    for yp in yparts:
        for s, e in yp:
            acc[s] = acc.get(s, 0) + e
    return tuple(sorted((s, e) for s, e in acc.items() if e))


def ypow(ypart, n):
    """ypart raised to an integer power."""
    return tuple((s, e * n) for s, e in ypart) if n else ()


def ypart_str(ypart):
    """Readable form, e.g. y(a)^2*y(b)^-1; the empty product is 1."""
    if not ypart:
        return "1"
    return "*".join(f"y({s})" if e == 1 else f"y({s})^{e}"
                    for s, e in ypart)


class LaurentPoly:
    """Immutable sparse Laurent polynomial {y-part: Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for yp, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(yp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, ypart=(), coeff=1):
        return cls({tuple(ypart): Fraction(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for yp, c in other.terms.items():
            out[yp] = out.get(yp, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({yp: -c for yp, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out = {}
            for y1, c1 in self.terms.items():
                for y2, c2 in other.terms.items():
                    yp = ymul(y1, y2)
                    out[yp] = out.get(yp, 0) + c1 * c2
            return LaurentPoly(out)
        return LaurentPoly({yp: c * Fraction(other)
                            for yp, c in self.terms.items()})

    __rmul__ = __mul__

    def scaled(self, ypart, coeff=1):
        """self times a single monomial."""
        return LaurentPoly({ymul(yp, ypart): c * Fraction(coeff)
                            for yp, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for yp in sorted(self.terms):
            c = self.terms[yp]
            bits.append(f"{c}" if not yp else f"{c}*{ypart_str(yp)}")
        return " + ".join(bits)


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial()
