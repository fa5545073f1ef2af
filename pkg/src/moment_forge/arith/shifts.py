"""Immutable multisets of complex shifts.

The sets A, B of the divisor functions tau_A are finite multisets of small
complex numbers.  Order never matters, multiplicity does.  Instances are
hashable (usable as cache keys) and all operations return new instances.
"""

from itertools import combinations

from ..errors import DomainError


def _key(z):
    return (z.real, z.imag)


class ShiftMultiset:
    """A finite multiset of complex shifts with set-style operations."""

    __slots__ = ("_shifts",)

    def __init__(self, shifts=()):
        self._shifts = tuple(sorted((complex(z) for z in shifts), key=_key))

    @classmethod
    def of(cls, obj):
        """Coerce an iterable (or pass through an instance) to a ShiftMultiset."""
        if isinstance(obj, cls):
            return obj
        if obj is None:
            return cls()
        return cls(obj)

    @property
    def shifts(self):
        return self._shifts

    # ---- container protocol ----

    def __iter__(self):
        return iter(self._shifts)

    def __len__(self):
        return len(self._shifts)

    def __contains__(self, z):
        return complex(z) in self._shifts

    def __eq__(self, other):
        if isinstance(other, ShiftMultiset):
            return self._shifts == other._shifts
        return NotImplemented

    def __hash__(self):
        return hash(self._shifts)

    def __repr__(self):
        inner = ", ".join(repr(z) for z in self._shifts)
        return f"ShiftMultiset([{inner}])"

    # ---- multiset operations ----

    def union(self, other):
        """Multiset union: multiplicities add."""
        return ShiftMultiset(self._shifts + ShiftMultiset.of(other)._shifts)

    def remove(self, alpha):
        """Remove one copy of ``alpha``; it must be present."""
        alpha = complex(alpha)
        if alpha not in self._shifts:
            raise DomainError(f"shift {alpha} not in multiset {self._shifts}")
        rest = list(self._shifts)
        rest.remove(alpha)
        return ShiftMultiset(rest)

    def negate(self):
        """Elementwise negation; an involution."""
        return ShiftMultiset(-z for z in self._shifts)

    def conjugate(self):
        """Elementwise complex conjugation."""
        return ShiftMultiset(z.conjugate() for z in self._shifts)

    def shifted(self, delta):
        """Add ``delta`` to every element (the A_delta notation)."""
        delta = complex(delta)
        return ShiftMultiset(z + delta for z in self._shifts)

    def has_repeats(self, tol=0.0):
        """True when two elements coincide (within ``tol`` in each part)."""
        s = self._shifts
        for i in range(len(s) - 1):
            if (abs(s[i + 1].real - s[i].real) <= tol
                    and abs(s[i + 1].imag - s[i].imag) <= tol):
                return True
        return False

    def subsets(self, k):
        """Yield (chosen, remaining) pairs over all index subsets of size k."""
        n = len(self._shifts)
        for idx in combinations(range(n), k):
            chosen = [self._shifts[i] for i in idx]
            rest = [self._shifts[i] for i in range(n) if i not in idx]
            yield ShiftMultiset(chosen), ShiftMultiset(rest)
