"""Exact scalars: Gaussian-rational Laurent polynomials in a half-integer power of q.

Every coefficient appearing in the reflection-equation, skein and Hecke-type
presentations lives here.  Exponents are stored as integer counts of q^(1/2)
steps, so q itself is two steps; coefficients are Gaussian rationals a + b*i
with exact Fraction components.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class GaussRat:
    """A Gaussian rational a + b*i, held in lowest terms by Fraction."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    def __add__(self, other):
        other = _promote(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _promote(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _promote(other) - self

    def __mul__(self, other):
        other = _promote(other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __truediv__(self, other):
        other = _promote(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussRat(other.re / n, -other.im / n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussRat(other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        if self.im == 0:
            return f"GaussRat({self.re})"
        return f"GaussRat({self.re}, {self.im})"

    def sqrt(self):
        """Exact square root when one exists among Gaussian rationals of the
        simple forms r, r*i (r rational); raises ValueError otherwise."""
        if self.im == 0:
            if self.re >= 0:
                r = _frac_sqrt(self.re)
                if r is not None:
                    return GaussRat(r)
            else:
                r = _frac_sqrt(-self.re)
                if r is not None:
                    return GaussRat(0, r)
        raise ValueError(f"no exact Gaussian square root implemented for {self!r}")


def _promote(x) -> GaussRat:
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    raise TypeError(f"cannot promote {type(x).__name__} to GaussRat")


def _frac_sqrt(f: Fraction):
    num = _int_sqrt(f.numerator)
    den = _int_sqrt(f.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_sqrt(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


G_ZERO = GaussRat(0)
G_ONE = GaussRat(1)
G_I = GaussRat(0, 1)


class QLaurent:
    """Laurent polynomial in q^(1/2) with GaussRat coefficients.

    terms maps the half-step exponent (q^(k/2) stored as k) to a nonzero
    coefficient; the empty map is zero.  Equality is structural equality of
    the canonical term maps.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        canon = {}
        if terms:
            for k, c in terms.items():
                c = _promote(c)
                if c:
                    acc = canon.get(k)
                    c = c if acc is None else acc + c
                    if c:
                        canon[k] = c
                    else:
                        del canon[k]
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, value):
        raise AttributeError("QLaurent is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, numer, denom=1):
        return cls({0: GaussRat(Fraction(numer, denom))})

    @classmethod
    def q_power(cls, half_steps: int):
        return cls({half_steps: G_ONE})

    @classmethod
    def unit_i(cls):
        return cls({0: G_I})

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            acc = terms.get(k, G_ZERO) + c
            if acc:
                terms[k] = acc
            else:
                terms.pop(k, None)
        return QLaurent(terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                acc = terms.get(k, G_ZERO) + c1 * c2
                if acc:
                    terms[k] = acc
                else:
                    terms.pop(k, None)
        return QLaurent(terms)

    __rmul__ = __mul__

    def __neg__(self):
        return QLaurent({k: -c for k, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QL_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def _coerce(self, other) -> "QLaurent":
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, (int, Fraction, GaussRat)):
            return QLaurent({0: _promote(other)})
        raise TypeError(f"cannot coerce {type(other).__name__} to QLaurent")

    # -- units ----------------------------------------------------------
    def is_monomial(self):
        return len(self.terms) == 1

    def monomial_parts(self):
        """Return (coefficient, half_steps) for a single-term value."""
        if not self.is_monomial():
            raise ValueError(f"not a q-monomial: {self!r}")
        ((k, c),) = self.terms.items()
        return c, k

    def inverse(self):
        """Invert a nonzero Gaussian-rational multiple of a single q-power.

        General Laurent polynomials are not invertible here; every leading
        coefficient met in practice is such a unit.
        """
        c, k = self.monomial_parts()
        return QLaurent({-k: G_ONE / c})

    def sqrt(self):
        """Square root of a unit monomial with even half-step exponent."""
        c, k = self.monomial_parts()
        if k % 2:
            raise ValueError(f"{self!r} has no q^(1/2)-integral square root")
        return QLaurent({k // 2: c.sqrt()})

    def only_integer_powers(self):
        return all(k % 2 == 0 for k in self.terms)

    def __repr__(self):
        from .exprs import format_scalar

        return f"QLaurent[{format_scalar(self)}]"


def qmono(numer: int, denom: int, half_steps: int) -> QLaurent:
    """(numer/denom) * q^(half_steps/2) in canonical form; denom must be nonzero."""
    if denom == 0:
        raise ZeroDivisionError("qmono denominator must be nonzero")
    return QLaurent({half_steps: GaussRat(Fraction(numer, denom))})


def qi(numer: int = 1, denom: int = 1, half_steps: int = 0) -> QLaurent:
    """(numer/denom) * i * q^(half_steps/2)."""
    if denom == 0:
        raise ZeroDivisionError("qi denominator must be nonzero")
    return QLaurent({half_steps: GaussRat(0, Fraction(numer, denom))})


QL_ZERO = QLaurent()
QL_ONE = QLaurent({0: G_ONE})
QL_I = QLaurent({0: G_I})
QL_Q = QLaurent({2: G_ONE})
QL_QINV = QLaurent({-2: G_ONE})


def q_int(power: int) -> QLaurent:
    """q^power for an integer power."""
    return QLaurent({2 * power: G_ONE})


def q_half(half_steps: int) -> QLaurent:
    """q^(half_steps/2)."""
    return QLaurent({half_steps: G_ONE})
