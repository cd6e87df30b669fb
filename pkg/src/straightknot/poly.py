"""Exact integer Laurent polynomials in one variable.

All invariants in this package are computed over these; there is no floating
point anywhere.  Instances are immutable and hashable.
"""

from __future__ import annotations


class LaurentPolynomial:
    """A Laurent polynomial with integer coefficients, keyed by exponent."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, v in items:
                if v:
                    c[e] = c.get(e, 0) + v
        self._c = {e: v for e, v in c.items() if v}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def term(cls, coef: int, exp: int = 0) -> "LaurentPolynomial":
        return cls({exp: coef})

    @classmethod
    def from_coeffs(cls, offset: int, coeffs) -> "LaurentPolynomial":
        """Build from a dense coefficient vector starting at exponent `offset`."""
        return cls({offset + i: c for i, c in enumerate(coeffs)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def exponents(self):
        return sorted(self._c)

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def coeff_vector(self) -> tuple[int, list[int]]:
        """Return (offset, dense coefficient list) for the nonzero span."""
        if not self._c:
            return 0, [0]
        lo, hi = self.min_exp, self.max_exp
        return lo, [self._c.get(e, 0) for e in range(lo, hi + 1)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    def __sub__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) - v
        return LaurentPolynomial(c)

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        out = LaurentPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: v for e, v in self._c.items()})

    def mirror(self) -> "LaurentPolynomial":
        """Substitute t -> t^-1 (negate every exponent)."""
        return LaurentPolynomial({-e: v for e, v in self._c.items()})

    def eval_unit(self, x: int) -> int:
        """Evaluate at x in {1, -1}, the only integer units."""
        if x not in (1, -1):
            raise ValueError("eval_unit accepts only 1 or -1")
        total = 0
        for e, v in self._c.items():
            total += v if (x == 1 or e % 2 == 0) else -v
        return total

    def divexact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises if `other` does not divide `self`."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero()
        rem = dict(self._c)
        out: dict[int, int] = {}
        d_hi = other.max_exp
        d_lead = other._c[d_hi]
        while rem:
            hi = max(rem)
            lead = rem[hi]
            q, r = divmod(lead, d_lead)
            if r:
                raise ValueError("inexact polynomial division")
            e = hi - d_hi
            out[e] = out.get(e, 0) + q
            for de, dv in other._c.items():
                k = de + e
                nv = rem.get(k, 0) - dv * q
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return LaurentPolynomial(out)

    # -- serialization -----------------------------------------------------

    def serialize(self) -> str:
        """Wire format: `offset=<min exp>; coeffs=[c_min,...,c_max]`."""
        offset, coeffs = self.coeff_vector()
        return "offset=%d; coeffs=[%s]" % (offset, ",".join(str(c) for c in coeffs))

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        head, _, tail = text.partition(";")
        offset = int(head.split("=", 1)[1])
        body = tail.split("=", 1)[1].strip()
        if not body.startswith("[") or not body.endswith("]"):
            raise ValueError("malformed polynomial serialization: %r" % text)
        inner = body[1:-1].strip()
        coeffs = [int(x) for x in inner.split(",")] if inner else []
        return cls.from_coeffs(offset, coeffs)

    # -- dunder plumbing ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else "t^%d" % e
                body = var if mag == 1 else "%d*%s" % (mag, var)
            parts.append(("-" if v < 0 else "+") + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError("cannot coerce %r to LaurentPolynomial" % (x,))
