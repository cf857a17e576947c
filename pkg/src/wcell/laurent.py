"""Integer Laurent polynomials in one variable q.

Coefficients are exact Python integers and exponents may be negative, so
this is the ring Z[q, q^-1].  The bar involution swaps q and q^-1.

>>> p = (Q - QINV) * (Q + QINV)
>>> p
q^2 - q^-2
>>> p.bar()
-q^2 + q^-2
"""

from __future__ import annotations


class LaurentPolynomial:
    """Sparse Laurent polynomial: a map exponent -> nonzero coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, LaurentPolynomial):
            self._c = dict(coeffs._c)
        elif isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        elif isinstance(coeffs, dict):
            self._c = {e: c for e, c in coeffs.items() if c}
        else:
            raise TypeError(f"cannot build LaurentPolynomial from {coeffs!r}")

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial({exponent: coefficient})

    def coefficient(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def items(self):
        return self._c.items()

    @property
    def degree(self):
        """Largest exponent, or None for the zero polynomial."""
        return max(self._c) if self._c else None

    @property
    def valuation(self):
        """Smallest exponent, or None for the zero polynomial."""
        return min(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def bar(self) -> "LaurentPolynomial":
        """The involution q -> q^-1."""
        return LaurentPolynomial({-e: c for e, c in self._c.items()})

    def shifted(self, k: int) -> "LaurentPolynomial":
        """Multiply by q^k."""
        return LaurentPolynomial({e + k: c for e, c in self._c.items()})

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPolynomial.__new__(LaurentPolynomial)
        res._c = out
        return res

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPolynomial(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._c.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = LaurentPolynomial.__new__(LaurentPolynomial)
        res._c = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            if e == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                var = "q" if e == 1 else f"q^{e}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


ZERO = LaurentPolynomial(0)
ONE = LaurentPolynomial(1)
Q = LaurentPolynomial.monomial(1)
QINV = LaurentPolynomial.monomial(-1)
