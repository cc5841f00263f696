"""Exact arithmetic in Q(sqrt 2), sparse polynomials and Lagrange interpolation.

Rationals are :class:`fractions.Fraction`, which already keeps lowest terms
with a positive denominator.  Everything here is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

__all__ = [
    "QSqrt2",
    "UniPoly",
    "BiPoly",
    "SQRT2",
    "BETA",
    "qs2_mul",
    "qs2_inv",
    "poly_eval_bi",
    "lagrange_interpolate",
    "parse_rational",
    "DuplicateNodeError",
]

Scalar = Union[int, Fraction, "QSqrt2"]


def parse_rational(token: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction."""
    token = token.strip()
    if not token:
        raise ValueError("empty rational")
    if "/" in token:
        num, den = token.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def _fmt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@total_ordering
class QSqrt2:
    """The number ``rat + irr*sqrt(2)`` with rational ``rat`` and ``irr``."""

    __slots__ = ("rat", "irr")

    rat: Fraction
    irr: Fraction

    def __init__(self, rat: Union[int, Fraction] = 0, irr: Union[int, Fraction] = 0) -> None:
        object.__setattr__(self, "rat", Fraction(rat))
        object.__setattr__(self, "irr", Fraction(irr))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    @classmethod
    def coerce(cls, value: Scalar) -> "QSqrt2":
        if isinstance(value, QSqrt2):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to QSqrt2")

    @classmethod
    def parse(cls, rat_token: str, irr_token: str) -> "QSqrt2":
        return cls(parse_rational(rat_token), parse_rational(irr_token))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.rat == 0 and self.irr == 0

    def is_rational(self) -> bool:
        return self.irr == 0

    def norm(self) -> Fraction:
        """Field norm ``rat^2 - 2*irr^2``; zero only for the zero element."""
        return self.rat * self.rat - 2 * self.irr * self.irr

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.rat, -self.irr)

    def sign(self) -> int:
        a, b = self.rat, self.irr
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: the larger of a^2 and 2b^2 decides
        if a * a > 2 * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Scalar) -> "QSqrt2":
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2(self.rat + o.rat, self.irr + o.irr)

    __radd__ = __add__

    def __neg__(self) -> "QSqrt2":
        return QSqrt2(-self.rat, -self.irr)

    def __pos__(self) -> "QSqrt2":
        return self

    def __sub__(self, other: Scalar) -> "QSqrt2":
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2(self.rat - o.rat, self.irr - o.irr)

    def __rsub__(self, other: Scalar) -> "QSqrt2":
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: Scalar) -> "QSqrt2":
        if isinstance(other, (int, Fraction)):
            return QSqrt2(self.rat * other, self.irr * other)
        if not isinstance(other, QSqrt2):
            return NotImplemented
        a, b, c, d = self.rat, self.irr, other.rat, other.irr
        if b == 0 and d == 0:
            return QSqrt2(a * c)
        return QSqrt2(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt2":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        return QSqrt2(self.rat / n, -self.irr / n)

    def __truediv__(self, other: Scalar) -> "QSqrt2":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt 2)")
            return QSqrt2(self.rat / other, self.irr / other)
        if not isinstance(other, QSqrt2):
            return NotImplemented
        if other.irr == 0:
            return self / other.rat
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "QSqrt2":
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int) -> "QSqrt2":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.irr == 0:
            return QSqrt2(self.rat ** exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __abs__(self) -> "QSqrt2":
        return -self if self.sign() < 0 else self

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSqrt2):
            return self.rat == other.rat and self.irr == other.irr
        if isinstance(other, (int, Fraction)):
            return self.irr == 0 and self.rat == other
        return NotImplemented

    def __lt__(self, other: Scalar) -> bool:
        try:
            o = QSqrt2.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"QSqrt2({_fmt_rational(self.rat)}, {_fmt_rational(self.irr)})"

    def __str__(self) -> str:
        """Canonical form: ``"3/2"`` or ``"(3/2+1/2*s)"`` where ``s`` is sqrt 2."""
        if self.irr == 0:
            return _fmt_rational(self.rat)
        irr = _fmt_rational(self.irr) + "*s"
        if self.rat == 0:
            return f"({irr})"
        sep = "" if self.irr < 0 else "+"
        return f"({_fmt_rational(self.rat)}{sep}{irr})"

    def to_float(self) -> float:
        """Lossy conversion, for display only."""
        return float(self.rat) + float(self.irr) * 2 ** 0.5


ZERO = QSqrt2(0)
ONE = QSqrt2(1)
SQRT2 = QSqrt2(0, 1)
BETA = QSqrt2(0, Fraction(1, 2))


def qs2_mul(a: QSqrt2, b: QSqrt2) -> QSqrt2:
    return a * b


def qs2_inv(a: QSqrt2) -> QSqrt2:
    return a.inverse()


# ---------------------------------------------------------------------------
# polynomials


def _clean(terms: Mapping) -> Dict:
    return {e: QSqrt2.coerce(c) for e, c in terms.items() if c != 0}


def _term_str(coeff: QSqrt2, monomial: str) -> str:
    if not monomial:
        return str(coeff)
    if coeff == 1:
        return monomial
    if coeff == -1:
        return "-" + monomial
    return f"{coeff}*{monomial}"


def _power_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


class UniPoly:
    """Sparse univariate polynomial with QSqrt2 coefficients."""

    __slots__ = ("terms", "var")

    def __init__(self, terms: Mapping[int, Scalar] | None = None, var: str = "x") -> None:
        terms = _clean(terms or {})
        for e in terms:
            if e < 0:
                raise ValueError("negative exponent")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar, var: str = "x") -> "UniPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1, var: str = "x") -> "UniPoly":
        return cls({e: c}, var)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar], var: str = "x") -> "UniPoly":
        """Coefficients listed from the constant term upwards."""
        return cls(dict(enumerate(coeffs)), var)

    @property
    def degree(self) -> float | int:
        """Largest exponent; ``float('-inf')`` for the zero polynomial."""
        return max(self.terms) if self.terms else float("-inf")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e: int) -> QSqrt2:
        return self.terms.get(e, ZERO)

    def coeffs(self) -> list[QSqrt2]:
        if not self.terms:
            return []
        return [self.coeff(e) for e in range(self.degree + 1)]

    def leading(self) -> QSqrt2:
        return self.terms[self.degree] if self.terms else ZERO

    def __call__(self, value: Scalar) -> QSqrt2:
        return self.evaluate(value)

    def evaluate(self, value: Scalar) -> QSqrt2:
        v = QSqrt2.coerce(value)
        acc = ZERO
        for c in reversed(self.coeffs()):
            acc = acc * v + c
        return acc

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other, self.var)

    def __add__(self, other) -> "UniPoly":
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = QSqrt2.coerce(other)
            return UniPoly({e: v * c for e, v in self.terms.items()}, self.var)
        out: Dict[int, QSqrt2] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, ZERO) + c1 * c2
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """``self(inner(t))``, Horner style."""
        acc = UniPoly({}, inner.var)
        for c in reversed(self.coeffs()):
            acc = acc * inner + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, QSqrt2)):
            return self.terms == UniPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [
            _term_str(self.terms[e], _power_str(self.var, e))
            for e in sorted(self.terms, reverse=True)
        ]
        return " + ".join(parts)


class BiPoly:
    """Sparse bivariate polynomial; ``terms[(i, j)]`` multiplies ``v1^i * v2^j``."""

    __slots__ = ("terms", "varnames")

    def __init__(
        self,
        terms: Mapping[Tuple[int, int], Scalar] | None = None,
        varnames: Tuple[str, str] = ("x", "y"),
    ) -> None:
        terms = _clean(terms or {})
        for i, j in terms:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "varnames", tuple(varnames))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar, varnames=("x", "y")) -> "BiPoly":
        return cls({(0, 0): c}, varnames)

    @classmethod
    def var(cls, index: int, varnames=("x", "y")) -> "BiPoly":
        return cls({(1, 0) if index == 0 else (0, 1): 1}, varnames)

    @classmethod
    def from_unipoly(cls, p: UniPoly, index: int, varnames=("x", "y")) -> "BiPoly":
        if index == 0:
            return cls({(e, 0): c for e, c in p.terms.items()}, varnames)
        return cls({(0, e): c for e, c in p.terms.items()}, varnames)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, index: int) -> float | int:
        if not self.terms:
            return float("-inf")
        return max(e[index] for e in self.terms)

    def coeff(self, i: int, j: int) -> QSqrt2:
        return self.terms.get((i, j), ZERO)

    def items(self) -> Iterator[Tuple[Tuple[int, int], QSqrt2]]:
        """Terms in canonical (descending lexicographic) order."""
        for e in sorted(self.terms, reverse=True):
            yield e, self.terms[e]

    def evaluate(self, v1: Scalar, v2: Scalar) -> QSqrt2:
        a = QSqrt2.coerce(v1)
        b = QSqrt2.coerce(v2)
        if not self.terms:
            return ZERO
        pa = _powers(a, self.degree(0))
        pb = _powers(b, self.degree(1))
        acc = ZERO
        for (i, j), c in self.terms.items():
            acc = acc + c * pa[i] * pb[j]
        return acc

    __call__ = evaluate

    def restrict(self, index: int, value: Scalar, var: str | None = None) -> UniPoly:
        """Fix variable ``index`` to ``value``; the other variable survives."""
        v = QSqrt2.coerce(value)
        keep = 1 - index
        pw = _powers(v, self.degree(index)) if self.terms else [ONE]
        out: Dict[int, QSqrt2] = {}
        for e, c in self.terms.items():
            out[e[keep]] = out.get(e[keep], ZERO) + c * pw[e[index]]
        return UniPoly(out, var or self.varnames[keep])

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        return BiPoly.constant(other, self.varnames)

    def __add__(self, other) -> "BiPoly":
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return BiPoly(out, self.varnames)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self.terms.items()}, self.varnames)

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            c = QSqrt2.coerce(other)
            return BiPoly({e: v * c for e, v in self.terms.items()}, self.varnames)
        out: Dict[Tuple[int, int], QSqrt2] = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                key = (a + c, b + d)
                out[key] = out.get(key, ZERO) + c1 * c2
        return BiPoly(out, self.varnames)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(1, self.varnames)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def substitute(self, first: "BiPoly", second: "BiPoly") -> "BiPoly":
        """Formal substitution ``self(first, second)``.

        The result lives in the variables of ``first``/``second``.
        """
        varnames = first.varnames
        if not self.terms:
            return BiPoly({}, varnames)
        pf = _powers(first, self.degree(0), BiPoly.constant(1, varnames))
        ps = _powers(second, self.degree(1), BiPoly.constant(1, varnames))
        acc = BiPoly({}, varnames)
        for (i, j), c in self.terms.items():
            acc = acc + pf[i] * ps[j] * c
        return acc

    def with_varnames(self, varnames: Tuple[str, str]) -> "BiPoly":
        return BiPoly(self.terms, varnames)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, QSqrt2)):
            return self.terms == BiPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r}, varnames={self.varnames!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        v1, v2 = self.varnames
        parts = []
        for (i, j), c in self.items():
            mono = "*".join(p for p in (_power_str(v1, i), _power_str(v2, j)) if p)
            parts.append(_term_str(c, mono))
        return " + ".join(parts)


def _powers(base, top, one=ONE) -> list:
    out = [one]
    for _ in range(int(top)):
        out.append(out[-1] * base)
    return out


def poly_eval_bi(p: BiPoly, v1: Scalar, v2: Scalar) -> QSqrt2:
    return p.evaluate(v1, v2)


class DuplicateNodeError(ValueError):
    pass


def lagrange_interpolate(points: Iterable[Tuple[Scalar, Scalar]], var: str = "x") -> UniPoly:
    """Unique polynomial of degree < len(points) through ``points``.

    Uses Newton divided differences, then expands to monomial form.
    """
    pts = [(QSqrt2.coerce(a), QSqrt2.coerce(b)) for a, b in points]
    if not pts:
        raise ValueError("interpolation needs at least one point")
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateNodeError("interpolation nodes are not pairwise distinct")
    coef = [p[1] for p in pts]
    n = len(pts)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton basis, dense coefficient lists low -> high
    acc: list[QSqrt2] = [coef[-1]]
    for i in range(n - 2, -1, -1):
        shifted = [ZERO] + acc
        for k, c in enumerate(acc):
            shifted[k] = shifted[k] - xs[i] * c
        shifted[0] = shifted[0] + coef[i]
        acc = shifted
    return UniPoly.from_coeffs(acc, var)
