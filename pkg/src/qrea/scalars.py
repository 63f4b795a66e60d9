"""Exact coefficient arithmetic: rationals, Laurent polynomials in q, and
evaluation into floating point.

Rationals are ``fractions.Fraction`` (arbitrary precision, always in lowest
terms, positive denominator).  ``GaussRational`` adjoins an exact imaginary
part where unimodular phases are needed.  A :class:`LaurentScalar` is a
finite sum ``sum_k c_k * q**k`` with integer exponents and nonzero exact
coefficients, stored sparsely; it is the coefficient ring for all symbolic
work in this package.

Exact inverses exist only for monomials ``c*q**k``.  The single denominator
``(q - 1/q)**k`` that the rewriting engines occasionally need is tracked
explicitly on noncommutative polynomials (see ``ncalg``), never here.

Numeric mode is plain Python/NumPy complex at a fixed ``0 < q0 < 1``.  The
two modes never mix silently: arithmetic between a ``LaurentScalar`` and a
float/complex raises :class:`~qrea.errors.ModeMismatch`, and the only exact
-> numeric bridge is :meth:`LaurentScalar.eval` / :func:`scalar_eval`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError, ModeMismatch, NonInvertible

__all__ = [
    "GaussRational",
    "LaurentScalar",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "QQI",
    "laurent",
    "qpow",
    "scalar_arith",
    "scalar_eval",
    "parse_laurent",
]


def _gauss(re_part, im_part):
    """Normalize to Fraction when the imaginary part vanishes."""
    im_part = Fraction(im_part)
    if im_part == 0:
        return Fraction(re_part)
    return GaussRational(re_part, im_part)


class GaussRational:
    """Exact complex rational a + b*i; collapses to Fraction when b == 0."""

    __slots__ = ("re", "im")

    def __init__(self, re_part, im_part):
        self.re = Fraction(re_part)
        self.im = Fraction(im_part)

    def conjugate(self):
        return _gauss(self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussRational):
            return _gauss(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return _gauss(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            return _gauss(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return _gauss(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return _gauss(self.re / other, self.im / other)
        if isinstance(other, GaussRational):
            n = other.re * other.re + other.im * other.im
            return self * GaussRational(other.re / n, -other.im / n)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"

    def is_unimodular(self):
        return self.re * self.re + self.im * self.im == 1


def unimodular_point(t) -> GaussRational:
    """Exact point on the unit circle: ((1-t^2) + 2t*i)/(1+t^2), t rational."""
    t = Fraction(t)
    d = 1 + t * t
    return GaussRational((1 - t * t) / d, 2 * t / d)


_COEF_TYPES = (int, Fraction, GaussRational)


class LaurentScalar:
    """Sparse exact Laurent polynomial in q.

    Immutable; ``terms`` maps integer exponent -> nonzero exact coefficient.
    Supports ring arithmetic with other LaurentScalars and with exact
    coefficients (int/Fraction/GaussRational).  Mixing with float/complex
    raises ModeMismatch.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if not isinstance(c, _COEF_TYPES):
                    c = Fraction(c)
                if c:
                    clean[int(k)] = Fraction(c) if isinstance(c, int) else c
        self.terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def const(c) -> "LaurentScalar":
        if isinstance(c, GaussRational):
            return LaurentScalar({0: c}) if c else ZERO
        c = Fraction(c)
        return LaurentScalar({0: c}) if c else ZERO

    @staticmethod
    def monomial(c, k: int) -> "LaurentScalar":
        return LaurentScalar({k: c})

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return self.terms == {0: Fraction(1)}

    def degree(self):
        return max(self.terms) if self.terms else None

    def valuation(self):
        return min(self.terms) if self.terms else None

    def conjugate(self) -> "LaurentScalar":
        return LaurentScalar(
            {k: (c.conjugate() if isinstance(c, GaussRational) else c) for k, c in self.terms.items()}
        )

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, _COEF_TYPES):
            return LaurentScalar.const(other)
        if isinstance(other, (float, complex)):
            raise ModeMismatch(
                "cannot mix exact LaurentScalar with numeric scalar; call .eval(q0) first"
            )
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return LaurentScalar(out)

    __rmul__ = __mul__

    def inv(self) -> "LaurentScalar":
        """Exact inverse; defined only for monomials c*q^k."""
        if len(self.terms) != 1:
            raise NonInvertible(f"not an invertible monomial: {self}")
        (k, c), = self.terms.items()
        return LaurentScalar({-k: Fraction(1) / c if not isinstance(c, GaussRational) else GaussRational(1, 0) / c})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divide_exact(self, divisor: "LaurentScalar"):
        """Exact quotient self/divisor in the Laurent ring, or None."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent scalar")
        if self.is_zero():
            return ZERO
        # shift both to ordinary polynomials and long-divide
        av, dv = self.valuation(), divisor.valuation()
        adeg, ddeg = self.degree(), divisor.degree()
        if adeg - av < ddeg - dv:
            return None
        num = [self.terms.get(k, Fraction(0)) for k in range(av, adeg + 1)]
        den = [divisor.terms.get(k, Fraction(0)) for k in range(dv, ddeg + 1)]
        qlen = len(num) - len(den) + 1
        quot = [Fraction(0)] * qlen
        for i in range(qlen - 1, -1, -1):
            c = num[i + len(den) - 1] / den[-1]
            quot[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        if any(num):
            return None
        return LaurentScalar({av - dv + i: c for i, c in enumerate(quot) if c})

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentScalar):
            return self.terms == other.terms
        if isinstance(other, _COEF_TYPES):
            return self.terms == LaurentScalar.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items(), key=lambda kv: kv[0])))
        return self._hash

    # -- evaluation -------------------------------------------------------

    def eval(self, q0):
        """Evaluate at a numeric 0 < q0 < 1.  Returns float or complex."""
        q0 = float(q0)
        if not 0.0 < q0 < 1.0:
            raise DomainError(f"q0 must lie in (0,1), got {q0}")
        out = 0.0 + 0.0j
        has_im = False
        for k, c in self.terms.items():
            if isinstance(c, GaussRational):
                out += complex(c) * q0 ** k
                has_im = True
            else:
                out += float(c) * q0 ** k
        return out if has_im or out.imag != 0.0 else out.real

    # -- rendering / parsing ----------------------------------------------

    def render(self) -> str:
        """Deterministic sparse rendering, e.g. '3/2*q^-2 + 1 - 2*q^3'."""
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            if isinstance(c, GaussRational):
                cs = f"({c.re}{'+' if c.im >= 0 else '-'}{abs(c.im)}i)"
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                cs = str(abs(c))
            if k == 0:
                body = cs
            else:
                qs = "q" if k == 1 else f"q^{k}"
                body = qs if cs == "1" else f"{cs}*{qs}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = render


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
            (?:\((?P<gre>-?\d+(?:/\d+)?)(?P<gsign>[+-])(?P<gim>\d+(?:/\d+)?)i\)|
               (?P<coef>\d+(?:/\d+)?))
            (?:\s*\*\s*(?P<q1>q(?:\^(?P<exp1>-?\d+))?))?
          | (?P<q2>q(?:\^(?P<exp2>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentScalar:
    """Parse the grammar produced by :meth:`LaurentScalar.render`."""
    text = text.strip()
    if text in ("0", "-0", "+0"):
        return ZERO
    pos = 0
    acc = {}
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise DomainError(f"cannot parse Laurent scalar at: {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("gre") is not None:
            im = Fraction(m.group("gim"))
            if m.group("gsign") == "-":
                im = -im
            coef = _gauss(Fraction(m.group("gre")), im)
        elif m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
        else:
            coef = Fraction(1)
        if m.group("q1") is not None:
            k = int(m.group("exp1")) if m.group("exp1") else 1
        elif m.group("q2") is not None:
            k = int(m.group("exp2")) if m.group("exp2") else 1
        else:
            k = 0
        s = acc.get(k, 0) + sign * coef
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
        pos = m.end()
    return LaurentScalar(acc)


def laurent(c=1, k: int = 0) -> LaurentScalar:
    """Convenience constructor: c*q^k."""
    return LaurentScalar({k: Fraction(c) if not isinstance(c, GaussRational) else c})


def qpow(k: int) -> LaurentScalar:
    return LaurentScalar({k: Fraction(1)})


ZERO = LaurentScalar()
ONE = LaurentScalar({0: Fraction(1)})
Q = LaurentScalar({1: Fraction(1)})
QINV = LaurentScalar({-1: Fraction(1)})
# q - q^{-1}: the only non-monomial ever cleared through a denominator
QQI = LaurentScalar({1: Fraction(1), -1: Fraction(-1)})


def _is_numeric(x):
    return isinstance(x, (float, complex)) or (
        isinstance(x, int) and not isinstance(x, bool)
    )


def scalar_arith(a, b, op: str):
    """Mode-checked scalar arithmetic: op in {'add','mul','neg','inv'}.

    Both operands must be exact (LaurentScalar) or both numeric
    (int/float/complex); 'neg' and 'inv' ignore b.
    """
    a_exact = isinstance(a, LaurentScalar)
    if op in ("neg", "inv"):
        if a_exact:
            return -a if op == "neg" else a.inv()
        if _is_numeric(a):
            if op == "neg":
                return -a
            if a == 0:
                raise NonInvertible("numeric zero has no inverse")
            return 1.0 / a
        raise ModeMismatch(f"unsupported scalar {a!r}")
    b_exact = isinstance(b, LaurentScalar)
    if a_exact != b_exact:
        raise ModeMismatch("operands are in different scalar modes")
    if a_exact:
        return a + b if op == "add" else a * b
    if not (_is_numeric(a) and _is_numeric(b)):
        raise ModeMismatch(f"unsupported scalars {a!r}, {b!r}")
    return a + b if op == "add" else a * b


def scalar_eval(a: LaurentScalar, q0):
    """Evaluate an exact scalar at 0 < q0 < 1 (ring homomorphism to C)."""
    return a.eval(q0)
