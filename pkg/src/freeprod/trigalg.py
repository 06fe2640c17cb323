"""Exact trigonometric polynomials on [0, pi/2] and the scalar ring Q[L].

A TrigPoly is a finite rational combination of cos(k*theta) (k >= 0) and
sin(k*theta) (k >= 1).  Products reduce through the product-to-sum
identities, so this span is closed under multiplication and the arithmetic
stays exact.  The normalized trace is (2/pi) * integral over [0, pi/2];
its values are polynomials in L = 1/pi with rational coefficients,
represented by PiValue.  Because 1/pi is transcendental, a PiValue is zero
iff every coefficient is zero, which makes "this trace vanishes" an exactly
decidable statement.
"""

from __future__ import annotations

from fractions import Fraction
import math


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class PiValue:
    """An element of Q[L], L standing for 1/pi.  Immutable."""

    __slots__ = ("_coeffs", "_key")

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for deg, q in dict(coeffs).items():
                q = _frac(q)
                if q:
                    d[int(deg)] = q
        self._coeffs = d
        self._key = tuple(sorted(d.items()))

    @classmethod
    def of(cls, q) -> "PiValue":
        return cls({0: _frac(q)})

    @classmethod
    def lam(cls, q=1, deg: int = 1) -> "PiValue":
        """q * L^deg."""
        return cls({deg: _frac(q)})

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, deg: int) -> Fraction:
        return self._coeffs.get(deg, Fraction(0))

    def items(self):
        return iter(self._key)

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else 0

    def __add__(self, other):
        other = _as_pi(other)
        d = dict(self._coeffs)
        for deg, q in other._coeffs.items():
            d[deg] = d.get(deg, Fraction(0)) + q
        return PiValue(d)

    __radd__ = __add__

    def __neg__(self):
        return PiValue({deg: -q for deg, q in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-_as_pi(other))

    def __rsub__(self, other):
        return _as_pi(other) + (-self)

    def __mul__(self, other):
        other = _as_pi(other)
        d = {}
        for d1, q1 in self._coeffs.items():
            for d2, q2 in other._coeffs.items():
                deg = d1 + d2
                d[deg] = d.get(deg, Fraction(0)) + q1 * q2
        return PiValue(d)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PiValue.of(other)
        if not isinstance(other, PiValue):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def eval_numeric(self) -> float:
        """Substitute L = 1/pi.  Diagnostics only, never used for zero tests."""
        lam = 1.0 / math.pi
        return float(sum(float(q) * lam**deg for deg, q in self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for deg, q in self._key:
            if deg == 0:
                body = str(q)
            else:
                lpow = "L" if deg == 1 else f"L^{deg}"
                if q == 1:
                    body = lpow
                elif q == -1:
                    body = "-" + lpow
                else:
                    body = f"{q}*{lpow}"
            parts.append(body)
        out = parts[0]
        for body in parts[1:]:
            if body.startswith("-"):
                out += " - " + body[1:]
            else:
                out += " + " + body
        return out

    def __repr__(self):
        return f"PiValue({self})"


def _as_pi(x) -> PiValue:
    if isinstance(x, PiValue):
        return x
    if isinstance(x, (int, Fraction)):
        return PiValue.of(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to PiValue")


PI_ZERO = PiValue()
PI_ONE = PiValue.of(1)


class TrigPoly:
    """sum a_k cos(k theta) + sum b_k sin(k theta), rational, finitely many.

    Terms are keyed ('c', k) with k >= 0 and ('s', k) with k >= 1; zero
    coefficients are never stored, so equality and hashing are canonical.
    The functions are real-valued, hence self-adjoint.
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms=None):
        d = {}
        if terms:
            for (kind, k), q in dict(terms).items():
                q = _frac(q)
                _fold_term(d, kind, int(k), q)
        self._terms = d
        self._key = tuple(sorted(d.items()))

    @classmethod
    def zero(cls) -> "TrigPoly":
        return cls()

    @classmethod
    def const(cls, q) -> "TrigPoly":
        return cls({("c", 0): _frac(q)})

    @classmethod
    def cos(cls, k: int = 1, q=1) -> "TrigPoly":
        return cls({("c", k): _frac(q)})

    @classmethod
    def sin(cls, k: int = 1, q=1) -> "TrigPoly":
        return cls({("s", k): _frac(q)})

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(kind == "c" and k == 0 for (kind, k) in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(("c", 0), Fraction(0))

    def without_constant(self) -> "TrigPoly":
        d = {key: q for key, q in self._terms.items() if key != ("c", 0)}
        return TrigPoly(d)

    def items(self):
        return iter(self._key)

    def __add__(self, other):
        other = _as_trig(other)
        d = dict(self._terms)
        for key, q in other._terms.items():
            d[key] = d.get(key, Fraction(0)) + q
        return TrigPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly({key: -q for key, q in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_trig(other))

    def __rsub__(self, other):
        return _as_trig(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _frac(other)
            return TrigPoly({key: c * q for key, c in self._terms.items()})
        other = _as_trig(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TrigPoly.const(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def eval_numeric(self, theta: float) -> float:
        total = 0.0
        for (kind, k), q in self._terms.items():
            f = math.cos if kind == "c" else math.sin
            total += float(q) * f(k * theta)
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (kind, k), q in self._key:
            if kind == "c" and k == 0:
                body = str(q)
            else:
                name = kind if k == 1 else f"{kind}[{k}]"
                if q == 1:
                    body = name
                elif q == -1:
                    body = "-" + name
                else:
                    body = f"{q}*{name}"
            parts.append(body)
        out = parts[0]
        for body in parts[1:]:
            if body.startswith("-"):
                out += " - " + body[1:]
            else:
                out += " + " + body
        return out

    def __repr__(self):
        return f"TrigPoly({self})"


def _as_trig(x) -> TrigPoly:
    if isinstance(x, TrigPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TrigPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to TrigPoly")


def _fold_term(d: dict, kind: str, k: int, q: Fraction) -> None:
    # cos is even, sin is odd; sin(0) = 0.
    if kind == "c":
        if k < 0:
            k = -k
    elif kind == "s":
        if k < 0:
            k, q = -k, -q
        if k == 0:
            return
    else:
        raise ValueError(f"unknown term kind {kind!r}")
    if not q:
        return
    key = (kind, k)
    new = d.get(key, Fraction(0)) + q
    if new:
        d[key] = new
    else:
        d.pop(key, None)


def mul(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    """Exact product via product-to-sum:

        cos a cos b = (cos(a-b) + cos(a+b)) / 2
        sin a sin b = (cos(a-b) - cos(a+b)) / 2
        sin a cos b = (sin(a+b) + sin(a-b)) / 2
        cos a sin b = (sin(a+b) - sin(a-b)) / 2

    Negative indices fold back by parity.
    """
    half = Fraction(1, 2)
    d: dict = {}
    for (k1, a), q1 in f._terms.items():
        for (k2, b), q2 in g._terms.items():
            q = q1 * q2 * half
            if k1 == "c" and k2 == "c":
                _fold_term(d, "c", a - b, q)
                _fold_term(d, "c", a + b, q)
            elif k1 == "s" and k2 == "s":
                _fold_term(d, "c", a - b, q)
                _fold_term(d, "c", a + b, -q)
            elif k1 == "s" and k2 == "c":
                _fold_term(d, "s", a + b, q)
                _fold_term(d, "s", a - b, q)
            else:  # cos * sin
                _fold_term(d, "s", a + b, q)
                _fold_term(d, "s", a - b, -q)
    return TrigPoly(d)


def trace(f: TrigPoly) -> PiValue:
    """(2/pi) * integral of f over [0, pi/2], exactly, as an element of Q[L].

    For k >= 1:
        (2/pi) int cos(k t) dt = (2/k) sin(k pi/2) * L
        (2/pi) int sin(k t) dt = (2/k) (1 - cos(k pi/2)) * L
    and sin(k pi/2), cos(k pi/2) take values in {0, +1, -1} by k mod 4,
    so the result has degree <= 1 in L.
    """
    const = Fraction(0)
    lam = Fraction(0)
    for (kind, k), q in f._terms.items():
        if kind == "c":
            if k == 0:
                const += q
            else:
                r = k % 4
                if r == 1:
                    lam += q * Fraction(2, k)
                elif r == 3:
                    lam -= q * Fraction(2, k)
        else:
            r = k % 4
            if r == 2:
                lam += q * Fraction(4, k)
            elif r % 2 == 1:
                lam += q * Fraction(2, k)
    return PiValue({0: const, 1: lam})


def eval_numeric(v: PiValue) -> float:
    return v.eval_numeric()


def parse_trig(text: str) -> TrigPoly:
    """Parse the text encoding of a trig polynomial.

    Grammar: sums/differences of terms; a term is a product of factors
    joined by an explicit ``*`` (no juxtaposition); a factor is a rational
    ``p/q``, one of ``c``, ``s``, ``c[k]``, ``s[k]``, or a parenthesized
    subexpression.  Examples: ``1/2 + 1/2*c[2]``, ``c*s - 3/2*s[4]``.
    """
    tokens = _trig_tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]]

    def advance():
        tok = tokens[pos[0]]
        pos[0] += 1
        return tok

    def parse_expr() -> TrigPoly:
        negate = False
        if peek() in ("+", "-"):
            negate = advance() == "-"
        total = parse_term()
        if negate:
            total = -total
        while peek() in ("+", "-"):
            op = advance()
            term = parse_term()
            total = total - term if op == "-" else total + term
        return total

    def parse_term() -> TrigPoly:
        out = parse_factor()
        while peek() == "*":
            advance()
            out = out * parse_factor()
        return out

    def parse_factor() -> TrigPoly:
        tok = advance()
        if tok == "(":
            inner = parse_expr()
            if advance() != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        if isinstance(tok, Fraction):
            return TrigPoly.const(tok)
        if isinstance(tok, tuple):
            kind, k = tok
            return TrigPoly.cos(k) if kind == "c" else TrigPoly.sin(k)
        raise ValueError(f"unexpected token {tok!r} in {text!r}")

    result = parse_expr()
    if peek() is not None:
        raise ValueError(f"trailing input in trig expression {text!r}")
    return result


def _trig_tokenize(text: str):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*()":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            i = j
            if i < n and text[i] == "/":
                i += 1
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                if j == i:
                    raise ValueError(f"missing denominator in {text!r}")
                out.append(Fraction(num, int(text[i:j])))
                i = j
            else:
                out.append(Fraction(num))
        elif ch in "cs":
            kind = ch
            i += 1
            k = 1
            if i < n and text[i] == "[":
                j = text.index("]", i)
                k = int(text[i + 1:j])
                i = j + 1
            out.append((kind, k))
        else:
            raise ValueError(f"unexpected character {ch!r} in trig expression")
    out.append(None)
    return out
