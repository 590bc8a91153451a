"""Sparse multivariate polynomials over the rationals.

Polynomials live in a fixed ambient ring Q[x1, ..., xn]. Variable indices in
the public API are 1-based, matching the usual x1..xn naming.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import permutations
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class PolynomialError(ValueError):
    """Invalid polynomial operation (e.g. degree of the zero polynomial)."""


class PolynomialSyntaxError(PolynomialError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class InhomogeneousError(PolynomialError):
    pass


# Returned by weighted_degree for polynomials mixing several degrees.
INHOMOGENEOUS = "inhomogeneous"


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights w1, ..., wn with gcd 1."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise ValueError("weight system needs at least one weight")
        if any(x <= 0 for x in w):
            raise ValueError(f"weights must be positive, got {w}")
        g = reduce(math.gcd, w)
        object.__setattr__(self, "weights", tuple(x // g for x in w))

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    @property
    def is_sorted(self) -> bool:
        return all(a >= b for a, b in zip(self.weights, self.weights[1:]))

    def degree(self, exponent: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exponent))


def _sort_key(exp: Exponent):
    # degrevlex: higher total degree first, ties broken by smaller trailing exponents
    return (sum(exp), tuple(-e for e in reversed(exp)))


class Polynomial:
    """Immutable sparse polynomial: a map exponent tuple -> nonzero Fraction."""

    __slots__ = ("_terms", "_n", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None, nvars: int = 1):
        self._n = int(nvars)
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != self._n:
                    raise PolynomialError(
                        f"exponent {exp} does not match {self._n} variables"
                    )
                if any(e < 0 for e in exp):
                    raise PolynomialError(f"negative exponent in {exp}")
                c = Fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Polynomial":
        # trusted constructor: terms already canonical (no zeros, Fraction coefficients)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._n = nvars
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls._raw({tuple(exp): Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "Polynomial":
        return cls({tuple(exp): c}, len(exp))

    @property
    def nvars(self) -> int:
        return self._n

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Exponent]:
        return sorted(self._terms, key=_sort_key, reverse=True)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._n != self._n:
                raise PolynomialError(
                    f"ambient rings differ: {self._n} vs {other._n} variables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(out, self._n)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self._n)
            return Polynomial._raw({e: c * other for e, c in self._terms.items()}, self._n)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(out, self._n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("only non-negative integer powers are supported")
        result = Polynomial.constant(1, self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self._n)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({render(self)!r}, nvars={self._n})"

    def __str__(self):
        return render(self)

    # structure ------------------------------------------------------------

    def total_degree(self) -> int:
        if not self._terms:
            raise PolynomialError("zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def support_variables(self) -> set[int]:
        return {i + 1 for e in self._terms for i, a in enumerate(e) if a}

    def content_free(self) -> "Polynomial":
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._terms:
            return self
        den = reduce(math.lcm, (c.denominator for c in self._terms.values()))
        ints = {e: int(c * den) for e, c in self._terms.items()}
        g = reduce(math.gcd, ints.values())
        lead = self._terms[self.monomials()[0]]
        if lead < 0:
            g = -g
        return Polynomial._raw({e: Fraction(c // g) for e, c in ints.items()}, self._n)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for x, e in zip(point, exp):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total


# -- degree bookkeeping ----------------------------------------------------


def weighted_degree(p: Polynomial, w: WeightSystem | Sequence[int]):
    """Common weighted degree of all monomials of p, or INHOMOGENEOUS."""
    if p.is_zero():
        raise PolynomialError("zero polynomial has no weighted degree")
    weights = tuple(w)
    if len(weights) != p.nvars:
        raise PolynomialError("weight count does not match variable count")
    degrees = {sum(a * b for a, b in zip(weights, e)) for e in p._terms}
    if len(degrees) == 1:
        return degrees.pop()
    return INHOMOGENEOUS


def is_homogeneous(p: Polynomial, w) -> bool:
    return p.is_zero() or weighted_degree(p, w) != INHOMOGENEOUS


def homogeneous_part(p: Polynomial, w, degree: int) -> Polynomial:
    weights = tuple(w)
    return Polynomial._raw(
        {e: c for e, c in p._terms.items() if sum(a * b for a, b in zip(weights, e)) == degree},
        p.nvars,
    )


def order_of(p: Polynomial) -> int:
    """Order of p at the origin: the smallest total degree of a monomial."""
    if p.is_zero():
        raise PolynomialError("zero polynomial has no order")
    return min(sum(e) for e in p._terms)


def monomials_of_degree(weights: Sequence[int], degree: int) -> list[Exponent]:
    """All exponent vectors of the given weighted degree, in degrevlex-descending order."""
    weights = tuple(weights)
    n = len(weights)
    if degree < 0:
        return []
    out: list[Exponent] = []

    def rec(i, remaining, prefix):
        if i == n - 1:
            if remaining % weights[i] == 0:
                out.append(tuple(prefix) + (remaining // weights[i],))
            return
        for e in range(remaining // weights[i], -1, -1):
            rec(i + 1, remaining - e * weights[i], prefix + [e])

    rec(0, degree, [])
    out.sort(key=_sort_key, reverse=True)
    return out


# -- calculus and substitution ----------------------------------------------


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    n = p.nvars
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} out of range 1..{n}")
    k = i - 1
    out = {}
    for exp, c in p._terms.items():
        a = exp[k]
        if a:
            e = exp[:k] + (a - 1,) + exp[k + 1 :]
            out[e] = c * a
    return Polynomial._raw(out, n)


def substitute(p: Polynomial, i: int, r: Polynomial) -> Polynomial:
    """Replace x_i by r in p and expand."""
    n = p.nvars
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} out of range 1..{n}")
    if r.nvars != n:
        raise PolynomialError("substituted polynomial lives in a different ring")
    k = i - 1
    by_power: dict[int, dict] = {}
    for exp, c in p._terms.items():
        rest = exp[:k] + (0,) + exp[k + 1 :]
        by_power.setdefault(exp[k], {})[rest] = c
    result = Polynomial.zero(n)
    powers = {0: Polynomial.constant(1, n)}
    for a in sorted(by_power):
        if a not in powers:
            powers[a] = r ** a
        result = result + Polynomial._raw(by_power[a], n) * powers[a]
    return result


# -- determinants ------------------------------------------------------------

DETERMINANT_SIZE_LIMIT = 8


def _cofactor_det(M):
    size = len(M)
    if size == 1:
        return M[0][0]
    if size == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(size):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * _cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else Polynomial.zero(M[0][0].nvars)


def _bareiss_det(M):
    size = len(M)
    n = M[0][0].nvars
    A = [list(row) for row in M]
    sign = 1
    prev = Polynomial.constant(1, n)
    for k in range(size - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, size):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(n)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = exact_divide(num, prev)
        prev = A[k][k]
    det = A[size - 1][size - 1]
    return det if sign > 0 else -det


def determinant(M: Sequence[Sequence[Polynomial]], limit: int = DETERMINANT_SIZE_LIMIT) -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Cofactor expansion up to size 4, fraction-free Bareiss elimination above.
    """
    size = len(M)
    if size == 0:
        raise PolynomialError("empty matrix")
    if any(len(row) != size for row in M):
        raise PolynomialError("determinant of a non-square matrix")
    if size > limit:
        raise PolynomialError(f"matrix size {size} exceeds the configured limit {limit}")
    if size <= 4:
        return _cofactor_det(M)
    return _bareiss_det(M)


def leibniz_determinant(M: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by the permutation sum; slow, used as a cross-check."""
    size = len(M)
    n = M[0][0].nvars
    total = Polynomial.zero(n)
    for perm in permutations(range(size)):
        inversions = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        term = Polynomial.constant(-1 if inversions % 2 else 1, n)
        for r, c in enumerate(perm):
            term = term * M[r][c]
        total = total + term
    return total


def _lex_lead(p: Polynomial) -> Exponent:
    return max(p._terms)


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient a / b, which must be exact."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = a.nvars
    lb = _lex_lead(b)
    cb = b._terms[lb]
    rem = a
    quotient: dict[Exponent, Fraction] = {}
    while not rem.is_zero():
        lr = _lex_lead(rem)
        diff = tuple(x - y for x, y in zip(lr, lb))
        if any(d < 0 for d in diff):
            raise PolynomialError("polynomial division is not exact")
        c = rem._terms[lr] / cb
        quotient[diff] = c
        rem = rem - Polynomial._raw({diff: c}, n) * b
    return Polynomial._raw(quotient, n)


# -- text format -----------------------------------------------------------


def default_variables(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: Polynomial, variables: Sequence[str] | None = None) -> str:
    """Text form accepted back by parse_polynomial."""
    if variables is None:
        variables = default_variables(p.nvars)
    if p.is_zero():
        return "0"
    parts = []
    for idx, exp in enumerate(p.monomials()):
        c = p._terms[exp]
        factors = []
        for name, e in zip(variables, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if idx == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if value == "**":
            value = "^"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    # poly := term (('+'|'-') term)* ; parentheses and unary signs allowed in factors

    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.index = {name: i for i, name in enumerate(variables)}
        self.n = len(variables)
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, self.text, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        result = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return result

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("expected a non-negative integer exponent", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, value, start = tok
        if kind == "num":
            c = Fraction(int(value))
            if self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num" or int(den[1]) == 0:
                    self.error("expected a positive integer denominator", den)
                c = c / int(den[1])
            return Polynomial.constant(c, self.n)
        if kind == "name":
            if value not in self.index:
                raise PolynomialSyntaxError(f"unknown variable {value!r}", self.text, start)
            return Polynomial.variable(self.index[value] + 1, self.n)
        if value == "(":
            inner = self.expr()
            if self.take()[1] != ")":
                self.error("expected ')'", self.tokens[self.pos - 1])
            return inner
        if value == "-":
            return -self.factor()
        self.error(f"unexpected token {value!r}" if value else "unexpected end of input", tok)


def parse_polynomial(text: str, variables: Sequence[str] | int) -> Polynomial:
    """Parse text like ``"x1*x4 - 5*x4^5 + 1/2*x3"`` into a Polynomial.

    ``variables`` is a list of names or an integer n meaning x1..xn.
    """
    if isinstance(variables, int):
        variables = default_variables(variables)
    return _Parser(text, list(variables)).parse()


def polynomials_from(texts: Iterable[str], variables) -> list[Polynomial]:
    return [parse_polynomial(t, variables) for t in texts]
