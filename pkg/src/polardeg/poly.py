"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in variables x0..x{nvars-1} is stored as a dict mapping
exponent tuples to nonzero Fraction coefficients:

    x0^2*x2 + 3  ->  {(2, 0, 1): Fraction(1), (0, 0, 0): Fraction(3)}

The zero polynomial has an empty term dict.  All operations return
canonical polynomials (no zero coefficients are ever stored), so equality
of term dicts is equality of polynomials.  Values are immutable after
construction and safe to share between threads.

Input grammar (whitespace ignored, '*' mandatory between factors):

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := rational | var ('^' uint)?
    rational := ['-'] uint ('/' uint)?
    var      := 'x' uint | one of x, y, z, w, t  (aliases for x0..x4)

The canonical printer emits terms in graded-lexicographic order (higher
total degree first, then lexicographically by exponents with x0 most
significant), with explicit '*' and '^' only for exponents >= 2.
parse(str(p)) == p for every polynomial p.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

# Single-letter variable aliases accepted on input, normalized on output.
VAR_ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3, "t": 4}


class ParseError(ValueError):
    """Syntax or range error in polynomial text, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Exponents, Scalar], nvars: int):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has wrong length for nvars={nvars}")
            if any((not isinstance(e, int)) or e < 0 for e in exps):
                raise ValueError(f"exponents must be non-negative integers: {exps}")
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self._terms = clean
        self._nvars = nvars
        self._hash: int | None = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls({}, nvars)

    @classmethod
    def constant(cls, value: Scalar, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: Fraction(value)}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exps = [0] * nvars
        exps[index] = 1
        return cls({tuple(exps): Fraction(1)}, nvars)

    # -- basic queries ----------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return self._nvars

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Max total degree; 0 for the zero polynomial by convention."""
        if not self._terms:
            return 0
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        if not self._terms:
            return True
        degs = {sum(e) for e in self._terms}
        return len(degs) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self._nvars != other._nvars:
            raise ValueError(f"variable count mismatch: {self._nvars} != {other._nvars}")

    def __add__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self._nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Polynomial(out, self._nvars)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self._nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial({e: c * v for e, v in self._terms.items()}, self._nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Polynomial(out, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self._nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus ---------------------------------------------------------

    def diff(self, index: int) -> "Polynomial":
        """Exact partial derivative with respect to x{index}."""
        if not 0 <= index < self._nvars:
            raise ValueError(f"variable index {index} out of range")
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            e = exps[index]
            if e == 0:
                continue
            new = list(exps)
            new[index] = e - 1
            out[tuple(new)] = coeff * e
        return Polynomial(out, self._nvars)

    def gradient(self) -> tuple["Polynomial", ...]:
        return tuple(self.diff(i) for i in range(self._nvars))

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, point: Sequence) -> Union[Fraction, complex]:
        """Evaluate at a point.

        Exact (Fraction) when every coordinate is an int or Fraction,
        complex floating point otherwise.
        """
        if len(point) != self._nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self._nvars}")
        exact = all(isinstance(v, (int, Fraction)) for v in point)
        if exact:
            total = Fraction(0)
            for exps, coeff in self._terms.items():
                term = coeff
                for v, e in zip(point, exps):
                    if e:
                        term *= Fraction(v) ** e
                total += term
            return total
        pt = [complex(v) for v in point]
        acc = 0j
        for exps, coeff in self._terms.items():
            term = complex(coeff)
            for v, e in zip(pt, exps):
                if e:
                    term *= v**e
            acc += term
        return acc

    def compose(self, substitutions: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute substitutions[i] for x{i}; all replacements share one
        variable count, which becomes the result's."""
        if len(substitutions) != self._nvars:
            raise ValueError(f"need {self._nvars} substitution polynomials, got {len(substitutions)}")
        m = substitutions[0].nvars
        if any(s.nvars != m for s in substitutions):
            raise ValueError("substitution polynomials must share a variable count")
        one = Polynomial.constant(1, m)
        # Incrementally cache powers of each replacement polynomial.
        powers: list[list[Polynomial]] = [[one] for _ in substitutions]
        result = Polynomial.zero(m)
        for exps, coeff in self._terms.items():
            term = Polynomial.constant(coeff, m)
            for i, e in enumerate(exps):
                cache = powers[i]
                while len(cache) <= e:
                    cache.append(cache[-1] * substitutions[i])
                if e:
                    term = term * cache[e]
            result = result + term
        return result

    def eliminate(self, index: int, value: Scalar) -> "Polynomial":
        """Set x{index} to a rational constant and drop that variable slot.

        The remaining variables keep their relative order and are
        renumbered to x0..x{nvars-2}.
        """
        if not 0 <= index < self._nvars:
            raise ValueError(f"variable index {index} out of range")
        if self._nvars == 1:
            raise ValueError("cannot eliminate the only variable")
        value = Fraction(value)
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            e = exps[index]
            if e and value == 0:
                continue
            c = coeff * value**e
            key = exps[:index] + exps[index + 1 :]
            out[key] = out.get(key, Fraction(0)) + c
        return Polynomial(out, self._nvars - 1)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(
            self._terms.items(),
            key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])),
        )
        pieces: list[str] = []
        for k, (exps, coeff) in enumerate(ordered):
            factors = []
            mag = abs(coeff)
            is_const = not any(exps)
            if mag != 1 or is_const:
                factors.append(str(mag))
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            body = "*".join(factors)
            if k == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, nvars={self._nvars})"


# -- spec-level helpers ------------------------------------------------------


def degree(f: Polynomial) -> int:
    return f.degree()


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()


def gradient(f: Polynomial) -> tuple[Polynomial, ...]:
    return f.gradient()


def substitute_affine_chart(f: Polynomial, chart: Union[int, Polynomial]) -> Polynomial:
    """Restrict to the affine chart where the chart form equals 1.

    An integer chart i sets x{i} = 1.  A linear-form chart L sets L = 1 by
    solving for its first variable with nonzero coefficient.  Either way
    the result lives in one fewer variable.
    """
    if isinstance(chart, int):
        return f.eliminate(chart, 1)
    if not isinstance(chart, Polynomial):
        raise TypeError("chart must be a variable index or a linear form")
    if chart.nvars != f.nvars:
        raise ValueError("chart form has wrong variable count")
    if chart.is_zero() or chart.degree() != 1 or not chart.is_homogeneous():
        raise ValueError("chart form must be homogeneous linear")
    coeffs = [Fraction(0)] * f.nvars
    for exps, c in chart.terms.items():
        coeffs[exps.index(1)] = c
    pivot = next(i for i, c in enumerate(coeffs) if c != 0)
    m = f.nvars - 1
    # Replacement for each original variable, expressed in the m survivors.
    subs: list[Polynomial] = []
    survivors = [i for i in range(f.nvars) if i != pivot]
    pivot_expr = Polynomial.constant(Fraction(1, 1) / coeffs[pivot], m)
    for new_idx, orig in enumerate(survivors):
        if coeffs[orig] != 0:
            pivot_expr = pivot_expr - Polynomial.variable(new_idx, m) * (coeffs[orig] / coeffs[pivot])
    for orig in range(f.nvars):
        if orig == pivot:
            subs.append(pivot_expr)
        else:
            subs.append(Polynomial.variable(survivors.index(orig), m))
    return f.compose(subs)


def deform(f: Polynomial, linear_form: Polynomial, d: int, s: Scalar) -> Polynomial:
    """Return f + s * linear_form**d, the degree-preserving pencil member."""
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous")
    if linear_form.nvars != f.nvars:
        raise ValueError("linear form has wrong variable count")
    if linear_form.is_zero() or linear_form.degree() != 1 or not linear_form.is_homogeneous():
        raise ValueError("deformation direction must be homogeneous linear")
    if not f.is_zero() and d != f.degree():
        raise ValueError(f"degree mismatch: linear_form^{d} has degree {d}, f has degree {f.degree()}")
    return f + linear_form**d * Fraction(s)


def evaluate_complex(f: Polynomial, point: Sequence[complex]) -> complex:
    value = f.evaluate(point)
    return complex(value)


# -- parsing -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def take_variable(self) -> int:
        ch = self.peek()
        start = self.pos
        self.pos += 1
        if ch == "x" and self.pos < len(self.text) and self.text[self.pos].isdigit():
            index = self.take_uint()
        elif ch in VAR_ALIASES:
            index = VAR_ALIASES[ch]
        else:
            self.pos = start
            raise self.error(f"unexpected character {ch!r}")
        if index >= self.nvars:
            self.pos = start
            raise self.error(f"variable index {index} out of range (nvars={self.nvars})")
        return index

    def parse_factor(self) -> Polynomial:
        ch = self.peek()
        if ch == "-" or ch.isdigit():
            sign = 1
            if ch == "-":
                self.pos += 1
                sign = -1
            num = self.take_uint()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.take_uint()
                if den == 0:
                    self.pos = den_pos
                    raise self.error("zero denominator")
            return Polynomial.constant(Fraction(sign * num, den), self.nvars)
        if ch.isalpha():
            index = self.take_variable()
            exponent = 1
            if self.peek() == "^":
                self.pos += 1
                exponent = self.take_uint()
            exps = [0] * self.nvars
            exps[index] = exponent
            return Polynomial({tuple(exps): Fraction(1)}, self.nvars)
        raise self.error(f"unexpected character {ch!r}" if ch else "unexpected end of input")

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while self.peek() == "*":
            self.pos += 1
            result = result * self.parse_factor()
        return result

    def parse_expr(self) -> Polynomial:
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        elif self.peek() == "+":
            self.pos += 1
        result = self.parse_term() * sign
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                result = result + self.parse_term()
            elif ch == "-":
                self.pos += 1
                result = result - self.parse_term()
            else:
                break
        return result

    def parse(self) -> Polynomial:
        result = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected character {self.text[self.pos]!r}")
        return result


def parse(text: str, nvars: int) -> Polynomial:
    """Parse polynomial text into canonical form; see the module grammar."""
    if nvars < 1:
        raise ValueError("nvars must be >= 1")
    return _Parser(text, nvars).parse()
