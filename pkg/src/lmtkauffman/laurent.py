"""Exact Laurent polynomial arithmetic over the integers.

Two sparse representations: ``LaurentA`` for one variable ``a`` and
``LaurentAZ`` for two variables ``a`` and ``z``.  Coefficients are Python
ints, so nothing here can overflow.  Both classes keep a canonical term
dict (no zero coefficients), which makes equality and hashing structural.

The text form used by :func:`parse_poly` and :func:`format_poly` is a sum
of signed monomials ``c*a^i*z^j`` with optional parts, for example
``-2*a^-1 + z^2`` or ``a + a^-1``.  Terms are printed in ascending order
of ``(a exponent, z exponent)``, and parsing the printed form gives back
an equal polynomial.
"""

from __future__ import annotations

from typing import Iterator, Mapping


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but no exact quotient exists."""


class SpecializationError(ArithmeticError):
    """Substituting z did not produce a Laurent polynomial in a."""


class PolySyntaxError(ValueError):
    """Polynomial text that does not match the monomial grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _cleaned(terms) -> dict:
    return {e: c for e, c in terms.items() if c}


class LaurentA:
    """A Laurent polynomial in ``a`` with integer coefficients.

    >>> p = LaurentA({1: 1, -1: 1})
    >>> str(p * p)
    'a^-2 + 2 + a^2'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        object.__setattr__(self, "_terms", _cleaned(terms or {}))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentA is immutable")

    @classmethod
    def zero(cls) -> "LaurentA":
        return cls()

    @classmethod
    def one(cls) -> "LaurentA":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, a_exp: int = 0) -> "LaurentA":
        return cls({a_exp: coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, a_exp: int) -> int:
        return self._terms.get(a_exp, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentA({0: other})
        if not isinstance(other, LaurentA):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentA":
        return LaurentA({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentA":
        if isinstance(other, int):
            other = LaurentA({0: other})
        if not isinstance(other, LaurentA):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentA(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentA":
        return self + (-other if isinstance(other, LaurentA) else -LaurentA({0: other}))

    def __rsub__(self, other) -> "LaurentA":
        return (-self) + other

    def __mul__(self, other) -> "LaurentA":
        if isinstance(other, int):
            other = LaurentA({0: other})
        if not isinstance(other, LaurentA):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentA(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentA":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = LaurentA.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert_a(self) -> "LaurentA":
        """Substitute a -> a^-1."""
        return LaurentA({-e: c for e, c in self._terms.items()})

    def abs_coeff_sum(self) -> int:
        return sum(abs(c) for c in self._terms.values())

    def divide_exact(self, other: "LaurentA") -> "LaurentA":
        """Return q with self == q * other, or raise NotDivisibleError."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentA.zero()
        lo = min(self._terms) - min(other._terms)
        hi = max(self._terms) - max(other._terms)
        if lo > hi:
            raise NotDivisibleError("no exact quotient")
        rem = dict(self._terms)
        quot: dict = {}
        lead = max(other._terms)
        lead_c = other._terms[lead]
        while rem:
            e = max(rem)
            q_e = e - lead
            q_c, r = divmod(rem[e], lead_c)
            if r or not lo <= q_e <= hi:
                raise NotDivisibleError("no exact quotient")
            quot[q_e] = q_c
            for oe, oc in other._terms.items():
                k = q_e + oe
                v = rem.get(k, 0) - q_c * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentA(quot)

    def as_az(self) -> "LaurentAZ":
        return LaurentAZ({(e, 0): c for e, c in self._terms.items()})

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentA({self._terms!r})"


class LaurentAZ:
    """A Laurent polynomial in ``a`` and ``z`` with integer coefficients.

    Terms are keyed by ``(a_exp, z_exp)``.

    >>> delta = LaurentAZ({(1, -1): 1, (-1, -1): 1, (0, 0): -1})
    >>> str(delta)
    'a^-1*z^-1 - 1 + a*z^-1'
    >>> delta.substitute_z() == LaurentA({0: -2})
    True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        object.__setattr__(self, "_terms", _cleaned(terms or {}))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentAZ is immutable")

    @classmethod
    def zero(cls) -> "LaurentAZ":
        return cls()

    @classmethod
    def one(cls) -> "LaurentAZ":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, a_exp: int = 0, z_exp: int = 0) -> "LaurentAZ":
        return cls({(a_exp, z_exp): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, a_exp: int, z_exp: int) -> int:
        return self._terms.get((a_exp, z_exp), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentAZ({(0, 0): other})
        if not isinstance(other, LaurentAZ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentAZ":
        return LaurentAZ({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentAZ":
        if isinstance(other, int):
            other = LaurentAZ({(0, 0): other})
        if not isinstance(other, LaurentAZ):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentAZ(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentAZ":
        if isinstance(other, int):
            other = LaurentAZ({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other) -> "LaurentAZ":
        return (-self) + other

    def __mul__(self, other) -> "LaurentAZ":
        if isinstance(other, int):
            other = LaurentAZ({(0, 0): other})
        if not isinstance(other, LaurentAZ):
            return NotImplemented
        out: dict = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                e = (a1 + a2, z1 + z2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentAZ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentAZ":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = LaurentAZ.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert_a(self) -> "LaurentAZ":
        """Substitute a -> a^-1, leaving z alone."""
        return LaurentAZ({(-a, z): c for (a, z), c in self._terms.items()})

    def divide_exact(self, other: "LaurentAZ") -> "LaurentAZ":
        """Return q with self == q * other, or raise NotDivisibleError.

        Works term by term against the lexicographically largest term of
        the divisor.  Every quotient exponent must land in the box fixed
        by the extreme exponents of dividend and divisor, which bounds
        the loop and turns "not divisible" into a definite failure
        instead of a runaway descent.
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentAZ.zero()
        box = []
        for axis in (0, 1):
            lo = min(e[axis] for e in self._terms) - min(e[axis] for e in other._terms)
            hi = max(e[axis] for e in self._terms) - max(e[axis] for e in other._terms)
            if lo > hi:
                raise NotDivisibleError("no exact quotient")
            box.append((lo, hi))
        rem = dict(self._terms)
        quot: dict = {}
        lead = max(other._terms)
        lead_c = other._terms[lead]
        while rem:
            e = max(rem)
            q_e = (e[0] - lead[0], e[1] - lead[1])
            q_c, r = divmod(rem[e], lead_c)
            if r or not all(lo <= q_e[i] <= hi for i, (lo, hi) in enumerate(box)):
                raise NotDivisibleError("no exact quotient")
            quot[q_e] = q_c
            for oe, oc in other._terms.items():
                k = (q_e[0] + oe[0], q_e[1] + oe[1])
                v = rem.get(k, 0) - q_c * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentAZ(quot)

    def substitute_z(self) -> LaurentA:
        """Evaluate at z = -a - a^-1 and return the result in a alone.

        Negative z exponents are cleared first by multiplying through by
        z^N, substituting, and then dividing exactly by (-a - a^-1)^N.
        If that division fails the value is not a Laurent polynomial in
        a, which no well-formed invariant computed here can produce, so
        the failure is raised as SpecializationError.
        """
        if not self:
            return LaurentA.zero()
        neg = LaurentA({1: -1, -1: -1})
        shift = max(0, -min(z for _, z in self._terms))
        acc = LaurentA.zero()
        powers = {0: LaurentA.one()}

        def neg_pow(k: int) -> LaurentA:
            if k not in powers:
                powers[k] = neg_pow(k - 1) * neg
            return powers[k]

        for (a_exp, z_exp), c in self._terms.items():
            acc = acc + LaurentA({a_exp: c}) * neg_pow(z_exp + shift)
        if shift:
            try:
                acc = acc.divide_exact(neg_pow(shift))
            except NotDivisibleError:
                raise SpecializationError("specialization not Laurent") from None
        return acc

    def abs_coeff_sum(self) -> int:
        return sum(abs(c) for c in self._terms.values())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentAZ({self._terms!r})"


def _sorted_terms(p) -> Iterator[tuple]:
    if isinstance(p, LaurentA):
        for e in sorted(p.terms):
            yield (e, 0), p.coeff(e)
    elif isinstance(p, LaurentAZ):
        for e in sorted(p.terms):
            yield e, p.terms[e]
    else:
        raise TypeError(f"cannot format {type(p).__name__}")


def format_poly(p) -> str:
    """Render a LaurentA or LaurentAZ as signed monomial text."""
    pieces = []
    for (a_exp, z_exp), c in _sorted_terms(p):
        factors = []
        if a_exp:
            factors.append("a" if a_exp == 1 else f"a^{a_exp}")
        if z_exp:
            factors.append("z" if z_exp == 1 else f"z^{z_exp}")
        if abs(c) != 1 or not factors:
            factors.insert(0, str(abs(c)))
        body = "*".join(factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces) if pieces else "0"


def parse_poly(text: str) -> LaurentAZ:
    """Parse signed monomial text into a LaurentAZ.

    Accepts what format_poly emits plus free whitespace, omitted ``*``
    between factors, and repeated terms (which merge additively).
    """
    terms: dict = {}
    i, n = 0, len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_int(i: int, what: str) -> tuple[int, int]:
        j = i
        if j < n and text[j] in "+-":
            j += 1
        k = j
        while k < n and text[k].isdigit():
            k += 1
        if k == j:
            raise PolySyntaxError(f"expected {what}", i)
        return int(text[i:k]), k

    i = skip_ws(i)
    first = True
    while i < n:
        sign = 1
        if text[i] == "+":
            if first:
                raise PolySyntaxError("unexpected sign", i)
            i = skip_ws(i + 1)
        elif text[i] == "-":
            sign = -1
            i = skip_ws(i + 1)
        elif not first:
            raise PolySyntaxError("expected + or - between terms", i)
        coeff = None
        a_exp = 0
        z_exp = 0
        if i < n and text[i].isdigit():
            coeff, i = read_int(i, "coefficient")
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
        for var in "az":
            if i < n and text[i] == var:
                i += 1
                exp = 1
                if i < n and text[i] == "^":
                    exp, i = read_int(i + 1, "exponent")
                if var == "a":
                    a_exp = exp
                else:
                    z_exp = exp
                i = skip_ws(i)
                if i < n and text[i] == "*":
                    i = skip_ws(i + 1)
        if coeff is None and a_exp == 0 and z_exp == 0:
            raise PolySyntaxError("expected a term", i)
        c = sign * (1 if coeff is None else coeff)
        key = (a_exp, z_exp)
        terms[key] = terms.get(key, 0) + c
        first = False
        i = skip_ws(i)
    if first:
        raise PolySyntaxError("empty polynomial text", 0)
    return LaurentAZ(terms)
