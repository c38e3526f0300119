"""Sparse exact polynomials in the fixed variables (t, x, y, z).

Coefficients are ``fractions.Fraction``; exponent vectors are 4-tuples of
nonnegative ints.  Zero coefficients are never stored, so ``terms`` is a
canonical representation and equality is plain dict equality.  The string
form lists terms in graded lexicographic order, which also fixes the
serialization order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

VARIABLES = ("t", "x", "y", "z")
Exponent = tuple[int, int, int, int]

_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}


def _unit_exp(var: str, power: int = 1) -> Exponent:
    if var not in _VAR_INDEX:
        raise ValueError("unknown variable %r" % var)
    e = [0, 0, 0, 0]
    e[_VAR_INDEX[var]] = power
    return tuple(e)


@dataclass(frozen=True, eq=False)
class SparsePoly:
    """Polynomial as a mapping exponent -> nonzero rational coefficient."""

    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exp, coef in self.terms.items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            exp = tuple(int(e) for e in exp)
            if len(exp) != 4 or any(e < 0 for e in exp):
                raise ValueError("bad exponent vector %r" % (exp,))
            clean[exp] = coef
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "SparsePoly":
        return SparsePoly({})

    @staticmethod
    def const(value) -> "SparsePoly":
        return SparsePoly({(0, 0, 0, 0): Fraction(value)})

    @staticmethod
    def variable(name: str) -> "SparsePoly":
        return SparsePoly({_unit_exp(name): Fraction(1)})

    @staticmethod
    def monomial(coef, **powers: int) -> "SparsePoly":
        e = [0, 0, 0, 0]
        for var, p in powers.items():
            if var not in _VAR_INDEX:
                raise ValueError("unknown variable %r" % var)
            if p < 0:
                raise ValueError("negative exponent")
            e[_VAR_INDEX[var]] += p
        return SparsePoly({tuple(e): Fraction(coef)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "SparsePoly":
        other = _coerce(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + coef
        return SparsePoly(out)

    def __radd__(self, other) -> "SparsePoly":
        return self.__add__(other)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "SparsePoly":
        other = _coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return SparsePoly(out)

    def __rmul__(self, other) -> "SparsePoly":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    # -- structure queries --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = _VAR_INDEX[var]
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def order(self, var: str) -> int:
        """Smallest exponent of ``var`` over all terms; -1 if zero poly."""
        i = _VAR_INDEX[var]
        return min((e[i] for e in self.terms), default=-1)

    def uses(self, var: str) -> bool:
        i = _VAR_INDEX[var]
        return any(e[i] for e in self.terms)

    def coefficient(self, var: str, power: int) -> "SparsePoly":
        """Coefficient of var^power, as a polynomial in the other variables."""
        i = _VAR_INDEX[var]
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                reduced = list(e)
                reduced[i] = 0
                out[tuple(reduced)] = c
        return SparsePoly(out)

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0, 0, 0), Fraction(0))

    def substitute_value(self, var: str, value) -> "SparsePoly":
        """Plug a rational constant into one variable."""
        i = _VAR_INDEX[var]
        value = Fraction(value)
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            scaled = c * value ** e[i]
            reduced = list(e)
            reduced[i] = 0
            key = tuple(reduced)
            out[key] = out.get(key, Fraction(0)) + scaled
        return SparsePoly(out)

    def substitute(self, var: str, replacement: "SparsePoly") -> "SparsePoly":
        """Plug a polynomial into one variable, exactly."""
        i = _VAR_INDEX[var]
        powers: dict[int, SparsePoly] = {0: SparsePoly.const(1)}

        def power_of(k: int) -> SparsePoly:
            if k not in powers:
                powers[k] = power_of(k - 1) * replacement
            return powers[k]

        result = SparsePoly.zero()
        for e, c in self.terms.items():
            reduced = list(e)
            reduced[i] = 0
            base = SparsePoly({tuple(reduced): c})
            result = result + base * power_of(e[i])
        return result

    def divide_by(self, var: str, power: int) -> "SparsePoly":
        """Exact division by var^power; raises if any term lacks the factor."""
        i = _VAR_INDEX[var]
        out = {}
        for e, c in self.terms.items():
            if e[i] < power:
                raise ValueError("%s^%d does not divide every term" % (var, power))
            reduced = list(e)
            reduced[i] -= power
            out[tuple(reduced)] = c
        return SparsePoly(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            coef = self.terms[exp]
            mono = "*".join(
                v if p == 1 else "%s^%d" % (v, p)
                for v, p in zip(VARIABLES, exp)
                if p
            )
            if not mono:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(mono)
            elif coef == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (coef, mono))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def _coerce(value) -> SparsePoly:
    if isinstance(value, SparsePoly):
        return value
    if isinstance(value, (int, Fraction)):
        return SparsePoly.const(value)
    raise TypeError("cannot coerce %r to SparsePoly" % (value,))


T = SparsePoly.variable("t")
X = SparsePoly.variable("x")
Y = SparsePoly.variable("y")
Z = SparsePoly.variable("z")
