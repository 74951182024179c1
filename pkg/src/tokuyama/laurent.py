"""
Exact arithmetic in ``Z[t][z_1^{+-1}, ..., z_n^{+-1}]``.

``t`` stands for ``q^{-1}``, so every coefficient is an honest polynomial in
``t`` with integer coefficients.  Laurent polynomials are sparse maps from
exponent vectors to nonzero :class:`UniPoly` coefficients; exponent vectors
are ordered lexicographically for serialization and display.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Number = Union[int, Fraction]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate integer polynomial in ``t``, lowest degree first.

    The zero polynomial has no coefficients at all.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def coerce(cls, value: "UniPoly | int | Sequence[int]") -> "UniPoly":
        if isinstance(value, UniPoly):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(tuple(value))

    @classmethod
    def tokuyama(cls, boxed: int, plain: int) -> "UniPoly":
        """Expand ``(-t)^boxed * (1 - t)^plain``."""
        sign = -1 if boxed % 2 else 1
        coeffs = [0] * boxed + [sign * (-1) ** k * comb(plain, k) for k in range(plain + 1)]
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree in ``t``; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "UniPoly | int") -> "UniPoly":
        if not isinstance(other, (UniPoly, int)):
            return NotImplemented
        other = UniPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly(tuple(x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly | int") -> "UniPoly":
        if not isinstance(other, (UniPoly, int)):
            return NotImplemented
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other: int) -> "UniPoly":
        if not isinstance(other, int):
            return NotImplemented
        return UniPoly.coerce(other) - self

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if not isinstance(other, (UniPoly, int)):
            return NotImplemented
        other = UniPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        result = UniPoly((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


T = UniPoly((0, 1))


class LaurentPoly:
    """A Laurent polynomial in ``n`` variables ``z_1..z_n`` over ``Z[t]``.

    Instances are treated as immutable; every operation returns a new value
    in canonical form (no zero coefficients stored).
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], "UniPoly | int | Sequence[int]"] | None = None):
        if nvars < 0:
            raise ValueError("number of variables must be non-negative")
        self.nvars = nvars
        canonical: dict[Exponent, UniPoly] = {}
        for exp, coeff in (terms or {}).items():
            exp = self._check_exponent(exp)
            coeff = UniPoly.coerce(coeff)
            if exp in canonical:
                coeff = canonical[exp] + coeff
            if coeff:
                canonical[exp] = coeff
            else:
                canonical.pop(exp, None)
        self._terms = canonical

    def _check_exponent(self, exp: Sequence[int]) -> Exponent:
        exp = tuple(int(e) for e in exp)
        if len(exp) != self.nvars:
            raise ValueError(f"exponent {exp} has {len(exp)} entries, ring has {self.nvars} variables")
        return exp

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: "UniPoly | int | Sequence[int]" = 1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[tuple[Sequence[int], "UniPoly | int"]]) -> "LaurentPoly":
        """Sum an iterable of ``(exponent, coefficient)`` pairs; duplicates are added."""
        acc: dict[Exponent, list[int]] = defaultdict(list)
        for exp, coeff in terms:
            coeffs = UniPoly.coerce(coeff).coeffs
            slot = acc[tuple(exp)]
            if len(slot) < len(coeffs):
                slot.extend([0] * (len(coeffs) - len(slot)))
            for k, c in enumerate(coeffs):
                slot[k] += c
        return cls(nvars, {exp: UniPoly(tuple(c)) for exp, c in acc.items()})

    def _same_ring(self, other: "LaurentPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"ring mismatch: {self.nvars} vs {other.nvars} variables")

    def _lift(self, other: "LaurentPoly | UniPoly | int") -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._same_ring(other)
            return other
        return LaurentPoly(self.nvars, {(0,) * self.nvars: other})

    def terms(self) -> list[tuple[Exponent, UniPoly]]:
        """Terms sorted lexicographically by exponent vector."""
        return sorted(self._terms.items())

    def coefficient(self, exp: Sequence[int]) -> UniPoly:
        return self._terms.get(tuple(exp), UniPoly())

    def exponents(self) -> set[Exponent]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, UniPoly)):
            other = self._lift(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other: "LaurentPoly | UniPoly | int") -> "LaurentPoly":
        other = self._lift(other)
        merged = dict(self._terms)
        for exp, coeff in other._terms.items():
            merged[exp] = merged[exp] + coeff if exp in merged else coeff
        return LaurentPoly(self.nvars, merged)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | UniPoly | int") -> "LaurentPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other: "UniPoly | int") -> "LaurentPoly":
        return self._lift(other) - self

    def __mul__(self, other: "LaurentPoly | UniPoly | int") -> "LaurentPoly":
        other = self._lift(other)
        products = (
            (tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            for e1, c1 in self._terms.items()
            for e2, c2 in other._terms.items()
        )
        return LaurentPoly.from_terms(self.nvars, products)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("only non-negative powers are supported")
        result = LaurentPoly.one(self.nvars)
        for _ in range(exponent):
            result = result * self
        return result

    def specialize_t(self, value: int) -> "LaurentPoly":
        """Substitute ``t := value``; the result has constant coefficients."""
        return LaurentPoly(self.nvars, {exp: c(value) for exp, c in self._terms.items()})

    def eval_at(self, z: Sequence[Number], t: Number) -> Fraction:
        """Exact evaluation at a point with nonzero rational coordinates."""
        if len(z) != self.nvars:
            raise ValueError(f"point has {len(z)} coordinates, ring has {self.nvars} variables")
        z = [Fraction(v) for v in z]
        if any(v == 0 for v in z):
            raise ZeroDivisionError("all z-coordinates must be nonzero")
        t = Fraction(t)
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            term = Fraction(coeff(t))
            for base, e in zip(z, exp):
                term *= base**e
            total += term
        return total

    def permute_variables(self, perm: Sequence[int]) -> "LaurentPoly":
        """Send ``z_k`` to ``z_{perm[k]}`` (0-indexed permutation)."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.nvars - 1}")
        out = {}
        for exp, coeff in self._terms.items():
            image = [0] * self.nvars
            for k, e in enumerate(exp):
                image[perm[k]] = e
            out[tuple(image)] = coeff
        return LaurentPoly(self.nvars, out)

    def to_list(self) -> list[dict]:
        return [{"exp": list(exp), "coeff": list(c.coeffs)} for exp, c in self.terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_list(cls, data: list[dict], nvars: int | None = None) -> "LaurentPoly":
        if nvars is None:
            if not data:
                raise ValueError("cannot infer the number of variables of an empty polynomial")
            nvars = len(data[0]["exp"])
        return cls.from_terms(nvars, ((item["exp"], UniPoly(tuple(item["coeff"]))) for item in data))

    @classmethod
    def from_json(cls, text: str, nvars: int | None = None) -> "LaurentPoly":
        return cls.from_list(json.loads(text), nvars)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, coeff in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                f"z{k}" if e == 1 else f"z{k}^{e}" if e > 0 else f"z{k}^({e})"
                for k, e in enumerate(exp, start=1)
                if e
            )
            if len(coeff.coeffs) == 1 and coeff.coeffs[0] in (1, -1) and mono:
                piece = mono if coeff.coeffs[0] == 1 else "-" + mono
            elif not mono:
                piece = f"({coeff})" if len([c for c in coeff.coeffs if c]) > 1 else str(coeff)
            else:
                piece = f"({coeff})*{mono}" if len([c for c in coeff.coeffs if c]) > 1 else f"{coeff}*{mono}"
            pieces.append(piece)
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {str(self)!r})"
