"""
Sparse multivariate polynomials over the integers in ``t1..tn``.

>>> t1, t2 = Polynomial.variables(2)
>>> str((t1 + t2) * t2)
't1*t2 + t2^2'
>>> str(act(((-1, 1), (0, 1)), t2))
't1 + t2'
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

__all__ = ["Polynomial", "act", "linear_form"]

Exponents = tuple[int, ...]


class Polynomial:
    """An immutable integer polynomial in a fixed number of variables.

    Terms live in a dict from exponent tuples to nonzero ints.  Plain ints
    are accepted wherever a polynomial is expected.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] = ()):
        self.nvars = nvars
        acc: dict[Exponents, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length for {nvars} variables")
            acc[exps] = acc.get(exps, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c: int) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        """The variable ``t_i`` (1-based)."""
        return cls(nvars, {tuple(int(k == i - 1) for k in range(nvars)): 1})

    @classmethod
    def variables(cls, nvars: int) -> tuple[Polynomial, ...]:
        return tuple(cls.variable(nvars, i) for i in range(1, nvars + 1))

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def coefficient(self, exps: Exponents) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_nonnegative(self) -> bool:
        """True when every coefficient is >= 0."""
        return all(c > 0 for c in self._terms.values())

    def is_linear_form(self) -> bool:
        return all(sum(e) == 1 for e in self._terms)

    def linear_coefficients(self) -> tuple[int, ...]:
        if not self.is_linear_form():
            raise ValueError(f"{self} is not a linear form")
        out = [0] * self.nvars
        for e, c in self._terms.items():
            out[e.index(1)] = c
        return tuple(out)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Algebra map sending ``t_i`` to ``images[i-1]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        out_vars = images[0].nvars if images else self.nvars
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.one(out_vars)} for _ in images]

        def pw(k, e):
            if e not in powers[k]:
                powers[k][e] = images[k] ** e
            return powers[k][e]

        total = Polynomial.zero(out_vars)
        for e, c in self._terms.items():
            term = Polynomial.constant(out_vars, c)
            for k, ek in enumerate(e):
                if ek:
                    term = term * pw(k, ek)
            total = total + term
        return total

    # -- printing -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in graded lexicographic order with t1 > t2 > ..."""
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-a for a in item[0])))

    def format(self, explicit: bool = False) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"t{k}" if a == 1 else f"t{k}^{a}" for k, a in enumerate(e, start=1) if a)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1 and not explicit:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"


def linear_form(coords: Sequence[int]) -> Polynomial:
    """The image ``sum_i coords[i] t_i`` of a root vector."""
    n = len(coords)
    return Polynomial(n, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coords)})


def act(s: Sequence[Sequence[int]], p: Polynomial) -> Polynomial:
    """Apply the lattice automorphism ``s`` to ``p`` by ``t_i -> s(alpha_i)``."""
    n = len(s)
    images = [linear_form([s[r][i] for r in range(n)]) for i in range(n)]
    return p.substitute(images)
