import typing as t
from dataclasses import dataclass

import sympy
from sympy.core.sympify import SympifyError

from orbitsieve_core.exceptions import DimensionMismatchError, PolynomialParsingError

Exponents = t.Tuple[int, ...]
Terms = t.Tuple[t.Tuple[Exponents, int], ...]


@dataclass(frozen=True)
class Polynomial:
    """Sparse integer polynomial in ``nvars`` variables.

    Examples:
        Product of coordinates: ``Polynomial.from_expression('x0*x1', nvars=2)``

        Univariate: ``Polynomial.from_expression('T**2 + 1', variables=('T',))``
    """

    nvars: int
    terms: Terms

    @classmethod
    def from_terms(cls, nvars: int, terms: t.Iterable[t.Tuple[t.Sequence[int], int]]) -> 'Polynomial':
        merged: t.Dict[Exponents, int] = {}
        for exponents, coefficient in terms:
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != nvars or any(e < 0 for e in exponents):
                raise DimensionMismatchError(f'Monomial {exponents} does not fit {nvars} variables')
            merged[exponents] = merged.get(exponents, 0) + int(coefficient)

        return cls(nvars=nvars, terms=tuple(sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_expression(
        cls, expression: str, nvars: t.Optional[int] = None, variables: t.Optional[t.Sequence[str]] = None
    ) -> 'Polynomial':
        """Parse an integer polynomial.

        Args:
            expression: Expression understood by :func:`sympy.sympify`.
            nvars: Number of variables named ``x0 .. x{nvars-1}``.
            variables: Explicit variable names, overrides ``nvars``.
        """
        if variables is None:
            variables = [f'x{i}' for i in range(nvars or 1)]

        symbols = sympy.symbols(list(variables))
        try:
            parsed = sympy.Poly(sympy.sympify(expression, locals=dict(zip(variables, symbols))), *symbols)
        except (SympifyError, sympy.PolynomialError, TypeError) as e:
            raise PolynomialParsingError(f"Can't parse polynomial '{expression}'") from e

        terms = []
        for exponents, coefficient in parsed.terms():
            if not coefficient.is_integer:
                raise PolynomialParsingError(f"Polynomial '{expression}' has a non-integer coefficient {coefficient}")
            terms.append((exponents, int(coefficient)))

        return cls.from_terms(len(symbols), terms)

    @classmethod
    def constant(cls, value: int, nvars: int = 1) -> 'Polynomial':
        return cls.from_terms(nvars, [((0,) * nvars, value)])

    @classmethod
    def coordinate(cls, index: int, nvars: int) -> 'Polynomial':
        return cls.from_terms(nvars, [(tuple(1 if i == index else 0 for i in range(nvars)), 1)])

    @classmethod
    def coordinate_product(cls, nvars: int) -> 'Polynomial':
        return cls.from_terms(nvars, [((1,) * nvars, 1)])

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, point: t.Sequence[int]) -> int:
        return self.evaluate(point)

    def evaluate(self, point: t.Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise DimensionMismatchError(f'Polynomial in {self.nvars} variables evaluated at {len(point)} coordinates')

        total = 0
        for exponents, coefficient in self.terms:
            value = coefficient
            for x, e in zip(point, exponents):
                if e:
                    value *= x**e
            total += value
        return total

    def evaluate_mod(self, point: t.Sequence[int], d: int) -> int:
        if len(point) != self.nvars:
            raise DimensionMismatchError(f'Polynomial in {self.nvars} variables evaluated at {len(point)} coordinates')

        total = 0
        for exponents, coefficient in self.terms:
            value = coefficient % d
            for x, e in zip(point, exponents):
                if e:
                    value = value * pow(x, e, d) % d
            total += value
        return total % d

    def is_zero_mod(self, p: int) -> bool:
        return all(c % p == 0 for _, c in self.terms)

    def dense_coefficients(self) -> t.List[int]:
        """Coefficients of a univariate polynomial, highest degree first."""
        if self.nvars != 1:
            raise DimensionMismatchError('Dense coefficients are defined for univariate polynomials only')

        coefficients = [0] * (self.degree + 1)
        for (e,), c in self.terms:
            coefficients[self.degree - e] = c
        return coefficients

    def __str__(self) -> str:
        if not self.terms:
            return '0'

        parts = []
        for exponents, coefficient in self.terms:
            monomial = '*'.join(f'x{i}**{e}' if e > 1 else f'x{i}' for i, e in enumerate(exponents) if e)
            parts.append(f'{coefficient}*{monomial}' if monomial else str(coefficient))
        return ' + '.join(parts)
