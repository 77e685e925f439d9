from collections.abc import Mapping
from typing import Any

from pydantic import BaseModel, field_validator, model_serializer, model_validator


def _factor(period: int, exponent: int, latex: bool = False) -> str:
    base = '(1-t)' if period == 1 else (f'(1-t^{{{period}}})' if latex else f'(1-t^{period})')

    if exponent == 1:
        return base

    return f'{base}^{{{exponent}}}' if latex else f'{base}^{exponent}'


class CyclotomicFunction(BaseModel):
    """
    A finite product of factors (1 - t^m)^s_m.

    The support is kept canonical: periods are positive, sorted ascending, and
    zero exponents never appear, so two values are equal exactly when their
    supports are equal. Accepts a mapping ``{m: s}``, a list of ``[m, s]`` pairs
    (repeated periods are summed) or the keyword ``support``. Serializes to the
    sorted list of ``[m, s]`` pairs.
    """
    support: tuple[tuple[int, int], ...] = ()

    class Config:
        frozen = True

    def __init__(self, support: Any = (), **data: Any):
        super().__init__(support=support, **data)

    @model_validator(mode='before')
    @classmethod
    def wrap_support(cls, data: Any) -> Any:
        if isinstance(data, cls):
            return {'support': data.support}
        if isinstance(data, Mapping) and set(data) <= {'support'}:
            return data
        return {'support': data}

    @field_validator('support', mode='before')
    @classmethod
    def canonical_support(cls, value: Any) -> tuple[tuple[int, int], ...]:
        items = value.items() if isinstance(value, Mapping) else value
        exponents: dict[int, int] = {}

        for period, exponent in items:
            period, exponent = int(period), int(exponent)
            if period < 1:
                raise ValueError(f'period {period} is not a positive integer')
            exponents[period] = exponents.get(period, 0) + exponent

        return tuple(sorted((m, s) for m, s in exponents.items() if s != 0))

    @model_serializer
    def serialize(self) -> list[list[int]]:
        return [[m, s] for m, s in self.support]

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.support)

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.support)

    @property
    def is_one(self) -> bool:
        return not self.support

    def exponent(self, period: int) -> int:
        return self.exponents.get(period, 0)

    def to_text(self) -> str:
        """
        Render as ``(1-t^15)^4/((1-t)(1-t^5)^3)``.
        """
        numerator = ''.join(_factor(m, s) for m, s in self.support if s > 0)
        denominator = [_factor(m, -s) for m, s in self.support if s < 0]

        if not denominator:
            return numerator or '1'
        if len(denominator) == 1:
            return f'{numerator or "1"}/{denominator[0]}'

        return f'{numerator or "1"}/({"".join(denominator)})'

    def to_latex(self) -> str:
        numerator = ''.join(_factor(m, s, latex=True) for m, s in self.support if s > 0) or '1'
        denominator = ''.join(_factor(m, -s, latex=True) for m, s in self.support if s < 0)

        return f'\\frac{{{numerator}}}{{{denominator}}}' if denominator else numerator

    def __str__(self) -> str:
        return self.to_text()
