from fractions import Fraction

from pydantic import BaseModel, field_serializer, field_validator


class RootAction(BaseModel):
    """
    Generator of a Z_k action x_j -> exp(2 pi i m_j / k) x_j with f(Sigma x) = sigma f(x),
    i.e. E m = (1, ..., 1) mod k. Residues are kept in [0, k).
    """
    k: int
    m: tuple[int, ...]

    class Config:
        frozen = True


class RootMap(BaseModel):
    """
    Rotation numbers b_j of the geometric root Sigma^{-1} o Gamma_{1/k}, reduced to [0, 1).
    """
    k: int
    b: tuple[Fraction, ...]

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @field_validator('b', mode='before')
    @classmethod
    def reduce_mod_one(cls, value):
        return tuple(Fraction(item) % 1 for item in value)

    @field_serializer('b')
    def serialize_b(self, b: tuple[Fraction, ...]) -> list[str]:
        return [str(item) for item in b]
