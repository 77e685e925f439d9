from typing import Annotated, Literal

from pydantic import BaseModel, Field, computed_field


class InvertiblePolynomial(BaseModel):
    """
    Unit-coefficient invertible polynomial: row i of ``matrix`` holds the
    exponents of monomial i, column j belongs to variable ``names[j]``.
    """
    matrix: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    class Config:
        frozen = True

    @property
    def n(self) -> int:
        return len(self.names)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)


class WeightSystem(BaseModel):
    w: tuple[int, ...]
    d: int
    c: int

    class Config:
        frozen = True

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def reduced(self) -> bool:
        return self.c == 1

    def __str__(self) -> str:
        return f'({",".join(map(str, self.w))};{self.d})'


class Chain(BaseModel):
    """
    x_{v1}^{p1} x_{v2} + ... + x_{vm}^{pm}; ``variables`` are listed in chain order.
    """
    kind: Literal['chain'] = 'chain'
    exponents: tuple[int, ...]
    variables: tuple[int, ...]

    class Config:
        frozen = True


class Loop(BaseModel):
    """
    x_{v1}^{p1} x_{v2} + ... + x_{vm}^{pm} x_{v1}, m >= 2.
    """
    kind: Literal['loop'] = 'loop'
    exponents: tuple[int, ...]
    variables: tuple[int, ...]

    class Config:
        frozen = True


Atom = Annotated[Chain | Loop, Field(discriminator='kind')]


class AtomicDecomposition(BaseModel):
    atoms: tuple[Atom, ...]

    class Config:
        frozen = True

    @computed_field
    @property
    def shape(self) -> str:
        """
        ``chain``/``loop`` for a single atom, ``bp`` for a sum of pure powers,
        ``loop2+fermat``/``chain2+fermat`` for the mixed three-variable shapes,
        ``mixed`` otherwise.
        """
        if len(self.atoms) == 1:
            return self.atoms[0].kind
        if all(atom.kind == 'chain' and len(atom.exponents) == 1 for atom in self.atoms):
            return 'bp'

        sizes = sorted((len(atom.exponents), atom.kind) for atom in self.atoms)
        if sizes == [(1, 'chain'), (2, 'loop')]:
            return 'loop2+fermat'
        if sizes == [(1, 'chain'), (2, 'chain')]:
            return 'chain2+fermat'

        return 'mixed'


class PolynomialRequest(BaseModel):
    polynomial: str | None = Field(default=None, max_length=2000)
    matrix: list[list[int]] | None = None
    names: list[str] | None = None
    allow_coefficients: bool = False

