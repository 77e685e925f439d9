from typing import Literal

from pydantic import BaseModel, Field, computed_field, field_validator, model_validator

from src.schemas.cyclotomic import CyclotomicFunction
from src.schemas.polynomials import AtomicDecomposition, PolynomialRequest, WeightSystem
from src.schemas.roots import RootAction, RootMap

Check = Literal['theorem1', 'theorem2', 'remark2', 'reduced', 'oracle']
Shape = Literal['chain', 'loop', 'bp', 'loop2+fermat', 'chain2+fermat', 'mixed']
Theorem2Case = Literal['bp', 'loop2+fermat', 'chain2+fermat', 'chain', 'loop', 'a-form-excluded']
WitnessSource = Literal['geometric', 'canonical', 'diophantine']
Status = Literal['ok', 'failed', 'skipped', 'error']

ALL_CHECKS: tuple[Check, ...] = ('theorem1', 'theorem2', 'remark2', 'reduced', 'oracle')


class Theorem1Witness(BaseModel):
    """
    Both sides of the chain/loop duality: the reduced geometric-root zeta
    functions of f and f^T and the Saito dual of the first one.
    """
    shape: str
    n: int
    c: int
    c_T: int
    d: int
    root_f: CyclotomicFunction
    root_fT: CyclotomicFunction
    dual_root_f: CyclotomicFunction
    duality_holds: bool
    solution_count_f: int
    solution_count_fT: int
    closed_form_solutions_match: bool | None = None
    closed_form_realized: bool
    root_zetas_agree: bool
    reduced_identity: bool | None = None

    @computed_field
    @property
    def holds(self) -> bool:
        counts = self.shape != 'chain' or self.solution_count_f == self.c
        return (self.duality_holds and counts and self.closed_form_solutions_match is not False
                and self.reduced_identity is not False)


class Theorem2Verdict(BaseModel):
    case: Theorem2Case
    c: int
    c_T: int
    d: int
    root_exists_f: bool = False
    root_exists_fT: bool = False
    geometric_root_f: bool = False
    geometric_root_fT: bool = False
    duality_holds: bool | None = None
    witness_source: WitnessSource | None = None
    witness_within_bound: bool | None = None
    root_f: CyclotomicFunction | None = None
    root_fT: CyclotomicFunction | None = None
    geometric_duality: bool | None = None
    statement1: bool = True
    statement2: bool = True
    statement3: bool = True
    exceptional_flags: tuple[str, ...] = ()

    @computed_field
    @property
    def holds(self) -> bool:
        return self.statement1 and self.statement2 and self.statement3


class Remark2Witness(BaseModel):
    c: int
    c_T: int
    d: int
    root_exists_f: bool
    geometric_root_f: bool
    geometric_root_fT: bool
    root_f: CyclotomicFunction | None = None
    root_fT: CyclotomicFunction | None = None
    equivalence_holds: bool
    duality_holds: bool | None = None

    @computed_field
    @property
    def holds(self) -> bool:
        return self.equivalence_holds and self.duality_holds is not False


class ReducedDualityWitness(BaseModel):
    """
    For three variables and reduced weights: the Saito dual of the reduced zeta
    function of f is a root of degree c^T of the reduced zeta function of f^T.
    """
    c_T: int
    d: int
    dual_zeta_f: CyclotomicFunction
    zeta_fT: CyclotomicFunction
    is_root: bool
    geometric_match: bool | None = None

    @computed_field
    @property
    def holds(self) -> bool:
        return self.is_root and self.geometric_match is not False


class OracleCheck(BaseModel):
    paths: dict[str, CyclotomicFunction]
    agree: bool
    char_degree: int
    milnor: int | None = None
    milnor_consistent: bool | None = None

    @computed_field
    @property
    def holds(self) -> bool:
        return self.agree and self.milnor_consistent is not False


class DualityReport(BaseModel):
    polynomial: str
    matrix: tuple[tuple[int, ...], ...]
    shape: str
    weights: WeightSystem | None = None
    weights_T: WeightSystem | None = None
    zeta: CyclotomicFunction | None = None
    zeta_T: CyclotomicFunction | None = None
    root_f: CyclotomicFunction | None = None
    root_fT: CyclotomicFunction | None = None
    dual_root_f: CyclotomicFunction | None = None
    theorem1: Theorem1Witness | None = None
    theorem2: Theorem2Verdict | None = None
    remark2: Remark2Witness | None = None
    reduced: ReducedDualityWitness | None = None
    oracle: OracleCheck | None = None
    flags: tuple[str, ...] = ()
    messages: tuple[str, ...] = ()
    status: Status = 'ok'


class ScanConfig(BaseModel):
    n: tuple[int, ...] = (3,)
    min_exp: int = Field(default=2, ge=1)
    max_exp: int = Field(default=5, ge=1)
    shapes: tuple[Shape, ...] = ()
    checks: tuple[Check, ...] = ALL_CHECKS

    @field_validator('n')
    @classmethod
    def check_n(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(n < 1 or n > 6 for n in value):
            raise ValueError('variable counts must lie in [1, 6]')
        return tuple(sorted(set(value)))

    @model_validator(mode='after')
    def check_range(self) -> 'ScanConfig':
        if self.max_exp < self.min_exp:
            raise ValueError(f'max_exp {self.max_exp} is below min_exp {self.min_exp}')
        return self


class ScanSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0
    by_shape: dict[str, int] = {}
    flags: dict[str, int] = {}

    @computed_field
    @property
    def exit_code(self) -> int:
        return 1 if self.failed or self.errors else 0


class ScanResult(BaseModel):
    config: ScanConfig
    summary: ScanSummary
    reports: list[DualityReport]


class AnalysisResponse(BaseModel):
    polynomial: str
    names: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    weights: WeightSystem
    decomposition: AtomicDecomposition
    transpose: str
    weights_T: WeightSystem
    milnor: int | None = None
    is_A_form: bool
    critical_at_origin: bool
    critical_at_origin_T: bool
    zeta: CyclotomicFunction
    reduced_zeta: CyclotomicFunction
    reduced_zeta_T: CyclotomicFunction
    poincare: CyclotomicFunction
    orbit: CyclotomicFunction | None = None
    canonical_root: CyclotomicFunction | None = None
    root_actions: list[RootAction] = []
    root_maps: list[RootMap] = []
    geometric_root_zeta: CyclotomicFunction | None = None
    flags: tuple[str, ...] = ()


class RootRequest(PolynomialRequest):
    k: int | None = Field(default=None, ge=1)
    bound: int | None = Field(default=None, ge=0)


class RootResponse(BaseModel):
    k: int
    reduced_zeta: CyclotomicFunction
    root_exists: bool
    canonical_root: CyclotomicFunction | None = None
    roots: list[CyclotomicFunction] = []
    root_actions: list[RootAction] = []
    geometric_root_zetas: list[CyclotomicFunction] = []


class DualRequest(PolynomialRequest):
    degree: int | None = Field(default=None, ge=1)


class DualResponse(BaseModel):
    degree: int
    reduced_zeta: CyclotomicFunction
    dual: CyclotomicFunction


class TransposeResponse(BaseModel):
    polynomial: str
    transpose: str
    matrix: tuple[tuple[int, ...], ...]
    weights: WeightSystem
    weights_T: WeightSystem


class ZetaResponse(BaseModel):
    zeta: CyclotomicFunction
    reduced_zeta: CyclotomicFunction
    paths: dict[str, CyclotomicFunction]
