from fastapi import APIRouter
from fastapi.responses import ORJSONResponse

from src.routes.polynomials import http_error, load_polynomial
from src.schemas.polynomials import PolynomialRequest
from src.schemas.reports import (ReducedDualityWitness, Remark2Witness, ScanConfig, ScanResult, Theorem1Witness,
                                 Theorem2Verdict)
from src.services import duality
from src.services.errors import BHZetaError

router = APIRouter(prefix='/theorems', tags=['theorems'], default_response_class=ORJSONResponse)


@router.post('/theorem1')
def theorem1(body: PolynomialRequest) -> Theorem1Witness:
    """
    Chain/loop duality of the geometric-root zeta functions.

    :param body: A single chain or loop.
    :type body: PolynomialRequest
    :return: The witness; 409 when f is not a chain or loop.
    :rtype: Theorem1Witness
    """
    f = load_polynomial(body)
    try:
        return duality.verify_theorem1(f)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/theorem2')
def theorem2(body: PolynomialRequest) -> Theorem2Verdict:
    """
    The three statements for a polynomial in three variables.
    """
    f = load_polynomial(body)
    try:
        return duality.classify_theorem2(f)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/remark2')
def remark2(body: PolynomialRequest) -> Remark2Witness:
    f = load_polynomial(body)
    try:
        return duality.verify_remark2(f)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/reduced')
def reduced(body: PolynomialRequest) -> ReducedDualityWitness:
    f = load_polynomial(body)
    try:
        return duality.verify_reduced_duality(f)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/scan')
def scan(body: ScanConfig) -> ScanResult:
    """
    Run the checks over every enumerated polynomial of the requested families.

    :param body: Variable counts, exponent range, shapes and checks.
    :type body: ScanConfig
    :return: Summary and per-instance reports.
    :rtype: ScanResult
    """
    return duality.run_scan(body)
