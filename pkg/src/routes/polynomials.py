from fastapi import APIRouter, HTTPException, status
from fastapi.responses import ORJSONResponse

from src.schemas.polynomials import InvertiblePolynomial, PolynomialRequest
from src.schemas.reports import (AnalysisResponse, DualRequest, DualResponse, RootRequest, RootResponse,
                                 TransposeResponse, ZetaResponse)
from src.services import duality
from src.services.errors import BHZetaError, InconsistentResult, PreconditionFailed
from src.services.invpoly import from_request

router = APIRouter(prefix='/polynomials', tags=['polynomials'], default_response_class=ORJSONResponse)


def http_error(error: Exception) -> HTTPException:
    """
    Translate a toolkit error into the HTTP error the routes raise.

    :param error: The error raised by a service.
    :type error: Exception
    :return: 409 for failed preconditions, 500 when two computations disagree, 422 for invalid input.
    :rtype: HTTPException
    """
    if isinstance(error, InconsistentResult):
        return HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(error))
    if isinstance(error, PreconditionFailed):
        return HTTPException(status_code=status.HTTP_409_CONFLICT, detail=str(error))

    return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(error))


def load_polynomial(body: PolynomialRequest) -> InvertiblePolynomial:
    try:
        return from_request(body)
    except (BHZetaError, ValueError) as error:
        raise http_error(error)


@router.post('/analyze')
def analyze(body: PolynomialRequest) -> AnalysisResponse:
    """
    Weights, decomposition, transpose, Milnor number, zeta functions and roots of one polynomial.

    :param body: Polynomial text or exponent matrix.
    :type body: PolynomialRequest
    :return: The analysis.
    :rtype: AnalysisResponse
    """
    f = load_polynomial(body)
    try:
        return duality.analyze(f)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/transpose')
def transpose(body: PolynomialRequest) -> TransposeResponse:
    f = load_polynomial(body)
    try:
        return duality.transpose_summary(f)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/zeta')
def zeta(body: PolynomialRequest) -> ZetaResponse:
    """
    Unreduced and reduced monodromy zeta function with every computation path that applies.
    """
    f = load_polynomial(body)
    try:
        return duality.zeta_summary(f)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/roots')
def roots(body: RootRequest) -> RootResponse:
    """
    Formal roots of degree ``k`` of the reduced zeta function and the geometric root actions.

    :param body: Polynomial plus optional degree ``k`` (default c) and exponent bound.
    :type body: RootRequest
    :return: The roots.
    :rtype: RootResponse
    """
    f = load_polynomial(body)
    try:
        return duality.root_summary(f, body.k, body.bound)
    except BHZetaError as error:
        raise http_error(error)


@router.post('/dual')
def dual(body: DualRequest) -> DualResponse:
    f = load_polynomial(body)
    try:
        return duality.dual_summary(f, body.degree)
    except BHZetaError as error:
        raise http_error(error)
