"""
Command-line front end ``bhzeta``: analyze single polynomials, verify the
duality statements and scan families of polynomials.
"""
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated, Optional

import click
import typer

from src.conf.config import settings
from src.conf.log import get_logger, setup_logging
from src.schemas.polynomials import InvertiblePolynomial
from src.schemas.reports import ALL_CHECKS, ScanConfig
from src.services import cyclo, duality
from src.services.errors import BHZetaError, InconsistentResult
from src.services.invpoly import from_json, parse_polynomial
from src.services.reports import render, report_line, summary_line

logger = get_logger('cli')


class OutputFormat(str, Enum):
    json = 'json'
    csv = 'csv'
    latex = 'latex'
    text = 'text'


app = typer.Typer(name='bhzeta', no_args_is_help=True, add_completion=False,
                  help='Monodromy zeta functions and Berglund-Hubsch duality of invertible polynomials.')
verify_app = typer.Typer(no_args_is_help=True, help='Check one duality statement for a polynomial.')
app.add_typer(verify_app, name='verify')

PolynomialArgument = Annotated[Optional[str], typer.Argument(help='Polynomial, e.g. "x1^3*x2 + x2^4*x3 + x3^5".')]
MatrixOption = Annotated[Optional[Path], typer.Option('--matrix', exists=True, dir_okay=False,
                                                      help='JSON file {"matrix": [[...]], "names": [...]}.')]
FormatOption = Annotated[OutputFormat, typer.Option('--format', case_sensitive=False, help='Output format.')]
CoefficientsOption = Annotated[bool, typer.Option('--allow-coefficients',
                                                  help='Discard non-unit coefficients instead of failing.')]
OutOption = Annotated[Optional[Path], typer.Option('--out', dir_okay=False, help='Write the output to a file.')]

DEFAULT_FORMAT = OutputFormat(settings.output_format)


@contextmanager
def usage_errors():
    """
    Turn invalid input into a usage error (exit code 2) and disagreeing
    computations into a plain error (exit code 1).
    """
    try:
        yield
    except InconsistentResult as error:
        raise click.ClickException(str(error))
    except (BHZetaError, ValueError) as error:
        raise typer.BadParameter(str(error))


def load(polynomial: str | None, matrix: Path | None, allow_coefficients: bool) -> InvertiblePolynomial:
    """
    Read the polynomial from the argument or from ``--matrix``; exactly one must be given.

    :param polynomial: Polynomial text.
    :type polynomial: str | None
    :param matrix: Path of a JSON matrix file.
    :type matrix: Path | None
    :param allow_coefficients: Discard non-unit coefficients.
    :type allow_coefficients: bool
    :return: The polynomial.
    :rtype: InvertiblePolynomial
    """
    if (polynomial is None) == (matrix is None):
        raise typer.BadParameter('give either a polynomial or --matrix FILE')

    with usage_errors():
        if matrix is not None:
            return from_json(matrix.read_bytes())
        return parse_polynomial(polynomial, allow_coefficients)


def emit(text: str, out: Path | None):
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding='utf-8')
        logger.info('wrote %s', out)


@app.callback()
def main(log_level: Annotated[Optional[str], typer.Option('--log-level', help='Logging level.')] = None):
    setup_logging(log_level)


@app.command()
def analyze(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
            output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
            out: OutOption = None):
    """
    Weights, decomposition, transpose, Milnor number, zeta functions and roots of degree c.
    """
    f = load(polynomial, matrix, allow_coefficients)
    with usage_errors():
        result = duality.analyze(f)
    emit(render(result, output_format.value), out)


@app.command()
def transpose(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
              output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
              out: OutOption = None):
    """
    The Berglund-Hubsch transpose and both weight systems.
    """
    f = load(polynomial, matrix, allow_coefficients)
    with usage_errors():
        result = duality.transpose_summary(f)
    emit(render(result, output_format.value), out)


@app.command()
def zeta(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
         unreduced: Annotated[bool, typer.Option('--unreduced', help='Report every path unreduced.')] = False,
         output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
         out: OutOption = None):
    """
    The monodromy zeta function from every applicable computation path.
    """
    f = load(polynomial, matrix, allow_coefficients)
    with usage_errors():
        result = duality.zeta_summary(f)
    if not unreduced:
        result = result.model_copy(update={'paths': {name: cyclo.reduce(value) for name, value in result.paths.items()}})
    emit(render(result, output_format.value), out)


@app.command()
def root(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
         k: Annotated[Optional[int], typer.Option('--k', min=1, help='Root degree, c by default.')] = None,
         bound: Annotated[Optional[int], typer.Option('--bound', min=0, help='Exponent bound of the roots.')] = None,
         output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
         out: OutOption = None):
    """
    Formal roots of the reduced zeta function and geometric root actions.
    """
    f = load(polynomial, matrix, allow_coefficients)
    with usage_errors():
        result = duality.root_summary(f, k, bound)
    emit(render(result, output_format.value), out)


@app.command()
def dual(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
         degree: Annotated[Optional[int], typer.Option('--degree', min=1, help='Duality degree, d by default.')] = None,
         output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
         out: OutOption = None):
    """
    Saito dual of the reduced zeta function.
    """
    f = load(polynomial, matrix, allow_coefficients)
    with usage_errors():
        result = duality.dual_summary(f, degree)
    emit(render(result, output_format.value), out)


def _verify(check: str, polynomial, matrix, output_format, allow_coefficients, out):
    f = load(polynomial, matrix, allow_coefficients)
    with usage_errors():
        result = duality.CHECKS[check](f)
    emit(render(result, output_format.value), out)

    if not result.holds:
        raise typer.Exit(code=1)


@verify_app.command('theorem1')
def verify_theorem1(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
                    output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
                    out: OutOption = None):
    """
    Chain/loop duality of the geometric-root zeta functions.
    """
    _verify('theorem1', polynomial, matrix, output_format, allow_coefficients, out)


@verify_app.command('theorem2')
def verify_theorem2(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
                    output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
                    out: OutOption = None):
    """
    The three statements for three variables.
    """
    _verify('theorem2', polynomial, matrix, output_format, allow_coefficients, out)


@verify_app.command('remark2')
def verify_remark2(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
                   output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
                   out: OutOption = None):
    """
    Root existence and inverted duality for two variables.
    """
    _verify('remark2', polynomial, matrix, output_format, allow_coefficients, out)


@verify_app.command('reduced')
def verify_reduced(polynomial: PolynomialArgument = None, matrix: MatrixOption = None,
                   output_format: FormatOption = DEFAULT_FORMAT, allow_coefficients: CoefficientsOption = False,
                   out: OutOption = None):
    """
    Saito dual of the reduced zeta function of f as a root for f^T, three variables with c = 1.
    """
    _verify('reduced', polynomial, matrix, output_format, allow_coefficients, out)


@app.command()
def scan(n: Annotated[Optional[list[int]], typer.Option('--n', help='Number of variables, repeatable.')] = None,
         min_exp: Annotated[int, typer.Option('--min-exp', help='Smallest exponent.')] = 2,
         max_exp: Annotated[int, typer.Option('--max-exp', help='Largest exponent.')] = 5,
         shapes: Annotated[Optional[list[str]], typer.Option('--shapes', help='Shapes to keep, repeatable.')] = None,
         check: Annotated[Optional[list[str]], typer.Option('--check', help='Checks to run, repeatable.')] = None,
         output_format: FormatOption = DEFAULT_FORMAT, out: OutOption = None):
    """
    Run the checks over every Kreuzer-Skarke polynomial of the given sizes and exponent range.
    Text output to the terminal is streamed instance by instance.
    """
    with usage_errors():
        config = ScanConfig(n=tuple(n or (3,)), min_exp=min_exp, max_exp=max_exp,
                            shapes=tuple(shapes or ()), checks=tuple(check or ALL_CHECKS))

    if output_format == OutputFormat.text and out is None:
        reports = []
        for report in duality.scan(config):
            reports.append(report)
            typer.echo(report_line(report), nl=False)
        summary = duality.summarize(reports)
        typer.echo(summary_line(summary), nl=False)
    else:
        result = duality.run_scan(config)
        summary = result.summary
        emit(render(result, output_format.value), out)

    if summary.exit_code:
        raise typer.Exit(code=summary.exit_code)


def run(argv: list[str]) -> int:
    """
    Run the command line and return its exit code: 0 on success, 1 when a
    check fails, 2 on usage errors.

    :param argv: Arguments without the program name.
    :type argv: list[str]
    :return: The exit code.
    :rtype: int
    """
    command = typer.main.get_command(app)

    try:
        result = command.main(args=list(argv), prog_name='bhzeta', standalone_mode=False)
    except click.UsageError as error:
        error.show()
        return 2
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.Abort:
        return 1

    return result if isinstance(result, int) else 0


if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
