"""
Renderers for every result model: JSON, CSV, LaTeX and plain text.
"""
import csv
import io
from pathlib import Path
from typing import Literal

import orjson
from jinja2 import Environment, FileSystemLoader
from pydantic import BaseModel

from src.schemas.cyclotomic import CyclotomicFunction
from src.schemas.polynomials import WeightSystem
from src.schemas.reports import DualityReport, ScanResult, ScanSummary

Format = Literal['json', 'csv', 'latex', 'text']

TEMPLATE_FOLDER = Path(__file__).parent / 'templates'
environment = Environment(loader=FileSystemLoader(TEMPLATE_FOLDER), autoescape=False, keep_trailing_newline=True)

REPORT_COLUMNS = ('polynomial', 'shape', 'weights', 'c', 'c_T', 'zeta', 'theorem1', 'theorem2', 'remark2',
                  'reduced', 'oracle', 'status', 'flags')


def render_json(value: BaseModel | list[BaseModel]) -> str:
    """
    Deterministic JSON: sorted keys, two-space indentation, trailing newline.
    """
    data = [item.model_dump(mode='json') for item in value] if isinstance(value, list) else value.model_dump(mode='json')

    return orjson.dumps(data, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode() + '\n'


def _verdict(result) -> str:
    if result is None:
        return ''
    return 'pass' if result.holds else 'FAIL'


def _report_row(report: DualityReport) -> dict[str, str]:
    return {
        'polynomial': report.polynomial,
        'shape': report.shape,
        'weights': str(report.weights) if report.weights else '',
        'c': str(report.weights.c) if report.weights else '',
        'c_T': str(report.weights_T.c) if report.weights_T else '',
        'zeta': str(report.zeta) if report.zeta else '',
        'theorem1': _verdict(report.theorem1),
        'theorem2': _verdict(report.theorem2),
        'remark2': _verdict(report.remark2),
        'reduced': _verdict(report.reduced),
        'oracle': _verdict(report.oracle),
        'status': report.status,
        'flags': '; '.join(report.flags),
    }


def _reports(value) -> list[DualityReport] | None:
    if isinstance(value, ScanResult):
        return value.reports
    if isinstance(value, DualityReport):
        return [value]
    if isinstance(value, list) and all(isinstance(item, DualityReport) for item in value):
        return value
    return None


def _scalar(value) -> str:
    if isinstance(value, (CyclotomicFunction, WeightSystem)):
        return str(value)
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (list, tuple)) and value and isinstance(value[0], tuple):
        return '; '.join(_scalar(item) for item in value)
    if isinstance(value, (list, tuple)):
        return ', '.join(_scalar(item) for item in value)
    if isinstance(value, BaseModel):
        return '; '.join(f'{key}={_scalar(item)}' for key, item in _fields(value))
    return str(value)


def _fields(model: BaseModel):
    names = list(type(model).model_fields) + list(type(model).model_computed_fields)
    for name in names:
        value = getattr(model, name)
        if value is not None and value != () and value != []:
            yield name, value


def render_csv(value) -> str:
    """
    One row per report for scans and reports, ``field,value`` rows for anything else.
    """
    buffer = io.StringIO()
    reports = _reports(value)

    if reports is not None:
        writer = csv.DictWriter(buffer, fieldnames=REPORT_COLUMNS, lineterminator='\n')
        writer.writeheader()
        writer.writerows(_report_row(report) for report in reports)
    else:
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(('field', 'value'))
        writer.writerows((name, _scalar(item)) for name, item in _fields(value))

    return buffer.getvalue()


def _latex(value) -> str:
    if isinstance(value, CyclotomicFunction):
        return f'${value.to_latex()}$'
    if isinstance(value, WeightSystem):
        return f'${value}$'.replace(';', ';\\,')
    return _scalar(value).replace('_', '\\_').replace('^', '\\^{}').replace('&', '\\&')


def render_latex(value, caption: str | None = None) -> str:
    """
    A LaTeX ``table`` environment, rendered from ``templates/report_table.tex``.
    Reports become one row per polynomial with zeta functions typeset as fractions.
    """
    reports = _reports(value)
    template = environment.get_template('report_table.tex')

    if reports is not None:
        header = ['$f$', '$\\underline{w}$', '$c$', '$c^T$', '$\\widetilde{\\zeta}_f$', 'status']
        rows = [
            [_latex(report.polynomial), _latex(report.weights) if report.weights else '',
             str(report.weights.c) if report.weights else '', str(report.weights_T.c) if report.weights_T else '',
             _latex(report.zeta) if report.zeta else '', report.status]
            for report in reports
        ]
    else:
        header = ['field', 'value']
        rows = [[_latex(name), _latex(item)] for name, item in _fields(value)]

    return template.render(columns=['l'] * len(header), header=header, rows=rows, caption=caption)


def report_line(report: DualityReport) -> str:
    flags = f'  [{"; ".join(report.flags)}]' if report.flags else ''
    return f'{report.status:7} {report.shape:14} {report.polynomial}{flags}\n'


def summary_line(summary: ScanSummary) -> str:
    return (f'total {summary.total}: {summary.passed} ok, {summary.failed} failed, '
            f'{summary.skipped} skipped, {summary.errors} errors\n')


def render_text(value, indent: int = 0) -> str:
    """
    Human readable ``field: value`` lines; nested models are indented.
    """
    if isinstance(value, ScanResult):
        return ''.join(map(report_line, value.reports)) + summary_line(value.summary)

    if isinstance(value, list):
        return ''.join(render_text(item, indent) for item in value)

    pad = ' ' * indent
    lines = []
    for name, item in _fields(value):
        if isinstance(item, BaseModel) and not isinstance(item, (CyclotomicFunction, WeightSystem)):
            lines.append(f'{pad}{name}:')
            lines.append(render_text(item, indent + 2).rstrip('\n'))
        elif isinstance(item, list) and item and isinstance(item[0], BaseModel):
            lines.append(f'{pad}{name}:')
            lines.extend(f'{pad}  - {_scalar(element)}' for element in item)
        elif isinstance(item, dict):
            lines.append(f'{pad}{name}:')
            lines.extend(f'{pad}  {key}: {_scalar(element)}' for key, element in item.items())
        else:
            lines.append(f'{pad}{name}: {_scalar(item)}')

    return '\n'.join(lines) + '\n'


def render(value, output_format: Format = 'text') -> str:
    """
    Render a result in the requested format.

    :param value: A result model or a list of reports.
    :type value: BaseModel | list
    :param output_format: One of ``json``, ``csv``, ``latex``, ``text``.
    :type output_format: str
    :return: The rendered document.
    :rtype: str
    """
    if output_format == 'json':
        return render_json(value)
    if output_format == 'csv':
        return render_csv(value)
    if output_format == 'latex':
        return render_latex(value)
    if output_format == 'text':
        return render_text(value)

    raise ValueError(f'unknown format {output_format!r}')
