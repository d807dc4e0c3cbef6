import csv
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterable, Iterator, Optional, Sequence, TextIO

from bounded_credible import __version__
from bounded_credible.schemas.coverage import CoverageReport
from bounded_credible.schemas.spending import ValidationReport

COVERAGE_HEADER = ("tau", "estimate", "std_error", "quadrature", "bound", "pass")
COVERAGE_SUMMARY_HEADER = ("min_coverage", "bound", "verdict")
VALIDATION_HEADER = ("t", "alpha_x", "band_lo", "band_hi", "pass")
INTERVAL_HEADER = ("lower", "upper", "alpha_x", "t", "y0", "delta0")

logger = logging.getLogger(__name__)


def header_comment(config_hash: str, seed: Optional[int]) -> str:
    seed_label = "none" if seed is None else str(seed)
    return f"# bounded-credible {__version__} config={config_hash} seed={seed_label}\n"


def write_as_csv(
    stream: TextIO,
    items: Iterable[Iterable[Any]],
    delimiter: str = ",",
) -> None:
    writer = csv.writer(stream, delimiter=delimiter, lineterminator="\n")
    writer.writerows([_clean_csv_value(value) for value in item] for item in items)


def _clean_csv_value(value: Optional[Any]) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def coverage_rows(report: CoverageReport) -> Iterator[Sequence[Any]]:
    yield COVERAGE_HEADER
    for point in report.points:
        yield (
            point.tau,
            point.estimate,
            point.std_error,
            point.quadrature,
            report.bound,
            point.passed,
        )
    yield COVERAGE_SUMMARY_HEADER
    yield (report.min_coverage, report.bound, report.verdict_label)


def validation_rows(report: ValidationReport) -> Iterator[Sequence[Any]]:
    yield VALIDATION_HEADER
    for point in report.points:
        yield (point.t, point.alpha_x, point.band_lo, point.band_hi, point.passed)


def write_coverage_report(
    stream: TextIO, report: CoverageReport, config_hash: str, delimiter: str = ","
) -> None:
    stream.write(header_comment(config_hash, report.seed))
    write_as_csv(stream, coverage_rows(report), delimiter=delimiter)


def write_validation_report(
    stream: TextIO,
    report: ValidationReport,
    config_hash: str,
    seed: Optional[int] = None,
    delimiter: str = ",",
) -> None:
    stream.write(header_comment(config_hash, seed))
    write_as_csv(stream, validation_rows(report), delimiter=delimiter)


def write_interval(
    stream: TextIO,
    values: Sequence[float],
    config_hash: str,
    delimiter: str = ",",
    with_header: bool = True,
) -> None:
    if with_header:
        stream.write(header_comment(config_hash, None))
    write_as_csv(stream, [INTERVAL_HEADER, values], delimiter=delimiter)


@contextmanager
def open_output(path: Optional[Path]) -> Iterator[TextIO]:
    """The file at path, or stdout when path is None"""
    if path is None:
        yield sys.stdout
        return

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as output_file:
        yield output_file

    logger.info(f"Wrote {path}")
