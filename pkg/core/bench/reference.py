"""
Published Reference Comparison
Loads the handset measurements shipped under data/reference and renders them
next to a host benchmark report.
"""

import io
import json
from pathlib import Path
from typing import Dict, List, Optional, Union

import pandas as pd
import structlog
from rich.console import Console
from rich.table import Table

from core.bench.harness import setup_dominance
from core.ciphers.cipher_core import PORTFOLIO, CipherId
from core.models.data_structures import BenchReport, DeviceInfo, ReferenceDataset

logger = structlog.get_logger(__name__)

TIMES_FILE = 'table2_execution_times.csv'
DEVICES_FILE = 'table1_devices.csv'
SUMMARY_FILE = 'published_summary.json'

EXPECTED_DEVICES = 12
EXPECTED_LENGTHS = 8
# Setup dominates when the shortest message costs at least this share of the longest
SETUP_DOMINANCE_RATIO = 0.5


class ReferenceDataError(ValueError):
    """Shipped reference files are missing or malformed"""


def load_reference(directory: Union[str, Path]) -> ReferenceDataset:
    """
    Load and validate the published dataset

    Args:
        directory: Folder holding the times CSV, device CSV and summary JSON

    Returns:
        ReferenceDataset

    Raises:
        ReferenceDataError: a file is missing or the grid is not 12 x 4 x 8
    """
    directory = Path(directory)
    try:
        times = pd.read_csv(directory / TIMES_FILE, dtype={'flag': str}, keep_default_na=False)
        devices_frame = pd.read_csv(directory / DEVICES_FILE, dtype=str, keep_default_na=False)
        summary = json.loads((directory / SUMMARY_FILE).read_text(encoding='utf-8'))
    except (OSError, ValueError) as e:
        raise ReferenceDataError(f"cannot read reference data in {directory}: {e}") from e

    times['time_ms'] = pd.to_numeric(times['time_ms'])
    times['length_bytes'] = times['length_bytes'].astype(int)

    n_devices = times['device'].nunique()
    n_ciphers = times['cipher'].nunique()
    n_lengths = times['length_bytes'].nunique()
    if (n_devices, n_ciphers, n_lengths) != (EXPECTED_DEVICES, len(PORTFOLIO), EXPECTED_LENGTHS):
        raise ReferenceDataError(
            f"expected {EXPECTED_DEVICES} devices x {len(PORTFOLIO)} ciphers x {EXPECTED_LENGTHS} lengths, "
            f"got {n_devices} x {n_ciphers} x {n_lengths}"
        )
    if len(times) != EXPECTED_DEVICES * len(PORTFOLIO) * EXPECTED_LENGTHS:
        raise ReferenceDataError(f"duplicate or missing cells: {len(times)} rows")
    unknown = set(times['cipher']) - {c.value for c in PORTFOLIO}
    if unknown:
        raise ReferenceDataError(f"unknown cipher ids {sorted(unknown)}")
    if len(devices_frame) != EXPECTED_DEVICES:
        raise ReferenceDataError(f"expected {EXPECTED_DEVICES} devices in {DEVICES_FILE}, got {len(devices_frame)}")

    devices = [
        DeviceInfo(
            device=row['device'],
            os=row['os'],
            memory=row['memory'],
            processor=row['processor'],
            year=int(row['year']),
        )
        for row in devices_frame.to_dict('records')
    ]

    dataset = ReferenceDataset(
        times=times,
        devices=devices,
        published_overall_ms={CipherId(k): float(v) for k, v in summary.get('overall_average_ms', {}).items()},
        published_average_row={
            CipherId(k): [float(x) for x in v] for k, v in summary.get('average_row_ms', {}).items()
        },
        findings=list(summary.get('findings', [])),
        commentary=list(summary.get('commentary', [])),
    )
    flagged = int((times['flag'] != '').sum())
    logger.debug(f"📥 Reference data: {len(times)} cells, {flagged} flagged")
    return dataset


# ============================================================================
# Rendering
# ============================================================================

def _fmt(value: Optional[float], digits: int = 2) -> str:
    return 'n/a' if value is None else f"{value:.{digits}f}"


def _host_winners(report: BenchReport, lengths: List[int]) -> Dict[int, Optional[CipherId]]:
    winners = {}
    for length in lengths:
        cells = [c for c in report.cells if c.length_bytes == length]
        winners[length] = min(cells, key=lambda c: c.mean_ms).cipher if cells else None
    return winners


def host_findings(report: BenchReport) -> List[str]:
    """Short statements about the host run, phrased like the published findings"""
    lines = []
    overall = {c: report.overall_mean(c) for c in report.ciphers}
    overall = {c: v for c, v in overall.items() if v is not None}
    if overall:
        best = min(overall, key=overall.get)
        worst = max(overall, key=overall.get)
        lines.append(
            f"{best.display_name} has the best and {worst.display_name} the worst overall mean on this host."
        )
    for cipher, ratio in setup_dominance(report).items():
        if ratio >= SETUP_DOMINANCE_RATIO:
            lines.append(
                f"{cipher.display_name}: the shortest message costs {ratio:.0%} of the longest; "
                f"key/IV setup dominates."
            )
    return lines


def compare_reference(report: BenchReport, reference: ReferenceDataset, width: int = 220) -> str:
    """
    Render host timings beside the published handset timings

    Missing cells on either side show as n/a.

    Returns:
        Plain text (no ANSI styling)
    """
    buffer = io.StringIO()
    console = Console(file=buffer, width=width, color_system=None, highlight=False, markup=False, soft_wrap=False)

    ref_ciphers = set(reference.ciphers)
    ciphers = [c for c in CipherId if c in ref_ciphers or c in report.ciphers]
    lengths = sorted(set(report.lengths) | set(reference.lengths))
    devices = reference.device_names

    for cipher in ciphers:
        table = Table(title=f"{cipher.display_name} (ms)", show_lines=False)
        table.add_column('bytes', justify='right')
        table.add_column('host mean', justify='right')
        table.add_column('published avg', justify='right')
        for device in devices:
            table.add_column(device, justify='right')
        for length in lengths:
            cell = report.cell(cipher, length)
            row = [
                str(length),
                _fmt(cell.mean_ms if cell else None, 4),
                _fmt(reference.cross_device_average(cipher, length) if cipher in ref_ciphers else None),
            ]
            row.extend(
                _fmt(reference.value(device, cipher, length) if cipher in ref_ciphers else None)
                for device in devices
            )
            table.add_row(*row)
        console.print(table)

    overall = Table(title='Overall mean (ms)')
    overall.add_column('cipher')
    overall.add_column('host', justify='right')
    overall.add_column('published', justify='right')
    overall.add_column('recomputed', justify='right')
    for cipher in ciphers:
        overall.add_row(
            cipher.display_name,
            _fmt(report.overall_mean(cipher), 4),
            _fmt(reference.published_overall_ms.get(cipher)),
            _fmt(reference.overall_average(cipher) if cipher in ref_ciphers else None, 3),
        )
    console.print(overall)

    winners = Table(title='Fastest cipher per length')
    winners.add_column('bytes', justify='right')
    winners.add_column('host')
    winners.add_column('published')
    host = _host_winners(report, lengths)
    published = reference.winners()
    for length in lengths:
        h, p = host.get(length), published.get(length)
        winners.add_row(str(length), h.display_name if h else 'n/a', p.display_name if p else 'n/a')
    console.print(winners)

    console.print('Published findings:')
    for line in reference.findings:
        console.print(f"  - {line}")
    console.print('Host findings:')
    for line in host_findings(report) or ['no timings recorded']:
        console.print(f"  - {line}")
    for line in reference.commentary:
        console.print(f"Note: {line}")

    return buffer.getvalue()
