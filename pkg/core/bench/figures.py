"""
Plotly charts: time vs message length, host beside the published handsets
"""

from pathlib import Path
from typing import List, Optional, Union

import plotly.graph_objects as go
from plotly.subplots import make_subplots

from core.ciphers.cipher_core import CipherId
from core.models.data_structures import BenchReport, ReferenceDataset

COLORS = {
    CipherId.SALSA20_12: '#1f77b4',
    CipherId.SALSA20_8: '#aec7e8',
    CipherId.SALSA20_20: '#17becf',
    CipherId.RABBIT: '#ff7f0e',
    CipherId.HC128: '#d62728',
    CipherId.SOSEMANUK: '#2ca02c',
}


def _ciphers(report: BenchReport, reference: Optional[ReferenceDataset]) -> List[CipherId]:
    present = set(report.ciphers) | set(reference.ciphers if reference is not None else [])
    return [c for c in CipherId if c in present]


def build_figures(report: BenchReport, reference: Optional[ReferenceDataset] = None) -> List[go.Figure]:
    """
    Line chart (time vs length, log2 x-axis) and grouped bar chart of per-length means

    The host and the handsets differ by orders of magnitude, so each gets its own panel.
    """
    titles = ('This host', 'Published handset average') if reference is not None else ('This host',)
    cols = len(titles)

    line = make_subplots(rows=1, cols=cols, subplot_titles=titles)
    bars = make_subplots(rows=1, cols=cols, subplot_titles=titles)

    for cipher in _ciphers(report, reference):
        color = COLORS.get(cipher)
        cells = [c for c in report.sorted_cells() if c.cipher == cipher]
        if cells:
            x = [c.length_bytes for c in cells]
            y = [c.mean_ms for c in cells]
            line.add_trace(
                go.Scatter(x=x, y=y, mode='lines+markers', name=cipher.display_name,
                           legendgroup=cipher.value, line=dict(color=color)),
                row=1, col=1,
            )
            bars.add_trace(
                go.Bar(x=[str(n) for n in x], y=y, name=cipher.display_name,
                       legendgroup=cipher.value, marker_color=color),
                row=1, col=1,
            )
        if reference is not None and cipher in reference.ciphers:
            x = reference.lengths
            y = [reference.cross_device_average(cipher, n) for n in x]
            line.add_trace(
                go.Scatter(x=x, y=y, mode='lines+markers', name=f"{cipher.display_name} (published)",
                           legendgroup=cipher.value, line=dict(color=color, dash='dash')),
                row=1, col=2,
            )
            bars.add_trace(
                go.Bar(x=[str(n) for n in x], y=y, name=f"{cipher.display_name} (published)",
                       legendgroup=cipher.value, marker_color=color, opacity=0.6),
                row=1, col=2,
            )

    for col in range(1, cols + 1):
        line.update_xaxes(type='log', dtick=0.30102999566, title_text='message length (bytes)', row=1, col=col)
        line.update_yaxes(title_text='time (ms)', row=1, col=col)
        bars.update_xaxes(title_text='message length (bytes)', row=1, col=col)
        bars.update_yaxes(title_text='time (ms)', row=1, col=col)

    line.update_layout(title='Encryption time vs message length', template='plotly_white')
    bars.update_layout(title='Mean encryption time per length', barmode='group', template='plotly_white')
    return [line, bars]


def write_figures(
    report: BenchReport,
    path: Union[str, Path],
    reference: Optional[ReferenceDataset] = None,
) -> Path:
    """Write both charts into one standalone HTML page"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    figures = build_figures(report, reference)
    body = '\n'.join(
        fig.to_html(full_html=False, include_plotlyjs='cdn' if i == 0 else False)
        for i, fig in enumerate(figures)
    )
    path.write_text(f"<html><head><meta charset=\"utf-8\"></head><body>\n{body}\n</body></html>\n", encoding='utf-8')
    return path
