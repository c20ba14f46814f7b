"""
Host platform metadata for benchmark reports
"""

import os
import platform
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Optional

import numpy as np

GOVERNOR_PATH = Path('/sys/devices/system/cpu/cpu0/cpufreq/scaling_governor')
CPUINFO_PATH = Path('/proc/cpuinfo')


def _read_text(path: Path) -> Optional[str]:
    try:
        return path.read_text(encoding='utf-8', errors='replace')
    except OSError:
        return None


def cpu_model() -> str:
    info = _read_text(CPUINFO_PATH)
    if info:
        for line in info.splitlines():
            if line.lower().startswith(('model name', 'hardware', 'cpu model')):
                return line.split(':', 1)[1].strip()
    return platform.processor() or platform.machine() or 'unknown'


def capture_platform(seed: Optional[int] = None) -> Dict[str, str]:
    """
    Describe the host the way the published device table describes handsets

    Returns:
        Ordered str -> str mapping; governor and load average only when readable
    """
    clock = time.get_clock_info('perf_counter')
    meta = {
        'timestamp': datetime.now(timezone.utc).isoformat(timespec='seconds'),
        'cpu_model': cpu_model(),
        'cpu_count': str(os.cpu_count() or 'unknown'),
        'machine': platform.machine() or 'unknown',
        'os': platform.platform(),
        'runtime': f"{platform.python_implementation()} {platform.python_version()}",
        'numpy': np.__version__,
        'clock': f"perf_counter ({clock.implementation}, resolution {clock.resolution:.3g} s)",
    }

    governor = _read_text(GOVERNOR_PATH)
    if governor:
        meta['cpu_governor'] = governor.strip()
    if hasattr(os, 'getloadavg'):
        try:
            meta['load_average'] = ' '.join(f"{x:.2f}" for x in os.getloadavg())
        except OSError:
            pass
    if seed is not None:
        meta['seed'] = str(seed)
    return meta
