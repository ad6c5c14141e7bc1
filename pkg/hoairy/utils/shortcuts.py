import functools
import math
from typing import List, Tuple

import numpy as np

from hoairy.utils.exception_utils import ConfigError

SIGNIFICANT_DIGITS = 15


def format_float(value: float) -> str:
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def round_float(value: float) -> float:
    return float(format_float(value))


def parse_float_list(raw: str, name: str) -> List[float]:
    if isinstance(raw, (list, tuple)):
        items = list(raw)
    else:
        items = [item for item in str(raw).split(",") if item.strip() != ""]
    try:
        return [float(item) for item in items]
    except (TypeError, ValueError) as error:
        raise ConfigError(
            f"Could not read {name} as a comma separated list of numbers",
            {"field": name, "value": str(raw)},
        ) from error


@functools.lru_cache(maxsize=64)
def _legendre_nodes(count: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(count)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(count: int, lower: float, upper: float):
    """Gauss-Legendre nodes and weights mapped affinely onto [lower, upper]."""
    if count < 1:
        raise ConfigError("Quadrature needs at least one node", {"nodes": count})
    nodes, weights = _legendre_nodes(count)
    half_width = 0.5 * (upper - lower)
    return lower + half_width * (nodes + 1.0), half_width * weights


def uniform_grid(start: float, stop: float, step: float) -> List[float]:
    """start, start + step, ... up to stop inclusive, built by multiplication."""
    if step <= 0:
        raise ConfigError("Grid step must be positive", {"step": step})
    if stop < start:
        raise ConfigError("Grid end lies before its start", {"from": start, "to": stop})
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + index * step for index in range(count)]
