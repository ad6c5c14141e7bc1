from typing import List, Optional

from celery import shared_task

from hoairy.fredholm.intervals import IntervalSystem
from hoairy.fredholm.services.nystrom_service import NystromService


@shared_task
def gen_fn_point(
    n: int,
    thresholds: List[float],
    weights: List[float],
    shift: float,
    nodes: Optional[int] = None,
    hard_cutoff: bool = False,
) -> dict:
    system = IntervalSystem.create(thresholds, weights, shift)
    value = NystromService.gen_fn(system, n, nodes, hard_cutoff)
    return {"t": shift, "x1": thresholds[0], "F": value}
