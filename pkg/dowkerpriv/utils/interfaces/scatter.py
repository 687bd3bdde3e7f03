import csv
import logging

from pathlib import Path
from typing import Sequence
from typing import Union

from dowkerpriv.models import ScatterPoint

logger = logging.getLogger(__name__)

COLUMNS = ("individual", "h", "i", "h_root", "log_i", "link_size")


def write_scatter_csv(points: Sequence[ScatterPoint], path: Union[str, Path]) -> None:
    """
    Writes scatter measures as CSV, one row per surveyed individual.

    A missing log_i (for i = 0) is written as an empty cell.
    """

    with open(path, "w", newline="", encoding="utf-8") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(COLUMNS)
        for p in points:
            log_i = "" if p.log_i is None else repr(p.log_i)
            writer.writerow([p.individual, p.h, p.i, repr(p.h_root), log_i, p.link_size])

    logger.info("Scatter measures written to %s", path)
