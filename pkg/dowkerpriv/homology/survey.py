import logging
import multiprocessing
import numpy as np

from functools import partial
from typing import Iterable
from typing import List
from typing import Sequence

from .chain_complex import reduced_betti
from ..complex.links import conditional_association_relation
from ..complex.operations import strip_cone_apexes
from ..galois.isotropy import isotropic_sets
from ..galois.release import longest_iars
from ..models import LinkRecord
from ..models import Relation
from ..models import ScatterPoint
from ..models import SearchLimits
from ..relation.privacy import uniquely_identifiable
from ..utils.exceptions import VoidRelationError
from ..utils.various import less_logging

logger = logging.getLogger(__name__)


def _survey_individual(
    individual: str,
    relation: Relation,
    max_dim: int,
    max_isotropic_size: int,
    limits: SearchLimits,
) -> LinkRecord:
    with less_logging():
        link = conditional_association_relation(relation, [individual])
        raw = link.attribute_complex()
        raw_betti = reduced_betti(raw, max_dim, limits)
        betti = reduced_betti(strip_cone_apexes(raw), max_dim, limits)

        q = link.relation
        if q.is_void:
            length, counts = 0, ()
        else:
            length = longest_iars(q)[0]
            found = isotropic_sets(q, max_isotropic_size, limits)
            counts = tuple(len(found.get(k, ())) for k in range(1, max(found, default=0) + 1))

    return LinkRecord(
        individual=individual,
        raw_betti=raw_betti,
        betti=betti,
        longest_iars=length,
        isotropic_counts=counts,
        link_individuals=q.n_individuals,
        link_attributes=q.n_attributes,
    )


def link_survey(
    r: Relation,
    individuals: Iterable[str] = None,
    max_dim: int = None,
    max_isotropic_size: int = None,
    limits: SearchLimits = None,
    n_processes: int = 1,
) -> List[LinkRecord]:
    """
    Homology and release statistics of the links of uniquely identifiable individuals.

    For each such individual x the link of x in the association complex is modeled by a
    relation Q on the other individuals and the attributes of x. Its attribute complex is
    surveyed before and after removing the cone apexes, together with the longest
    informative release sequence of Q and the number of isotropic attribute sets of Q.

    Parameters
    ----------
    r: Relation
        Nonvoid relation
    individuals: iterable of str (optional)
        Individuals to survey. Default = None (all). Individuals that are not uniquely
        identifiable, or have no attributes, are skipped.
    max_dim: int (optional)
        Compute link homology up to this dimension only. Default = None
    max_isotropic_size: int (optional)
        Largest isotropic sets counted. Default = None (all)
    limits: SearchLimits (optional)
    n_processes: None or int, optional
        If None or larger than 1, links are surveyed in parallel by a multiprocessing pool.
        None uses all available cores. Default = 1

    Returns
    -------
    records: list of LinkRecord
        In the order of the surveyed individuals. `isotropic_counts[k - 1]` is the number of
        isotropic sets of size k.
    """

    if r.is_void:
        raise VoidRelationError("Link surveys need a nonvoid relation")

    candidates = r.individuals if individuals is None else r.ordered_individuals(individuals)
    selected = []
    for x in candidates:
        if r.row(x) and uniquely_identifiable(r, x):
            selected.append(x)
        else:
            logger.debug("Skipping individual %s, which is not uniquely identifiable", x)

    job = partial(
        _survey_individual,
        relation=r,
        max_dim=max_dim,
        max_isotropic_size=max_isotropic_size,
        limits=limits,
    )

    logger.info("Surveying the links of %s individuals", len(selected))

    if n_processes is None or n_processes > 1:
        if n_processes is None:
            n_processes = multiprocessing.cpu_count()

        logger.info("Starting link survey in parallel, using %s processes", n_processes)

        with multiprocessing.Pool(processes=n_processes) as pool:
            result = pool.map_async(job, selected, chunksize=1)
            result.wait()
            records = result.get()

    else:
        records = [job(x) for x in selected]

    logger.info("Link survey done")
    return list(records)


def _varying_radix(values: Sequence[Sequence[int]]) -> List[int]:
    """Reads each vector as a numeral whose digit d has radix (largest digit d seen) + 1"""

    if not values:
        return []
    width = max(len(v) for v in values)
    padded = np.zeros((len(values), width), dtype=np.int64)
    for row, v in enumerate(values):
        padded[row, : len(v)] = v

    radix = padded.max(axis=0) + 1 if width else np.zeros(0, dtype=np.int64)
    weights = [1]
    for base in radix[:-1]:
        weights.append(weights[-1] * int(base))

    return [sum(int(d) * w for d, w in zip(row, weights)) for row in padded]


def scatter_measures(records: Sequence[LinkRecord]) -> List[ScatterPoint]:
    """
    Condenses link records into a homology measure h and a release measure i.

    h reads the Betti vector after cone stripping, (β_0, β_1, ...), as a varying-radix numeral
    whose digit radixes are one more than the largest value of that component among the
    records. A contractible link has h = 1 and an empty link h = 0. i reads
    (ℓ_max, c_2, ..., c_6) the same way, ℓ_max being the longest informative release length
    of the link and c_k its number of isotropic sets of size k.

    Parameters
    ----------
    records: sequence of LinkRecord

    Returns
    -------
    points: list of ScatterPoint
        Also carry the fourth root of h and the natural logarithm of i (None when i = 0)
    """

    if not records:
        return []

    h_values = _varying_radix([record.betti.betti for record in records])
    i_vectors = []
    for record in records:
        counts = record.isotropic_counts
        i_vectors.append([record.longest_iars] + [counts[k - 1] if k <= len(counts) else 0 for k in range(2, 7)])
    i_values = _varying_radix(i_vectors)

    points = []
    for record, h, i in zip(records, h_values, i_values):
        if record.betti.empty:
            h = 0
        elif record.betti.is_acyclic:
            h = 1
        points.append(
            ScatterPoint(
                individual=record.individual,
                h=h,
                i=i,
                h_root=h**0.25,
                log_i=float(np.log(i)) if i > 0 else None,
                link_size=record.link_size,
            )
        )
    return points
