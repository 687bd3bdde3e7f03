import h5py
import logging
import numpy as np

from contextlib import suppress
from typing import List
from typing import Sequence
from typing import Tuple

from dowkerpriv.models import BettiVector
from dowkerpriv.models import LinkRecord


logger = logging.getLogger(__name__)

SURVEY_GROUP = "link_survey"


def save_link_survey(file_name: str, records: Sequence[LinkRecord], file_override: bool = False) -> None:
    """
    Saves link survey records into a HDF5 data file

    Parameters
    ----------
    file_name: str
        HDF5 file name to save the survey into
    records: list of LinkRecord
        Survey records, in survey order
    file_override: bool
        Whether to override an existing survey in the file. Default = False

    Returns
    -------
        None
    """

    individuals = [r.individual for r in records]
    raw_betti, raw_empty = _betti_matrix([r.raw_betti for r in records])
    betti, empty = _betti_matrix([r.betti for r in records])
    isotropic_counts, isotropic_lengths = _padded_matrix([r.isotropic_counts for r in records])

    # Append if file exists, otherwise create
    with h5py.File(file_name, "a") as file:

        if file_override:
            with suppress(KeyError):
                del file[SURVEY_GROUP]

        file.create_dataset(f"{SURVEY_GROUP}/individuals", data=_encode_strings(individuals), dtype="S256")
        file.create_dataset(f"{SURVEY_GROUP}/raw_betti", data=raw_betti)
        file.create_dataset(f"{SURVEY_GROUP}/raw_empty", data=raw_empty)
        file.create_dataset(f"{SURVEY_GROUP}/betti", data=betti)
        file.create_dataset(f"{SURVEY_GROUP}/empty", data=empty)
        file.create_dataset(f"{SURVEY_GROUP}/longest_iars", data=[r.longest_iars for r in records], dtype=int)
        file.create_dataset(f"{SURVEY_GROUP}/isotropic_counts", data=isotropic_counts)
        file.create_dataset(f"{SURVEY_GROUP}/isotropic_lengths", data=isotropic_lengths)
        file.create_dataset(f"{SURVEY_GROUP}/link_individuals", data=[r.link_individuals for r in records], dtype=int)
        file.create_dataset(f"{SURVEY_GROUP}/link_attributes", data=[r.link_attributes for r in records], dtype=int)

    logger.info("Saved %s link survey records to %s", len(records), file_name)


def load_link_survey(file_name: str) -> List[LinkRecord]:
    """
    Loads link survey records from a HDF5 data file

    Parameters
    ----------
    file_name: str
        HDF5 file name to load the survey from

    Returns
    -------
    records: list of LinkRecord
        Empty if the file holds no survey
    """

    with h5py.File(file_name, "r") as file:
        try:
            individuals = file[f"{SURVEY_GROUP}/individuals"][()]
            raw_betti = file[f"{SURVEY_GROUP}/raw_betti"][()]
            raw_empty = file[f"{SURVEY_GROUP}/raw_empty"][()]
            betti = file[f"{SURVEY_GROUP}/betti"][()]
            empty = file[f"{SURVEY_GROUP}/empty"][()]
            longest_iars = file[f"{SURVEY_GROUP}/longest_iars"][()]
            isotropic_counts = file[f"{SURVEY_GROUP}/isotropic_counts"][()]
            isotropic_lengths = file[f"{SURVEY_GROUP}/isotropic_lengths"][()]
            link_individuals = file[f"{SURVEY_GROUP}/link_individuals"][()]
            link_attributes = file[f"{SURVEY_GROUP}/link_attributes"][()]
        except KeyError:
            logger.error("HDF5 file does not contain link survey information")
            return []

    individuals = _decode_strings(individuals)

    return [
        LinkRecord(
            individual=individuals[i],
            raw_betti=BettiVector(tuple(int(b) for b in raw_betti[i]), bool(raw_empty[i])),
            betti=BettiVector(tuple(int(b) for b in betti[i]), bool(empty[i])),
            longest_iars=int(longest_iars[i]),
            isotropic_counts=tuple(int(c) for c in isotropic_counts[i][: isotropic_lengths[i]]),
            link_individuals=int(link_individuals[i]),
            link_attributes=int(link_attributes[i]),
        )
        for i in range(len(individuals))
    ]


def _betti_matrix(vectors: Sequence[BettiVector]) -> Tuple[np.ndarray, np.ndarray]:
    matrix, _ = _padded_matrix([v.betti for v in vectors])
    flags = np.array([v.empty for v in vectors], dtype=bool)
    return matrix, flags


def _padded_matrix(rows: Sequence[Sequence[int]]) -> Tuple[np.ndarray, np.ndarray]:
    lengths = np.array([len(row) for row in rows], dtype=int)
    width = int(lengths.max()) if len(rows) > 0 else 0
    matrix = np.zeros((len(rows), width), dtype=int)
    for i, row in enumerate(rows):
        matrix[i, : len(row)] = row
    return matrix, lengths


def _encode_strings(strings: List[str]) -> List[bytes]:
    """
    Encodes a list of strings as bytes

    Parameters
    ----------
    strings : list
        List of any-codification strings

    Returns
    -------
    strings: list
        List of UTF-8 encoded strings
    """
    return [s.encode("utf-8") for s in strings]


def _decode_strings(strings: List[bytes]) -> List[str]:
    """
    Decodes a list of bytes as strings

    Parameters
    ----------
    strings : list
        List of UTF-8 encoded strings

    Returns
    -------
    strings: list
        List of decoded strings
    """
    return [s.decode("utf-8") for s in strings]
