from dataclasses import dataclass
from enum import Enum
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Tuple

import numpy as np

from ..utils.exceptions import DuplicateIdError
from ..utils.exceptions import UnknownIdError
from ..utils.exceptions import VoidRelationError
from ..utils.various import full_mask
from ..utils.various import iter_bits


IndividualSet = FrozenSet[str]
AttributeSet = FrozenSet[str]


class PrivacyShape(str, Enum):
    """
    Shape of a connected component of a tight relation:

    - "singleton": a nonblank 1x1 relation.
    - "cyclic_staircase": isomorphic to the staircase whose rows are {y_i, y_i+1}, wrapping around.
    - "spherical_boundary": isomorphic to the complement of a permutation matrix.
    - "other": none of the above.
    """

    SINGLETON = "singleton"
    CYCLIC_STAIRCASE = "cyclic_staircase"
    SPHERICAL_BOUNDARY = "spherical_boundary"
    OTHER = "other"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid privacy shape: {value}")


class RelationFormat(str, Enum):
    """
    Serialization format of a relation document:

    - "csv-matrix": first row holds attribute ids, first column individual ids, cells 0/1/blank.
    - "pairs": one `individual,attribute` pair per line.
    - "json": object with individuals, attributes and pairs.
    """

    CSV_MATRIX = "csv-matrix"
    PAIRS = "pairs"
    JSON = "json"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid relation format: {value}")


def _index_universe(ids: Sequence[str], kind: str) -> Dict[str, int]:
    index = {}
    for i, value in enumerate(ids):
        if value in index:
            raise DuplicateIdError(f"Duplicate {kind} id: {value!r}")
        index[value] = i
    return index


class Relation:
    """
    Finite binary relation between ordered universes of individuals and attributes.

    Rows are stored as attribute bitmasks (one per individual) and mirrored as
    individual bitmasks (one per attribute), so that the Galois maps reduce to
    repeated bitwise intersections. Instances are immutable; every editing
    operation returns a new relation.

    Parameters
    ----------
    individuals: sequence of str
        Ordered individual ids (the universe X)
    attributes: sequence of str
        Ordered attribute ids (the universe Y)
    rows: sequence of int
        For each individual, the bitmask of its attributes, bit j standing for `attributes[j]`
    allow_void: bool (optional)
        Whether an empty universe is accepted. Default = False
    """

    __slots__ = ("_individuals", "_attributes", "_rows", "_cols", "_x_index", "_y_index")

    def __init__(
        self,
        individuals: Sequence[str],
        attributes: Sequence[str],
        rows: Sequence[int],
        allow_void: bool = False,
    ):
        individuals = tuple(individuals)
        attributes = tuple(attributes)
        rows = tuple(int(row) for row in rows)

        if len(rows) != len(individuals):
            raise ValueError(f"Expected {len(individuals)} rows, got {len(rows)}")

        if not allow_void and (len(individuals) == 0 or len(attributes) == 0):
            raise VoidRelationError("Relation has an empty universe; pass allow_void=True to build it")

        y_full = full_mask(len(attributes))
        if any(row & ~y_full for row in rows):
            raise ValueError("Row bitmask references attributes outside the universe")

        self._individuals = individuals
        self._attributes = attributes
        self._rows = rows
        self._x_index = _index_universe(individuals, "individual")
        self._y_index = _index_universe(attributes, "attribute")

        cols = [0] * len(attributes)
        for i, row in enumerate(rows):
            for j in iter_bits(row):
                cols[j] |= 1 << i
        self._cols = tuple(cols)

    @classmethod
    def from_matrix(cls, individuals: Sequence[str], attributes: Sequence[str], matrix, allow_void=False):
        matrix = np.asarray(matrix, dtype=bool)
        if matrix.shape != (len(individuals), len(attributes)):
            raise ValueError(
                f"Matrix shape {matrix.shape} does not match universes "
                f"({len(individuals)}, {len(attributes)})"
            )

        rows = []
        for line in matrix:
            row = 0
            for j in np.flatnonzero(line):
                row |= 1 << int(j)
            rows.append(row)

        return cls(individuals, attributes, rows, allow_void=allow_void)

    @property
    def individuals(self) -> Tuple[str, ...]:
        return self._individuals

    @property
    def attributes(self) -> Tuple[str, ...]:
        return self._attributes

    @property
    def n_individuals(self) -> int:
        return len(self._individuals)

    @property
    def n_attributes(self) -> int:
        return len(self._attributes)

    @property
    def is_void(self) -> bool:
        return self.n_individuals == 0 or self.n_attributes == 0

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def cols(self) -> Tuple[int, ...]:
        return self._cols

    @property
    def full_individuals(self) -> int:
        return full_mask(self.n_individuals)

    @property
    def full_attributes(self) -> int:
        return full_mask(self.n_attributes)

    @property
    def matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n_individuals, self.n_attributes), dtype=bool)
        for i, row in enumerate(self._rows):
            matrix[i, list(iter_bits(row))] = True
        return matrix

    def individual_index(self, x: str) -> int:
        try:
            return self._x_index[x]
        except KeyError:
            raise UnknownIdError("individual", x) from None

    def attribute_index(self, y: str) -> int:
        try:
            return self._y_index[y]
        except KeyError:
            raise UnknownIdError("attribute", y) from None

    def has_individual(self, x: str) -> bool:
        return x in self._x_index

    def has_attribute(self, y: str) -> bool:
        return y in self._y_index

    def individual_bits(self, ids: Iterable[str]) -> int:
        mask = 0
        for x in ids:
            mask |= 1 << self.individual_index(x)
        return mask

    def attribute_bits(self, ids: Iterable[str]) -> int:
        mask = 0
        for y in ids:
            mask |= 1 << self.attribute_index(y)
        return mask

    def individuals_of(self, mask: int) -> IndividualSet:
        return frozenset(self._individuals[i] for i in iter_bits(mask))

    def attributes_of(self, mask: int) -> AttributeSet:
        return frozenset(self._attributes[j] for j in iter_bits(mask))

    def ordered_individuals(self, ids: Iterable[str]) -> List[str]:
        """Returns the given individual ids in universe order"""
        return sorted(ids, key=self.individual_index)

    def ordered_attributes(self, ids: Iterable[str]) -> List[str]:
        """Returns the given attribute ids in universe order"""
        return sorted(ids, key=self.attribute_index)

    def row(self, x: str) -> AttributeSet:
        return self.attributes_of(self._rows[self.individual_index(x)])

    def col(self, y: str) -> IndividualSet:
        return self.individuals_of(self._cols[self.attribute_index(y)])

    def has_pair(self, x: str, y: str) -> bool:
        return bool(self._rows[self.individual_index(x)] >> self.attribute_index(y) & 1)

    def pairs(self) -> List[Tuple[str, str]]:
        return [
            (self._individuals[i], self._attributes[j])
            for i, row in enumerate(self._rows)
            for j in iter_bits(row)
        ]

    def n_pairs(self) -> int:
        return sum(bin(row).count("1") for row in self._rows)

    def phi_bits(self, sigma: int) -> int:
        """Attributes shared by every individual in `sigma`; phi of the empty set is Y"""
        result = self.full_attributes
        for i in iter_bits(sigma):
            result &= self._rows[i]
        return result

    def psi_bits(self, gamma: int) -> int:
        """Individuals having every attribute in `gamma`; psi of the empty set is X"""
        result = self.full_individuals
        for j in iter_bits(gamma):
            result &= self._cols[j]
        return result

    def attribute_closure_bits(self, gamma: int) -> int:
        return self.phi_bits(self.psi_bits(gamma))

    def association_closure_bits(self, sigma: int) -> int:
        return self.psi_bits(self.phi_bits(sigma))

    def transpose(self) -> "Relation":
        return Relation(self._attributes, self._individuals, self._cols, allow_void=True)

    def restrict(self, individuals: int, attributes: int) -> "Relation":
        """
        Subrelation on the individuals and attributes selected by two bitmasks.

        Universe order is kept. The result may be void.
        """

        x_indices = list(iter_bits(individuals))
        y_indices = list(iter_bits(attributes))
        rows = []
        for i in x_indices:
            row = 0
            for new_j, j in enumerate(y_indices):
                if self._rows[i] >> j & 1:
                    row |= 1 << new_j
            rows.append(row)

        return Relation(
            [self._individuals[i] for i in x_indices],
            [self._attributes[j] for j in y_indices],
            rows,
            allow_void=True,
        )

    def with_rows(self, rows: Sequence[int]) -> "Relation":
        return Relation(self._individuals, self._attributes, rows, allow_void=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return (
            self._individuals == other._individuals
            and self._attributes == other._attributes
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._individuals, self._attributes, self._rows))

    def __getstate__(self):
        return self._individuals, self._attributes, self._rows

    def __setstate__(self, state):
        individuals, attributes, rows = state
        self.__init__(individuals, attributes, rows, allow_void=True)

    def __repr__(self) -> str:
        return (
            f"Relation({self.n_individuals} individuals x {self.n_attributes} attributes, "
            f"{self.n_pairs()} pairs)"
        )

    def __str__(self) -> str:
        """
        Formats the relation as an incidence table

        Returns
        -------
            Formatted relation string
        """

        width = max([len(x) for x in self._individuals] + [1])
        header = " " * width + " | " + " ".join(self._attributes)
        lines = [header, "-" * len(header)]
        for x, row in zip(self._individuals, self._rows):
            cells = [
                ("1" if row >> j & 1 else ".").rjust(len(y))
                for j, y in enumerate(self._attributes)
            ]
            lines.append(x.rjust(width) + " | " + " ".join(cells))
        return "\n".join(lines)


@dataclass(frozen=True)
class SquareSymmetryReport:
    """
    Consequences of attribute privacy checked on a square relation without blank columns.

    Parameters
    ----------
    attribute_privacy: bool
        Whether the relation preserves attribute privacy. The remaining flags only carry
        weight when this one is set.
    no_blank_rows: bool
    all_identifiable: bool
    association_privacy: bool
    counterexamples: tuple of str
        Descriptions of the conclusions that failed while attribute privacy holds
    """

    attribute_privacy: bool
    no_blank_rows: bool
    all_identifiable: bool
    association_privacy: bool
    counterexamples: Tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.counterexamples


@dataclass(frozen=True)
class EncodedRelation:
    """
    Binary relation built from multivalent records.

    Parameters
    ----------
    relation: Relation
        One individual per class of identical records, one attribute per `field=value`
    multiplicities: dict
        Number of records merged into each individual
    members: dict
        Record ids merged into each individual
    """

    relation: Relation
    multiplicities: Dict[str, int]
    members: Dict[str, Tuple[str, ...]]
