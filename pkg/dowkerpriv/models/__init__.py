from .complexes import ComplexKind
from .complexes import LinkOverride
from .complexes import Simplex
from .complexes import SimplicialComplex

from .graph import Action
from .graph import ActionKind
from .graph import Strategy
from .graph import UncertainGraph

from .homology import BettiVector
from .homology import ChainBoundEntry
from .homology import ChainBoundReport
from .homology import LinkRecord
from .homology import ScatterPoint

from .inference import Interpretation
from .inference import LatticeExtreme
from .inference import Outcome
from .inference import ProperElement

from .lattice import Chain
from .lattice import LabeledPair
from .lattice import ReleaseProfile
from .lattice import ReleaseSequence

from .limits import SearchLimits

from .morphism import GeneratedLattice
from .morphism import GMorphismPair
from .morphism import ImageKind
from .morphism import InducedMaps
from .morphism import RelationMorphism

from .relation import AttributeSet
from .relation import EncodedRelation
from .relation import IndividualSet
from .relation import PrivacyShape
from .relation import Relation
from .relation import RelationFormat
from .relation import SquareSymmetryReport
