from .gf2 import gf2_rank, gf2_rank_dense
from .chain_complex import ChainComplexZ2, reduced_betti
from .kbit import kbit_attributes, kbit_relation
from .bounds import verify_chain_lower_bound
from .survey import link_survey, scatter_measures
