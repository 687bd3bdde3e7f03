from .maps import validate_morphism, induced_simplicial_maps, random_morphism
from .lattice import g_morphisms, lattice_generate_from_image
