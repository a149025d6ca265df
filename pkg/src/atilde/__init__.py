"""Exceptional collections over quivers of type A-tilde.

String modules are stored as intervals on the universal cover; Hom and Ext
come from graph maps and connections; arcs on the annulus, Dehn twists and
parametrized families are built on the same interval arithmetic.
"""

__version__ = "0.1.0"

from .quiver import Boundary, Quiver, Sign, make_quiver, proper_orientations  # noqa: E402
from .strings import (StringClass, StringModule, classify, dimension_vector,  # noqa: E402
                      dual, from_triple, hook_op, injective_at, is_exceptional,
                      is_injective, is_projective, nakayama, projective_at,
                      quasi_length, tau, tau_inv)
from .homext import (connections, dim_ext, dim_hom, euler_form,  # noqa: E402
                     factorizations, graph_maps, is_exceptional_pair,
                     is_exceptional_sequence)
from .linalg import dim_hom_linear_algebra  # noqa: E402
from .arcs import (Arc, ArcDiagram, ArcKind, PairRelation, arc_of,  # noqa: E402
                   is_exceptional_diagram, module_of, order_collection,
                   pair_relation, relation_algebraic, strand_of)
from .families import (Family, TransjectiveObject, canonical_small,  # noqa: E402
                       coray_shift, count_families, dehn_twist, elementary_twist,
                       enumerate_collections, enumerate_small_diagrams, is_small,
                       same_family, tau_collection)
from .render import render_svg  # noqa: E402
