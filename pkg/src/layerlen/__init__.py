"""Torsion-theoretic layer lengths and finitistic-dimension bounds for
bound quiver algebras over prime fields.

Core objects: :class:`layerlen.algebra.Algebra` (a bound quiver algebra
with explicit path basis), :class:`layerlen.reps.Rep` (a module as a
quiver representation), and the functor expressions in
:mod:`layerlen.functors`.  The FastAPI app in :mod:`layerlen.service`
exposes every operation; :mod:`layerlen.cli` is a thin client of it.
"""

__version__ = "0.1.0"

from .algebra import (  # noqa: F401
    Algebra,
    Ideal,
    Quiver,
    Relation,
    build_algebra,
    ideal_product,
    jacobson_radical,
)
from .functors import (  # noqa: F401
    INFINITE,
    Identity,
    QuotOf,
    Rad,
    Soc,
    TorsGen,
    TorsT,
    TorsX,
    class_membership,
    evaluate,
    layer_length,
    loewy_length,
    parse_functor,
    radical_layer_length,
    socle_layer_length,
    trace,
)
from .reps import (  # noqa: F401
    Morphism,
    PdResult,
    Rep,
    SubRep,
    act,
    direct_sum,
    find_isomorphism,
    find_isomorphism_certified,
    generated_subrep,
    hom_space,
    is_isomorphic,
    proj_dim,
    projective,
    projective_cover,
    quotient,
    radical,
    random_module,
    regular_module,
    simple,
    socle,
    syzygy,
    syzygy_power,
    top,
)
from .textio import parse_algebra, parse_module, print_algebra, print_module  # noqa: F401
