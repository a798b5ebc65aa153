"""Exact spherical functions of wreath-product Gelfand triples."""

from .cyclo import CycNum, cyc, parse_cyc, zeta
from .groups import (
    CharacterTable,
    ClassFusion,
    FiniteGroup,
    bundled,
    fuse_classes,
    linear_characters,
    load_group,
    load_table,
    twisted_indicator,
    validate_table,
)
from .partitions import MultiPartition, Partition, doubling, multipartitions, partitions_of
from .spherical import (
    Caps,
    SphericalContext,
    SphericalTable,
    build_table,
    ch_image_product,
    ch_map,
    coset_order,
    reconcile,
)
from .symfunc import SymFuncElem, jack_p_expr, schur_p_expr, schurq_p_expr, sym_character
from .wreath import (
    PairedChar,
    WreathElement,
    class_type,
    coset_rep,
    decompose_induced,
    hg_elements,
    irrep_label_set,
    wreath_character,
)

__version__ = "0.1.0"
