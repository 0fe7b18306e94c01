"""moakit: mixed orthogonal arrays and error-block codes over GF(q),
bridged by blockwise coordinate maps and trace duality.

The public layers, bottom up: `fields` (exact GF(q^m) arithmetic, trace,
Gram matrices, self-dual bases), `blockcode` (linear codes graded by block
support, Singleton-type classification), `moa` (strength, index tables,
Singleton sandwich, irredundancy), `bridge` (coordinate maps, conversions,
trace duals), `fileio` (the .moa/.code formats), and the `moakit` CLI.
"""

from .blockcode import (
    BlockCode,
    ParityCheck,
    Partition,
    SingletonReport,
    block_independence,
    block_weight,
    codewords,
    dual_code,
    make_code,
    min_block_distance,
    parity_check,
    singleton_report,
)
from .bridge import (
    CodeCertificate,
    CoordMap,
    IrredundancyReport,
    StrengthCertificate,
    array_to_code,
    code_to_array,
    irredundancy_from_code,
    trace_dual,
)
from .errors import ToolkitError
from .fields import (
    Basis,
    ExtField,
    PrimePower,
    find_self_dual_basis,
    make_ext_field,
    parse_field_descriptor,
    prime_power,
    self_dual_basis_exists,
)
from .fileio import (
    format_code,
    format_moa,
    parse_code_file,
    parse_code_text,
    parse_moa_file,
    parse_moa_text,
)
from .fixtures import ARRAY_FIXTURES, CODE_FIXTURES, fixture_path, fixtures_dir
from .kernels import BACKEND as KERNEL_BACKEND
from .moa import (
    ExtremalCheck,
    MixedArray,
    MoaReport,
    extremal_check,
    index_table,
    is_irredundant,
    is_linear,
    max_strength,
    min_hamming_distance,
    min_index,
    mixed_array,
    singleton_analysis,
    subset_index,
    verify_strength,
)

__version__ = "0.1.0"
