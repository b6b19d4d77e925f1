"""crossing-ledger: k-planar topological graph drawings.

Represent drawings as planarized combinatorial maps, validate the drawing
rules (crossing budget, non-homotopic multi-edges), extract the largest
crossing-free substructure, decompose the remaining edges into sticks and
middle parts, audit edge-density bounds, and generate the tight family of
densest 3-planar drawings.
"""

__version__ = "0.1.0"

from .drawing import (
    DrawingSpec,
    FaceWalk,
    PlanarizedMap,
    Violation,
    build_map,
    faces_of,
    restrict,
    spec_violations,
)
from .errors import (
    BadHint,
    BadN,
    BudgetExceeded,
    CrossingLedgerError,
    DanglingCrossing,
    InvalidRotation,
    InvariantError,
    NonSpherical,
    NotHexagon,
    ParseError,
    UnsupportedK,
)
from .validate import (
    ValidationReport,
    check_homotopy,
    check_k_planar,
    check_sanity,
    check_spec,
    validate_drawing,
)
from .skeleton import (
    ConflictGraph,
    SkeletonDecomposition,
    conflict_graph,
    decompose_with,
    extract_skeleton,
    skeleton_faces,
)
from .segments import (
    FaceProfile,
    SegmentPiece,
    classify_middle,
    classify_stick,
    decompose,
    face_profiles,
)
from .audit import (
    AssociationResult,
    AuditReport,
    associate,
    bounds_table,
    density_report,
    k_bound,
    overfull_triangles,
    structural_predicates,
)
from .generator import (
    FrameSpec,
    HexGadget,
    chords_interleave,
    frame_spec,
    generate_optimal,
    hexagon_gadget,
    theta_frame,
)
from .interchange import (
    emit_drawing,
    input_digest,
    parse_drawing,
    parse_text,
    report_document,
)
from .figures import export_figure

__all__ = [
    "__version__",
    "DrawingSpec",
    "FaceWalk",
    "PlanarizedMap",
    "Violation",
    "build_map",
    "faces_of",
    "restrict",
    "spec_violations",
    "ValidationReport",
    "check_homotopy",
    "check_k_planar",
    "check_sanity",
    "check_spec",
    "validate_drawing",
    "ConflictGraph",
    "SkeletonDecomposition",
    "conflict_graph",
    "decompose_with",
    "extract_skeleton",
    "skeleton_faces",
    "FaceProfile",
    "SegmentPiece",
    "classify_middle",
    "classify_stick",
    "decompose",
    "face_profiles",
    "AssociationResult",
    "AuditReport",
    "associate",
    "bounds_table",
    "density_report",
    "k_bound",
    "overfull_triangles",
    "structural_predicates",
    "FrameSpec",
    "HexGadget",
    "chords_interleave",
    "frame_spec",
    "generate_optimal",
    "hexagon_gadget",
    "theta_frame",
    "emit_drawing",
    "input_digest",
    "parse_drawing",
    "parse_text",
    "report_document",
    "export_figure",
    "BadHint",
    "BadN",
    "BudgetExceeded",
    "CrossingLedgerError",
    "DanglingCrossing",
    "InvalidRotation",
    "InvariantError",
    "NonSpherical",
    "NotHexagon",
    "ParseError",
    "UnsupportedK",
]
