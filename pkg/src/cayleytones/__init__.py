"""Musical systems as Cayley graphs of Z_n.

Modular arithmetic and affine maps, graph metrics and isometries,
generalized chords/scales/circles for n = p*q, exhaustive counterpoint
dichotomy searches, and equal-temperament WAV rendering.
"""

from .audio import (
    SAMPLE_RATE,
    Envelope,
    InvalidEnvelopeError,
    RenderEvent,
    RenderPlan,
    SampleBuffer,
    ToneSpec,
    envelope_from_dict,
    mix_chord,
    note_frequency,
    pure_tone,
    read_wav,
    render,
    shape_note,
    write_wav,
)
from .cayley import (
    MAX_MODULUS,
    CayleyGraph,
    GeneratorSet,
    GeneratorSetError,
    Path,
    UnreachableVertexError,
    distance,
    export_dot,
    is_isometry_bruteforce,
    is_isometry_by_generators,
    oriented_path_length,
)
from .counterpoint import (
    AmbiguousRefinementError,
    ConsonantSeed,
    Dichotomy,
    NoStrongDichotomyError,
    PartitionRecord,
    SearchReport,
    enumerate_weak_witnesses,
    extend_to_partitions,
    find_affine_for_partition,
    fux_dichotomy,
    maximal_consonant_extension,
    minimal_oriented_refinement,
    satisfies_strong,
    satisfies_weak,
    strong_search_report,
    sumset,
)
from .modular import (
    AffineMap,
    Automorphism,
    ModElement,
    ModRing,
    ModulusMismatchError,
    automorphisms,
    compose,
    fixed_points,
    is_involution,
    negation,
    units,
)
from .music import (
    DYAD,
    MAJOR,
    MINOR,
    CatalogEntry,
    Chord,
    CircleOfFifths,
    IntervalRow,
    InvalidChordError,
    MusicalSystem,
    Scale,
    SystemValidationError,
    chord_catalog,
    chord_from_steps,
    circle_of_fifths,
    interval_table,
    largest_chord_within_octave,
    scale,
    system_from_factors,
    triad,
    validate_system,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "AmbiguousRefinementError",
    "Automorphism",
    "CatalogEntry",
    "CayleyGraph",
    "Chord",
    "CircleOfFifths",
    "ConsonantSeed",
    "Dichotomy",
    "DYAD",
    "Envelope",
    "GeneratorSet",
    "GeneratorSetError",
    "IntervalRow",
    "InvalidChordError",
    "InvalidEnvelopeError",
    "MAJOR",
    "MAX_MODULUS",
    "MINOR",
    "ModElement",
    "ModRing",
    "ModulusMismatchError",
    "MusicalSystem",
    "NoStrongDichotomyError",
    "PartitionRecord",
    "Path",
    "RenderEvent",
    "RenderPlan",
    "SAMPLE_RATE",
    "SampleBuffer",
    "Scale",
    "SearchReport",
    "SystemValidationError",
    "ToneSpec",
    "UnreachableVertexError",
    "automorphisms",
    "chord_catalog",
    "chord_from_steps",
    "circle_of_fifths",
    "compose",
    "distance",
    "enumerate_weak_witnesses",
    "envelope_from_dict",
    "export_dot",
    "extend_to_partitions",
    "find_affine_for_partition",
    "fixed_points",
    "fux_dichotomy",
    "interval_table",
    "is_involution",
    "is_isometry_bruteforce",
    "is_isometry_by_generators",
    "largest_chord_within_octave",
    "maximal_consonant_extension",
    "minimal_oriented_refinement",
    "mix_chord",
    "negation",
    "note_frequency",
    "oriented_path_length",
    "pure_tone",
    "read_wav",
    "render",
    "satisfies_strong",
    "satisfies_weak",
    "scale",
    "shape_note",
    "strong_search_report",
    "sumset",
    "system_from_factors",
    "triad",
    "units",
    "validate_system",
    "write_wav",
]
