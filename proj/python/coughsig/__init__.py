"""Frame-level spectral descriptors for short audio recordings.

Thin wrapper over the C++ core: decode or synthesize clips, extract the
seven per-frame descriptors, aggregate groups into summary statistics and
histograms, and compare groups.
"""

from ._core import (
    ATTRIBUTES,
    CANONICAL_RATE,
    AudioClip,
    ClipTooShort,
    ComparisonReport,
    DuplicateLabels,
    EmptyAudio,
    EmptyGroup,
    EmptyInput,
    Error,
    GroupReport,
    InvalidArgument,
    InvalidFrameLength,
    InvalidRange,
    InvalidSpec,
    IoError,
    MalformedFile,
    SilentFrame,
    TooFewFrames,
    UnsupportedFormat,
    canonicalize,
    characterize_group,
    compare_groups,
    decode_wav,
    export_comparison,
    export_report,
    extract,
    histogram,
    load_group_report,
    percentile,
    reference_tables,
    resample,
    summarize,
    synth,
    write_wav,
)

__version__ = "1.0.0"

__all__ = [
    "ATTRIBUTES",
    "CANONICAL_RATE",
    "AudioClip",
    "ClipTooShort",
    "ComparisonReport",
    "DuplicateLabels",
    "EmptyAudio",
    "EmptyGroup",
    "EmptyInput",
    "Error",
    "GroupReport",
    "InvalidArgument",
    "InvalidFrameLength",
    "InvalidRange",
    "InvalidSpec",
    "IoError",
    "MalformedFile",
    "SilentFrame",
    "TooFewFrames",
    "UnsupportedFormat",
    "canonicalize",
    "characterize_group",
    "compare_groups",
    "decode_wav",
    "export_comparison",
    "export_report",
    "extract",
    "histogram",
    "load_group_report",
    "percentile",
    "reference_tables",
    "resample",
    "summarize",
    "synth",
    "write_wav",
]
