"""Wilson window construction, lattice time-frequency analysis and
coefficient decay classification."""

from ._core import (
    AlignmentError,
    CorpusEntry,
    CoverageError,
    DistributionInput,
    GaborCoeffs,
    GridError,
    NormComponent,
    SampledFunction,
    ValidationError,
    WilsonCoeffs,
    Window,
    analyze_entry,
    bump,
    check_symmetry,
    classify,
    corpus_names,
    corpus_to_json,
    decay_profile,
    enumerate_indices,
    gabor_analysis,
    gabor_from_json,
    gabor_synthesis,
    gaussian,
    gram_matrix,
    gram_to_csv,
    inner_product,
    l2_norm,
    make_entry,
    make_window,
    mixed_norm,
    pair_distribution,
    reindex_i2,
    reindex_v,
    reindex_w,
    relative_l2_error,
    sampled_from_json,
    smooth_step,
    stft,
    tf_shift,
    weight,
    wilson_analysis,
    wilson_analyze_distribution,
    wilson_atom,
    wilson_atom_derivative,
    wilson_atom_value,
    wilson_condition_residual,
    wilson_from_json,
    wilson_synthesis,
    window_l2_norm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
