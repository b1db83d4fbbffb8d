"""Primality of Fermat numbers F_n = 2^(2^n) + 1 by a seed-5 squaring chain,
with the Lucas/Lehmer sequence machinery over Z[sqrt(7)] behind it and an
independent Pepin oracle beside it.
"""

from .lucas import (
    ALTERNATE_PARAMS,
    EXACT_INDEX_CAP,
    LehmerPair,
    LucasParams,
    ParityMismatchError,
    STANDARD_PARAMS,
    alternate_params_pair,
    check_sum_identity_u,
    check_sum_identity_v,
    gcd_uv,
    iter_pairs,
    lehmer_pairs_exact,
    normalize,
    s_from_v,
    uv_exact,
    uv_mod,
)
from .primality import (
    CongruenceReport,
    FermatNumber,
    InconclusiveError,
    RankResult,
    ResidueCheck,
    SSequenceTrace,
    Verdict,
    appendix_residues,
    certify_via_rank,
    fermat_llt,
    is_prime,
    lehmer_congruence_checks,
    mersenne_llt,
    pepin,
    rank_of_apparition,
    s_sequence,
    trial_division,
)
from .quadratic import (
    QuadInt,
    RingCtx,
    balanced_residue,
    fermat_mod,
    half_mod,
    mersenne_mod,
    qadd,
    qmul,
)
from .symbols import SymbolTriple, fermat_symbols_closed_form, jacobi, symbol_triple

__version__ = "0.1.0"

__all__ = [
    "ALTERNATE_PARAMS",
    "CongruenceReport",
    "EXACT_INDEX_CAP",
    "FermatNumber",
    "InconclusiveError",
    "LehmerPair",
    "LucasParams",
    "ParityMismatchError",
    "QuadInt",
    "RankResult",
    "ResidueCheck",
    "RingCtx",
    "SSequenceTrace",
    "STANDARD_PARAMS",
    "SymbolTriple",
    "Verdict",
    "alternate_params_pair",
    "appendix_residues",
    "balanced_residue",
    "certify_via_rank",
    "check_sum_identity_u",
    "check_sum_identity_v",
    "fermat_llt",
    "fermat_mod",
    "fermat_symbols_closed_form",
    "gcd_uv",
    "half_mod",
    "is_prime",
    "iter_pairs",
    "jacobi",
    "lehmer_congruence_checks",
    "lehmer_pairs_exact",
    "mersenne_llt",
    "mersenne_mod",
    "normalize",
    "pepin",
    "qadd",
    "qmul",
    "rank_of_apparition",
    "s_from_v",
    "s_sequence",
    "symbol_triple",
    "trial_division",
    "uv_exact",
    "uv_mod",
]
