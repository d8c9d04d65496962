from .bitvector import INFEASIBLE, RankSelectBitVector, bv_rank, bv_select
from .tree import WaveletNode, WaveletTree, build_wavelet, wt_firstfit, wt_prv

__all__ = [
    'INFEASIBLE',
    'RankSelectBitVector',
    'WaveletNode',
    'WaveletTree',
    'build_wavelet',
    'bv_rank',
    'bv_select',
    'wt_firstfit',
    'wt_prv',
]
