"""Permutation-generated maps on Dyck paths."""
from .ccp import count_ccps, enumerate_ccps, invert, is_ccp, is_injective_on_paths
from .dyck import (
    Block,
    DyckPath,
    Pairing,
    catalan,
    down_positions,
    enumerate_paths,
    height,
    is_noncrossing,
    parse_word,
    path_from_tunneling,
    tunneling,
    up_positions,
)
from .perm import Perm, parse_perm
from .sigma import compose_action_check, permuted_rep, prefix_set, rep_as_path, sigma_path

__version__ = "0.1.0"
