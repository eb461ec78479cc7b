"""Frequent simplet mining in simplicial complexes."""

from .canon import CanonicalForm, Registry, canonical_form
from .complex_store import ComplexStore, ParseError, load_complex, load_path
from .miner import MiningConfig, MiningResult, mine
from .simplet import Simplet

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "ComplexStore",
    "MiningConfig",
    "MiningResult",
    "ParseError",
    "Registry",
    "Simplet",
    "canonical_form",
    "load_complex",
    "load_path",
    "mine",
]
