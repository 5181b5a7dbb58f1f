"""Moufang loops from Cayley tables and from translation triples."""
from .axioms import (
    LadderReport,
    Rung,
    check_antiautomorphism,
    check_associative,
    check_flexible,
    check_inverse_property,
    check_loop,
    check_moufang,
    check_quasigroup,
    classify,
    inverse_map,
)
from .errors import AlgebraError
from .fixtures import chein_double, chein_s3, cyclic_group, random_loop, symmetric_group_3
from .formats import emit_cayley, emit_triple, parse_cayley, parse_triple
from .magma import CayleyTable, CheckReport, find_unit, is_latin_square, left_translation, right_translation
from .perm import Perm, compose, identity, inverse
from .triality import (
    BarMap,
    HypothesisReport,
    MoufangCertificate,
    TranslationTriple,
    check_group_element_identities,
    check_triple_closure,
    derive_bar,
    derive_unit_and_inverses,
    extract_triple,
    reconstruct_multiplication,
    run_proposition_suite,
    solve_in_loop,
    translation_triple,
    verify_hypotheses,
)

__version__ = "0.1.0"
