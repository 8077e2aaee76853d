"""Ascent and descent statistics over s-inversion sequences, signed multiset
permutations and signed labeled forests, with exact verification of their
equidistribution identities."""

from .genfunc import ClosedForm, Polynomial, expand_rational, f_count, is_real_rooted, sturm_distinct_real_roots, \
    verify_fcount_transform, verify_series_identity
from .inversion import DOUBLED, HALVED_IPRIME, NATURAL, PAPER_I, PAPER_IPRIME, InversionSequence, SRule, \
    ascent_polynomial, ascent_set, ascent_set_D, enumerate_inversion_sequences, term
from .signedperm import MultisetSpec, des_alt, des_B, des_B_set, des_D, descent_polynomial, enumerate_even_signed, \
    enumerate_signed_words, family_spec, reverse_negate

__version__ = "0.1.0"
