"""Exact toolkit for the generalized hockey-stick identity and its sign-reversing involution."""

from .exact_core import (Composition, binomial, composition_universe, extend_first,
                         prepend_two, shrink_first, sign)
from .identity import (VerificationReport, lhs, oeis_terms, rhs, rhs_pucks, rhs_terms,
                       verify)
from .involution import (Case, InvolutionContext, LabeledLatticeSequence, classify,
                         enumerate_universe, fixed_points, tau, weight)
from .lattice import LatticeSequence, PathStats, ascent_set, enumerate_sequences, path_stats, phi, psi
from .tableau import (LabeledTableau, count_tableaux, enumerate_tableaux, first_label, oplus,
                      plus, shrink)

__version__ = "0.1.0"
