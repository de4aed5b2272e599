"""Exact computation with weight -1 Rota-Baxter operators on finite group
algebras: companion operators, descendent Hopf algebras, matched pairs,
double cross products, projection homomorphism pairs, and the isomorphism
and surjection they induce — every identity checked over the rationals with
zero tolerance.
"""

from ._version import __version__
from .linalg import (Matrix, Subspace, Vec, NoSolutionError, image_basis,
                     kernel_basis, rref, section_of, solve, vec, zero_vec)
from .groups import (DEFAULT_ENUM_CAP, EnumerationCapError, GroupMap,
                     GroupTable, InvalidGroupError,
                     abelian_rb_equals_endomorphisms, automorphism_orbit_count,
                     catalog, catalog_group, companion_group_map,
                     direct_product, endomorphisms, enumerate_group_rb,
                     from_cayley_table, group_rb_check, make_cyclic,
                     make_dihedral, make_klein_four, make_quaternion8,
                     make_symmetric)
from .hopf import (AxiomReport, HopfAxiomError, HopfData, HopfElement,
                   HopfMorphismReport, NotClosedError, SubHopf,
                   coalgebra_map_check, group_algebra, group_likes,
                   hopf_hom_check, is_cocommutative, lift_group_map,
                   make_hopf, sub_hopf_from_subspace, verify_hopf)
from .rota_baxter import (IdentityError, RBDerived, RBOperator, derive_all,
                          descendent, descendent_rb_check, rb_check,
                          rb_operator, s_b, star_product, tilde_op)
from .matched_pair import (DoubleCross, MatchedPairData, RBMatchedPair,
                           double_cross, matched_pair_check, mm3_check,
                           mp_from_rb, mrbe_check, trivial_actions)
from .projection import (InducedRB, ProjectionPair, RBMorphism, build_c_pair,
                         cmm_check, dmp_check, kernel_ideal_check,
                         lemma_suite, phi_iso, pi_hom, proj_pair_check,
                         rbp_operator)
from .serialize import (dump_hopf, hopf_from_json, hopf_to_json,
                        load_cayley_table, load_hopf, save_cayley_table)
from .report import (PHASE_ORDER, PHASE_STAGES, REPORT_SCHEMA, SWEEP_SCHEMA,
                     VerificationReport, run_sweep, run_verification)
