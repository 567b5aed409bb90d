"""matprop: exact matrix algebra over pluggable commutative rigs, with a
term language for wiring diagrams, a complete diagram-equivalence
decision procedure, and a relation-driven rewrite engine."""

__version__ = "0.1.0"

from .errors import (
    ArityError, ConfigError, DomainError, MatpropError, NoMatchError,
    NotComparableError, ParseError, PathError, RigMismatchError, ShapeError,
    SourceSpan,
)
from .rigs import (
    ADDITIVE_INVERSES, BOOL, CHAR_TWO, F2, IDEMPOTENT_ADD, INT, NAT, NNRAT,
    RAT, RATFUNC, RIGS, Rig, RigElement, RigHom, get_rig, identity_hom,
    int_embedding, nat_embedding,
)
from .matrices import (
    Matrix, add, compose, elementary, format_matrix, from_ints, from_rows,
    generator_matrix, identity, map_entries, parse_matrix, symmetry, tensor,
    transpose, zeros,
)
from .terms import (
    DELTA, EPS, ETA, MU, SWAP, Arity, Delta, Eps, Eta, Id, Mu, Par, Scalar,
    Seq, Swap, Term, add_terms, arity_of, bundle_delta, bundle_mu, delta_n,
    mu_n, par, par_n, perm_term, prune_identities, right_nested, seq,
    zero_term,
)
from .syntax import parse_term, parse_term_source, print_term, render_dot
from .semantics import EvalContext, decompose, equal_terms, eval_term, normalize
from .rewrite import (
    RewriteResult, RewriteRule, RuleSet, apply_at, base_rules, extended_rules,
    find_matches, rewrite_bounded, ruleset_for,
)
from .finite import (
    AntipodeReport, Relation, Span, antipode_checks, format_relation,
    format_span, integer_scalar_term, matrix_to_rel, matrix_to_span,
    parse_relation, parse_span, rel_compose_oracle, rel_identity,
    rel_to_matrix, span_compose_oracle, span_identity, span_to_matrix,
    special_check,
)
from .axioms import AxiomCheck, run_axiom_suite
