"""Short Q-Res and Q-Res+S refutations for symmetric QBF families, with a checker."""

from .calculus import (CheckReport, Proof, ProofStep, Reason, RuleError, TraceError, annotate,
                       check_proof, eliminate_symmetry_steps, parse_trace, reduce, resolve,
                       serialize_trace)
from .core import (EXISTS, FORALL, QBF, Clause, Prefix, QDIMACSError, normalize_clause,
                   parse_qdimacs, serialize_qdimacs)
from .families import FamilyId, family_symmetries, gen_family
from .oracle import OracleLimitError, evaluate
from .proofs import (proof_skeleton, prove, prove_kbkf_breaker, prove_kbkf_sym, prove_quparity_breaker,
                     prove_quparity_sym)
from .symmetry import (NonClausalBreakerError, Symmetry, apply_to_clause, breaker_clauses,
                       is_admissible, is_symmetry, parse_symmetries, serialize_symmetries)

__version__ = "0.1.0"
