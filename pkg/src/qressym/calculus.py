"""Q-Res+S: resolution, universal reduction and the symmetry rule.

Proofs are sequences of steps with ids 1..k. A step names its premises by
id; its conclusion is recomputed by the checker. Steps built by the proof
generators also carry the conclusion, which the checker compares against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from .core import QBF, Clause, Prefix
from .symmetry import Symmetry, apply_to_clause, is_symmetry

AXIOM = "a"
RESOLVE = "r"
REDUCE = "u"
SYMMETRY = "y"

KIND_NAMES = {AXIOM: "axiom", RESOLVE: "resolve", REDUCE: "reduce", SYMMETRY: "symmetry"}


class Reason(str, enum.Enum):
    EMPTY_PROOF = "empty-proof"
    BAD_ID = "bad-id"
    BAD_PREMISE = "bad-premise"
    AXIOM_INDEX = "axiom-index"
    AXIOM_MISMATCH = "axiom-mismatch"
    UNKNOWN_VARIABLE = "unknown-variable"
    PIVOT_MISSING = "pivot-missing"
    PIVOT_COMPLEMENT_MISSING = "pivot-complement-missing"
    PIVOT_UNIVERSAL = "pivot-universal"
    TAUTOLOGY = "tautological-resolvent"
    REDUCE_MISSING = "reduced-literal-missing"
    REDUCE_EXISTENTIAL = "reduced-literal-existential"
    REDUCE_COMPLEMENT = "reduced-complement-present"
    REDUCE_BLOCKED = "reduction-blocked"
    SYM_DISABLED = "symmetry-rule-disabled"
    SYM_UNKNOWN = "unknown-symmetry"
    SYM_INVALID = "not-a-symmetry"
    CONCLUSION_MISMATCH = "conclusion-mismatch"
    NOT_REFUTATION = "empty-clause-not-derived"


class RuleError(ValueError):
    def __init__(self, reason: Reason, message: str):
        super().__init__(message)
        self.reason = reason


class TraceError(ValueError):
    pass


def _known(lit: int, p: Prefix) -> None:
    if abs(lit) not in p:
        raise RuleError(Reason.UNKNOWN_VARIABLE, "variable %d not in prefix" % abs(lit))


def resolve(c1: Clause, c2: Clause, pivot: int, p: Prefix) -> Clause:
    if pivot not in c1:
        raise RuleError(Reason.PIVOT_MISSING, "pivot %d not in first premise" % pivot)
    if -pivot not in c2:
        raise RuleError(Reason.PIVOT_COMPLEMENT_MISSING, "literal %d not in second premise" % -pivot)
    _known(pivot, p)
    if not p.is_existential(pivot):
        raise RuleError(Reason.PIVOT_UNIVERSAL, "pivot %d is universal" % pivot)
    res = Clause(tuple(l for l in c1 if l != pivot) + tuple(l for l in c2 if l != -pivot))
    if res.is_tautology:
        raise RuleError(Reason.TAUTOLOGY, "resolvent %r is tautological" % (list(res),))
    return res


def reduce(c: Clause, lit: int, p: Prefix) -> Clause:
    if lit not in c:
        raise RuleError(Reason.REDUCE_MISSING, "literal %d not in premise" % lit)
    _known(lit, p)
    if not p.is_universal(lit):
        raise RuleError(Reason.REDUCE_EXISTENTIAL, "literal %d is existential" % lit)
    if -lit in c:
        raise RuleError(Reason.REDUCE_COMPLEMENT, "premise contains %d and %d" % (lit, -lit))
    for k in c:
        if k == lit:
            continue
        _known(k, p)
        # only existential literals to the right block reduction
        if p.is_existential(k) and not p.precedes(k, lit):
            raise RuleError(Reason.REDUCE_BLOCKED,
                            "existential %d is not left of %d" % (k, lit))
    return c.without(lit)


@dataclass(frozen=True)
class ProofStep:
    """One inference. ``args`` depends on ``kind``:

    a: (matrix_index,)   r: (premise1, premise2, pivot)
    u: (premise, lit)    y: (premise,) with ``sym`` naming the symmetry
    """

    id: int
    kind: str
    args: Tuple[int, ...]
    sym: Optional[str] = None
    conclusion: Optional[Clause] = field(default=None, compare=False)
    label: Optional[str] = field(default=None, compare=False)

    @property
    def premises(self) -> Tuple[int, ...]:
        if self.kind == AXIOM:
            return ()
        if self.kind == RESOLVE:
            return self.args[:2]
        return self.args[:1]


@dataclass(frozen=True)
class Proof:
    steps: Tuple[ProofStep, ...] = ()
    max_var: Optional[int] = None

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def is_refutation(self) -> bool:
        return bool(self.steps) and self.steps[-1].conclusion is not None \
            and self.steps[-1].conclusion.is_empty

    def step(self, sid: int) -> ProofStep:
        return self.steps[sid - 1]

    def labelled(self, label: str) -> ProofStep:
        for s in self.steps:
            if s.label == label:
                return s
        raise KeyError(label)

    def counts(self) -> Dict[str, int]:
        return step_counts(self.steps)

    def rule_steps(self) -> int:
        """Inference count without axiom steps."""
        return sum(1 for s in self.steps if s.kind != AXIOM)


def step_counts(steps: Sequence[ProofStep]) -> Dict[str, int]:
    out = {name: 0 for name in KIND_NAMES.values()}
    for s in steps:
        out[KIND_NAMES[s.kind]] += 1
    out["rules"] = out["resolve"] + out["reduce"] + out["symmetry"]
    out["total"] = len(steps)
    return out


@dataclass
class CheckReport:
    accepted: bool
    failing_step: Optional[int] = None
    reason: Optional[Reason] = None
    message: str = ""
    step_counts: Dict[str, int] = field(default_factory=dict)
    refutation: bool = False
    conclusions: List[Clause] = field(default_factory=list, repr=False)

    @property
    def verdict(self) -> str:
        return "ACCEPT" if self.accepted else "REJECT"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "failing_step": self.failing_step,
            "reason": self.reason.value if self.reason else None,
            "message": self.message,
            "refutation": self.refutation,
            "step_counts": dict(self.step_counts),
        }


def _derive(step: ProofStep, q: QBF, concl: List[Clause],
            symtab: Dict[str, Symmetry], sym_ok: Dict[str, bool], allow_sym: bool) -> Clause:
    for pid in step.premises:
        if not 1 <= pid < step.id:
            raise RuleError(Reason.BAD_PREMISE, "premise %d is not an earlier step" % pid)
    if step.kind == AXIOM:
        (idx,) = step.args
        if not 1 <= idx <= len(q.matrix):
            raise RuleError(Reason.AXIOM_INDEX, "no matrix clause %d" % idx)
        return q.matrix[idx - 1]
    if step.kind == RESOLVE:
        p1, p2, pivot = step.args
        return resolve(concl[p1 - 1], concl[p2 - 1], pivot, q.prefix)
    if step.kind == REDUCE:
        p1, lit = step.args
        return reduce(concl[p1 - 1], lit, q.prefix)
    if step.kind == SYMMETRY:
        if not allow_sym:
            raise RuleError(Reason.SYM_DISABLED, "symmetry rule not allowed")
        s = symtab.get(step.sym)
        if s is None:
            raise RuleError(Reason.SYM_UNKNOWN, "unknown symmetry %r" % step.sym)
        if step.sym not in sym_ok:
            sym_ok[step.sym] = is_symmetry(s, q)
        if not sym_ok[step.sym]:
            raise RuleError(Reason.SYM_INVALID, "%s is not a symmetry of the formula" % step.sym)
        return apply_to_clause(s, concl[step.args[0] - 1])
    raise RuleError(Reason.BAD_ID, "unknown step kind %r" % step.kind)


def check_proof(q: QBF, syms: Sequence[Symmetry], pf: Proof, allow_sym: bool = True,
                require_refutation: bool = True) -> CheckReport:
    """Recompute every step of ``pf`` against ``q``.

    Rejection reports the first failing step id, or 0 for an empty proof.
    With ``require_refutation`` a proof whose last conclusion is nonempty is
    rejected at its last step.
    """
    symtab = {s.name: s for s in syms}
    sym_ok: Dict[str, bool] = {}
    counts = step_counts(pf.steps)
    if not pf.steps:
        return CheckReport(False, 0, Reason.EMPTY_PROOF, "proof has no steps", counts)
    concl: List[Clause] = []
    for i, step in enumerate(pf.steps, 1):
        if step.id != i:
            return CheckReport(False, i, Reason.BAD_ID, "expected step id %d, got %d" % (i, step.id),
                               counts, conclusions=concl)
        try:
            c = _derive(step, q, concl, symtab, sym_ok, allow_sym)
        except RuleError as e:
            return CheckReport(False, i, e.reason, str(e), counts, conclusions=concl)
        if step.conclusion is not None and step.conclusion != c:
            reason = Reason.AXIOM_MISMATCH if step.kind == AXIOM else Reason.CONCLUSION_MISMATCH
            return CheckReport(False, i, reason, "claimed %r, derived %r"
                               % (list(step.conclusion), list(c)), counts, conclusions=concl)
        concl.append(c)
    refutation = concl[-1].is_empty
    if require_refutation and not refutation:
        return CheckReport(False, len(concl), Reason.NOT_REFUTATION,
                           "last step derives %r" % (list(concl[-1]),), counts,
                           conclusions=concl)
    return CheckReport(True, None, None, "", counts, refutation, concl)


def annotate(q: QBF, syms: Sequence[Symmetry], pf: Proof) -> Proof:
    """Return ``pf`` with every step's conclusion filled in."""
    rep = check_proof(q, syms, pf, allow_sym=True, require_refutation=False)
    if not rep.accepted:
        raise RuleError(rep.reason, "step %s: %s" % (rep.failing_step, rep.message))
    steps = tuple(replace(s, conclusion=c) for s, c in zip(pf.steps, rep.conclusions))
    return Proof(steps, pf.max_var)


def eliminate_symmetry_steps(q: QBF, syms: Sequence[Symmetry], pf: Proof) -> Proof:
    """Rewrite ``pf`` into an equivalent proof without symmetry steps.

    A symmetry step on premise ``T`` is replaced by the image of the whole
    derivation of ``T`` under that symmetry: axioms map to the matrix clauses
    they are sent to, resolution and reduction steps map to the same rule on
    the mapped literals. Nested symmetry steps compose their maps. Identical
    steps are shared, and steps that do not contribute to the final clause
    are dropped. A proof without symmetry steps is returned unchanged.
    """
    rep = check_proof(q, syms, pf, allow_sym=True, require_refutation=False)
    if not rep.accepted:
        raise ValueError("input proof rejected at step %s: %s" % (rep.failing_step, rep.message))
    if not any(s.kind == SYMMETRY for s in pf.steps):
        return pf

    symtab = {s.name: s for s in syms}
    ident = Symmetry("id", ())
    where = {}
    for i, c in enumerate(q.matrix, 1):
        where.setdefault(c, i)

    out: List[ProofStep] = []
    out_concl: List[Clause] = []
    by_shape: Dict[tuple, int] = {}
    memo: Dict[Tuple[int, tuple], int] = {}

    def emit(kind, args, sym=None) -> int:
        key = (kind, args)
        if key in by_shape:
            return by_shape[key]
        sid = len(out) + 1
        st = ProofStep(sid, kind, args, sym)
        c = _derive(st, q, out_concl, symtab, {}, False)
        out.append(replace(st, conclusion=c))
        out_concl.append(c)
        by_shape[key] = sid
        return sid

    # iterative post-order over (step id, accumulated map)
    root = (pf.steps[-1].id, ident)
    stack = [(root, False)]
    while stack:
        (sid, tau), expanded = stack.pop()
        key = (sid, tau.image)
        if key in memo:
            continue
        st = pf.step(sid)
        if st.kind == SYMMETRY:
            inner = (st.args[0], symtab[st.sym].then(tau, "t"))
            ikey = (inner[0], inner[1].image)
            if ikey in memo:
                memo[key] = memo[ikey]
            elif expanded:
                raise AssertionError("unresolved symmetry image")
            else:
                stack.append(((sid, tau), True))
                stack.append((inner, False))
            continue
        if st.kind == AXIOM:
            image = apply_to_clause(tau, q.matrix[st.args[0] - 1])
            memo[key] = emit(AXIOM, (where[image],))
            continue
        kids = [(pid, tau) for pid in st.premises]
        missing = [k for k in kids if (k[0], k[1].image) not in memo]
        if missing:
            if expanded:
                raise AssertionError("unresolved premise")
            stack.append(((sid, tau), True))
            stack.extend((k, False) for k in reversed(missing))
            continue
        new_ids = tuple(memo[(k[0], k[1].image)] for k in kids)
        if st.kind == RESOLVE:
            memo[key] = emit(RESOLVE, new_ids + (tau(st.args[2]),))
        else:
            memo[key] = emit(REDUCE, new_ids + (tau(st.args[1]),))

    final = memo[(root[0], ident.image)]
    assert final == len(out), "final step must be emitted last"
    return Proof(tuple(out), pf.max_var)


def parse_trace(text: str) -> Proof:
    steps: List[ProofStep] = []
    max_var = None
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if steps or declared is not None:
                raise TraceError("line %d: header must come first" % lineno)
            if len(toks) != 4 or toks[1] != "qrps":
                raise TraceError("line %d: malformed header" % lineno)
            try:
                max_var, declared = int(toks[2]), int(toks[3])
            except ValueError:
                raise TraceError("line %d: malformed header" % lineno) from None
            continue
        if len(toks) < 3 or toks[-1] != "0":
            raise TraceError("line %d: step must be '<id> <tag> ... 0'" % lineno)
        tag = toks[1]
        try:
            sid = int(toks[0])
            if tag == SYMMETRY:
                if len(toks) != 5:
                    raise TraceError("line %d: expected '<id> y <premise> <name> 0'" % lineno)
                nums, sym = (int(toks[2]),), toks[3]
            else:
                nums, sym = tuple(int(t) for t in toks[2:-1]), None
        except ValueError:
            raise TraceError("line %d: expected integers" % lineno) from None
        arity = {AXIOM: 1, RESOLVE: 3, REDUCE: 2, SYMMETRY: 1}.get(tag)
        if arity is None:
            raise TraceError("line %d: unknown step tag %r" % (lineno, tag))
        if len(nums) != arity:
            raise TraceError("line %d: wrong number of arguments for %r" % (lineno, tag))
        if sid != len(steps) + 1:
            raise TraceError("line %d: id gap, expected %d got %d" % (lineno, len(steps) + 1, sid))
        st = ProofStep(sid, tag, nums, sym)
        for pid in st.premises:
            if not 1 <= pid < sid:
                raise TraceError("line %d: forward or unknown premise %d" % (lineno, pid))
        if tag in (RESOLVE, REDUCE) and nums[-1] == 0:
            raise TraceError("line %d: literal 0" % lineno)
        if tag == AXIOM and nums[0] < 1:
            raise TraceError("line %d: clause index must be positive" % lineno)
        steps.append(st)
    if declared is not None and declared != len(steps):
        raise TraceError("header declares %d steps, found %d" % (declared, len(steps)))
    return Proof(tuple(steps), max_var)


def serialize_trace(pf: Proof) -> str:
    lines = []
    if pf.max_var is not None:
        lines.append("p qrps %d %d" % (pf.max_var, len(pf.steps)))
    for s in pf.steps:
        if s.kind == SYMMETRY:
            lines.append("%d y %d %s 0" % (s.id, s.args[0], s.sym))
        else:
            lines.append("%d %s %s 0" % (s.id, s.kind, " ".join(str(a) for a in s.args)))
    return "".join(l + "\n" for l in lines)
