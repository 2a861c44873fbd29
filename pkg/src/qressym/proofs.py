"""Linear-size refutations of the KBKF and QUPARITY families.

Two strategies per family: Q-Res on the formula extended by its symmetry
breaker, and Q-Res+S on the original formula. Steps are labelled with the
clause names used in the derivations (``U_0``, ``V_1'`` and so on) so tests
can look up intermediate clauses.

The step structure depends only on index arithmetic and is built in O(n) by
``proof_skeleton``, which leaves conclusions empty. The ``prove_*`` functions
also build the formula and fill in every conclusion; that costs O(n^2)
because the intermediate clauses grow linearly.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .calculus import AXIOM, REDUCE, RESOLVE, SYMMETRY, Proof, ProofStep, reduce, resolve
from .core import QBF, Clause
from .families import FamilyId, KBKFVars, QuparityVars, family_symmetries, gen_family
from .symmetry import Symmetry, apply_to_clause, breaker_clauses


class _Builder:
    """Collects steps; with a formula it also computes each conclusion."""

    def __init__(self, q: Optional[QBF], syms: Sequence[Symmetry] = (), max_var: int = 0):
        self.q = q
        self.syms = {s.name: s for s in syms}
        self.annotate = q is not None
        self.max_var = q.num_vars if q is not None else max_var
        self.steps: List[ProofStep] = []
        self._axioms: Dict[int, int] = {}

    def _push(self, kind, args, conclusion, sym=None, label=None) -> int:
        sid = len(self.steps) + 1
        self.steps.append(ProofStep(sid, kind, tuple(args), sym, conclusion, label))
        return sid

    def _concl(self, sid: int) -> Optional[Clause]:
        return self.steps[sid - 1].conclusion

    def axiom(self, idx: int) -> int:
        """Step id for matrix clause ``idx``, emitted on first use."""
        if idx not in self._axioms:
            c = self.q.matrix[idx - 1] if self.annotate else None
            self._axioms[idx] = self._push(AXIOM, (idx,), c)
        return self._axioms[idx]

    def res(self, s1: int, s2: int, pivot: int, label=None) -> int:
        c = None
        if self.annotate:
            c = resolve(self._concl(s1), self._concl(s2), pivot, self.q.prefix)
        return self._push(RESOLVE, (s1, s2, pivot), c, label=label)

    def red(self, s1: int, lit: int, label=None) -> int:
        c = reduce(self._concl(s1), lit, self.q.prefix) if self.annotate else None
        return self._push(REDUCE, (s1, lit), c, label=label)

    def sym(self, s1: int, name: str, label=None) -> int:
        c = apply_to_clause(self.syms[name], self._concl(s1)) if self.annotate else None
        return self._push(SYMMETRY, (s1,), c, sym=name, label=label)

    def proof(self) -> Proof:
        return Proof(tuple(self.steps), self.max_var)


def _need(n: int, lo: int) -> None:
    if not isinstance(n, int) or n < lo:
        raise ValueError("n must be an integer >= %d" % lo)


def _kbkf_breaker_steps(b: _Builder, n: int) -> None:
    v = KBKFVars(n)
    x, y, a, z = v.x, v.y, v.a, v.z
    m = 4 * n + 1  # breaker clause (-x_j | y_j) sits at m + j

    u = b.res(b.axiom(v.C(1)), b.axiom(m + 1), -y(1), label="U_0")
    for j in range(1, n):
        ut = b.res(b.axiom(v.C(2 * j)), u, x(j), label="~U_%d" % j)
        u = b.res(ut, b.axiom(m + j + 1), -y(j + 1), label="U_%d" % j)
    w = b.res(b.axiom(v.C(2 * n)), u, x(n), label="V_0")
    for j in range(1, n + 1):
        w = b.res(w, b.axiom(v.B(2 * j)), -z(j), label="V_%d" % j)
    for j in range(1, n + 1):
        w = b.red(w, -a(j), label="W_%d" % j)


def _quparity_breaker_steps(b: _Builder, n: int) -> None:
    v = QuparityVars(n)
    x, y = v.x, v.y
    # breaker clauses follow the matrix: (-x_1 | x_2) at m+1, -x_j at m+j
    m = 8 * (n - 1) + 2

    u = b.res(b.axiom(v.D(2)), b.axiom(m + 1), x(1), label="U_1")
    u = b.res(u, b.axiom(m + 2), x(2), label="U_2")
    dt = {}
    for j in range(3, n + 1):
        dt[j] = b.res(b.axiom(v.D(j)), b.axiom(m + j), x(j), label="~D_%d" % j)
    for j in range(3, n + 1):
        u = b.res(u, dt[j], -y(j - 1), label="U_%d" % j)
    r = b.res(u, b.axiom(v.E(1)), -y(n), label="a1|a2")
    r = b.red(r, v.a1, label="a2")
    b.red(r, v.a2, label="empty")


def _kbkf_sym_steps(b: _Builder, n: int) -> None:
    # Per level: reduce a_j, map y_j to x_j, then resolve on x_j against
    # C_{2j-1} giving (y_{j-1} | -y_j | a_1..a_{j-1}), then on y_j.
    v = KBKFVars(n)
    x, y, a, z = v.x, v.y, v.a, v.z

    u = b.axiom(v.C(2 * n + 1))
    for j in range(n, 0, -1):
        u = b.res(u, b.axiom(v.B(2 * j - 1)), -z(j), label="U_%d" % j)
    w = u
    for j in range(n, 1, -1):
        vj = b.red(w, a(j), label="V_%d" % j)
        vp = b.sym(vj, "sigma%d" % j, label="V_%d'" % j)
        vpp = b.res(vp, b.axiom(v.C(2 * j - 1)), x(j), label="V_%d''" % j)
        w = b.res(vpp, vj, -y(j), label="W_%d" % (j - 1))
    v1 = b.red(w, a(1), label="V_1")
    vp = b.sym(v1, "sigma1", label="V_1'")
    vpp = b.res(vp, b.axiom(v.C(1)), x(1), label="V_1''")
    b.res(vpp, v1, -y(1), label="empty")


def _quparity_sym_steps(b: _Builder, n: int) -> None:
    v = QuparityVars(n)
    x, y = v.x, v.y

    # for n = 2 the first resolution already yields U_2
    u = b.res(b.axiom(v.D(n)), b.axiom(v.E(1)), -y(n), label="U_%d" % n)
    for j in range(n - 1, 1, -1):
        u = b.res(b.axiom(v.D(j)), u, -y(j), label="U_%d" % j)
    u = b.red(u, v.a2, label="V_%d|a1" % n)
    vj = b.red(u, v.a1, label="V_%d" % n)
    for j in range(n, 1, -1):
        wj = b.sym(vj, "sigma%d" % j, label="W_%d" % j)
        vj = b.res(vj, wj, x(j), label="V_%d" % (j - 1))
    w1 = b.sym(vj, "sigma1", label="W_1")
    w2 = b.sym(w1, "sigma2", label="W_2 (tail)")
    b.res(w1, w2, x(2), label="empty")


def prove_kbkf_breaker(n: int) -> Tuple[QBF, Proof]:
    """Refute KBKF_n plus its breaker ``(-x_i | y_i)`` in exactly 4n inferences."""
    _need(n, 1)
    base = gen_family(FamilyId.KBKF, n)
    q = base.with_clauses(breaker_clauses(base, family_symmetries(FamilyId.KBKF, n), check=False))
    b = _Builder(q)
    _kbkf_breaker_steps(b, n)
    return q, b.proof()


def prove_quparity_breaker(n: int) -> Tuple[QBF, Proof]:
    """Refute QUPARITY_n plus ``(-x_1 | x_2), -x_2, ..., -x_n`` in 2n+1 inferences."""
    _need(n, 2)
    base = gen_family(FamilyId.QUPARITY, n)
    q = base.with_clauses(
        breaker_clauses(base, family_symmetries(FamilyId.QUPARITY, n), check=False))
    b = _Builder(q)
    _quparity_breaker_steps(b, n)
    return q, b.proof()


def prove_kbkf_sym(n: int) -> Tuple[QBF, List[Symmetry], Proof]:
    """Refute KBKF_n in Q-Res+S with exactly 5n inferences."""
    _need(n, 1)
    q = gen_family(FamilyId.KBKF, n)
    syms = family_symmetries(FamilyId.KBKF, n)
    b = _Builder(q, syms)
    _kbkf_sym_steps(b, n)
    return q, syms, b.proof()


def prove_quparity_sym(n: int) -> Tuple[QBF, List[Symmetry], Proof]:
    """Refute QUPARITY_n in Q-Res+S with exactly 3n+2 inferences."""
    _need(n, 2)
    q = gen_family(FamilyId.QUPARITY, n)
    syms = family_symmetries(FamilyId.QUPARITY, n)
    b = _Builder(q, syms)
    _quparity_sym_steps(b, n)
    return q, syms, b.proof()


_STEPS = {
    (FamilyId.KBKF, "breaker"): (_kbkf_breaker_steps, 1),
    (FamilyId.KBKF, "symrule"): (_kbkf_sym_steps, 1),
    (FamilyId.QUPARITY, "breaker"): (_quparity_breaker_steps, 2),
    (FamilyId.QUPARITY, "symrule"): (_quparity_sym_steps, 2),
}


def _lookup(family, strategy):
    f = FamilyId.parse(family)
    if strategy not in ("breaker", "symrule"):
        raise ValueError("unknown strategy %r" % strategy)
    if (f, strategy) not in _STEPS:
        raise ValueError("no short proof construction for %s" % f.value)
    return f, _STEPS[f, strategy]


def proof_skeleton(family, n: int, strategy: str) -> Proof:
    """The step structure of a short proof, without conclusions, in O(n)."""
    f, (steps, lo) = _lookup(family, strategy)
    _need(n, lo)
    max_var = 4 * n if f is FamilyId.KBKF else 2 * n + 1
    b = _Builder(None, max_var=max_var)
    steps(b, n)
    return b.proof()


def prove(family, n: int, strategy: str):
    """Dispatch helper returning ``(formula, symmetries, proof)``.

    Breaker proofs return an empty symmetry list.
    """
    f, _ = _lookup(family, strategy)
    if f is FamilyId.KBKF:
        if strategy == "breaker":
            q, pf = prove_kbkf_breaker(n)
            return q, [], pf
        return prove_kbkf_sym(n)
    if strategy == "breaker":
        q, pf = prove_quparity_breaker(n)
        return q, [], pf
    return prove_quparity_sym(n)
