"""Brute-force QBF evaluation by plain game semantics.

Deliberately minimal: no propagation, no learning. Variables are assigned in
prefix order; an existential node is the OR of its two branches, a
universal node the AND. Clause counters let a branch stop as soon as a
clause is falsified or every clause is satisfied.
"""

from __future__ import annotations

from typing import Dict, List

from .core import QBF

DEFAULT_MAX_VARS = 24


class OracleLimitError(ValueError):
    pass


def evaluate(q: QBF, max_vars: int = DEFAULT_MAX_VARS) -> bool:
    order = q.prefix.variables
    if len(order) > max_vars:
        raise OracleLimitError("%d variables exceed the oracle limit of %d" % (len(order), max_vars))
    clauses = [c for c in q.matrix]
    if any(c.is_empty for c in clauses):
        return False
    # occurrences[lit] -> clause indices containing lit
    occ: Dict[int, List[int]] = {}
    for i, c in enumerate(clauses):
        for l in c:
            occ.setdefault(l, []).append(i)
    n_true = [0] * len(clauses)
    n_open = [len(c) for c in clauses]
    state = {"satisfied": 0}
    universal = [q.prefix.is_universal(v) for v in order]

    def assign(lit: int) -> bool:
        """Make ``lit`` true; return False if some clause becomes falsified."""
        ok = True
        for i in occ.get(lit, ()):
            if n_true[i] == 0:
                state["satisfied"] += 1
            n_true[i] += 1
        for i in occ.get(-lit, ()):
            n_open[i] -= 1
            if n_open[i] == 0 and n_true[i] == 0:
                ok = False
        return ok

    def unassign(lit: int) -> None:
        for i in occ.get(lit, ()):
            n_true[i] -= 1
            if n_true[i] == 0:
                state["satisfied"] -= 1
        for i in occ.get(-lit, ()):
            n_open[i] += 1

    def solve(k: int) -> bool:
        if state["satisfied"] == len(clauses):
            return True
        if k == len(order):
            # every clause has all literals assigned; none falsified reached here
            return state["satisfied"] == len(clauses)
        v = order[k]
        forall = universal[k]
        for lit in (v, -v):
            ok = assign(lit)
            result = ok and solve(k + 1)
            unassign(lit)
            if forall and not result:
                return False
            if not forall and result:
                return True
        return forall

    return solve(0)
