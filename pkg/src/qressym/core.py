"""Core QBF data model: literals, clauses, prefixes, formulas, and QDIMACS I/O.

Literals are DIMACS-style signed integers. A clause is stored sorted by
variable index (negative literal before positive) with duplicates removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

EXISTS = "e"
FORALL = "a"


class QDIMACSError(ValueError):
    """Raised on malformed QDIMACS input."""


def neg(lit: int) -> int:
    return -lit


def var(lit: int) -> int:
    return abs(lit)


def _lit_key(lit: int) -> Tuple[int, int]:
    return (abs(lit), lit > 0)


@dataclass(frozen=True)
class Clause:
    """Duplicate-free, canonically ordered set of literals."""

    literals: Tuple[int, ...] = ()

    def __post_init__(self):
        lits = self.literals
        if any(l == 0 for l in lits):
            raise ValueError("literal 0 is not allowed in a clause")
        canon = tuple(sorted(set(lits), key=_lit_key))
        object.__setattr__(self, "literals", canon)

    def __iter__(self) -> Iterator[int]:
        return iter(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __contains__(self, lit: object) -> bool:
        return lit in self.literals

    def __repr__(self) -> str:
        return "Clause(%s)" % list(self.literals)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    @property
    def is_tautology(self) -> bool:
        s = set(self.literals)
        return any(-l in s for l in s)

    def variables(self) -> List[int]:
        return [abs(l) for l in self.literals]

    def without(self, lit: int) -> "Clause":
        return Clause(tuple(l for l in self.literals if l != lit))


def normalize_clause(lits: Iterable[int]) -> Clause:
    return Clause(tuple(lits))


@dataclass(frozen=True)
class Prefix:
    """Ordered quantifier blocks, each ``(quantifier, variables)``.

    Adjacent blocks with the same quantifier are merged on construction, so
    every block is maximal.
    """

    blocks: Tuple[Tuple[str, Tuple[int, ...]], ...] = ()
    _block_of: Dict[int, int] = field(init=False, repr=False, compare=False)
    _position: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        merged: List[Tuple[str, List[int]]] = []
        for q, vs in self.blocks:
            if q not in (EXISTS, FORALL):
                raise ValueError("unknown quantifier %r" % (q,))
            vs = list(vs)
            if not vs:
                raise ValueError("empty quantifier block")
            if merged and merged[-1][0] == q:
                merged[-1][1].extend(vs)
            else:
                merged.append((q, vs))
        blocks = tuple((q, tuple(vs)) for q, vs in merged)
        block_of: Dict[int, int] = {}
        position: Dict[int, int] = {}
        for b, (_, vs) in enumerate(blocks):
            for v in vs:
                if v <= 0:
                    raise ValueError("variable index must be positive: %d" % v)
                if v in block_of:
                    raise ValueError("variable %d quantified twice" % v)
                block_of[v] = b
                position[v] = len(position)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_block_of", block_of)
        object.__setattr__(self, "_position", position)

    @classmethod
    def from_blocks(cls, *blocks: Tuple[str, Sequence[int]]) -> "Prefix":
        return cls(tuple((q, tuple(vs)) for q, vs in blocks))

    @property
    def variables(self) -> List[int]:
        return [v for _, vs in self.blocks for v in vs]

    def __contains__(self, v: object) -> bool:
        return v in self._block_of

    def block_of(self, v: int) -> int:
        return self._block_of[abs(v)]

    def position(self, v: int) -> int:
        return self._position[abs(v)]

    def quantifier(self, v: int) -> str:
        return self.blocks[self._block_of[abs(v)]][0]

    def is_existential(self, v: int) -> bool:
        return self.quantifier(v) == EXISTS

    def is_universal(self, v: int) -> bool:
        return self.quantifier(v) == FORALL

    def precedes(self, v: int, w: int) -> bool:
        """The order <_P: True iff ``v`` occurs strictly left of ``w``."""
        return self._position[abs(v)] < self._position[abs(w)]

    def max_var(self) -> int:
        return max(self._block_of, default=0)


@dataclass(frozen=True)
class QBF:
    prefix: Prefix
    matrix: Tuple[Clause, ...] = ()
    num_vars: Optional[int] = None

    def __post_init__(self):
        matrix = tuple(c if isinstance(c, Clause) else Clause(tuple(c)) for c in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        for c in matrix:
            for l in c:
                if abs(l) not in self.prefix:
                    raise ValueError("variable %d occurs in the matrix but not in the prefix" % abs(l))
        nv = self.num_vars
        if nv is None:
            nv = self.prefix.max_var()
        elif nv < self.prefix.max_var():
            raise ValueError("num_vars %d smaller than largest variable" % nv)
        object.__setattr__(self, "num_vars", nv)

    def with_clauses(self, extra: Iterable[Clause]) -> "QBF":
        return QBF(self.prefix, self.matrix + tuple(extra), self.num_vars)


def _ints(tokens: Sequence[str], lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise QDIMACSError("line %d: expected integers" % lineno) from None


def parse_qdimacs(text: str) -> QBF:
    header = None
    blocks: List[Tuple[str, List[int]]] = []
    clauses: List[Clause] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if header is not None:
                raise QDIMACSError("line %d: duplicate header" % lineno)
            if len(toks) != 4 or toks[1] != "cnf":
                raise QDIMACSError("line %d: malformed header %r" % (lineno, raw))
            nv, nc = _ints(toks[2:], lineno)
            if nv < 0 or nc < 0:
                raise QDIMACSError("line %d: negative counts in header" % lineno)
            header = (nv, nc)
            continue
        if header is None:
            raise QDIMACSError("line %d: content before header" % lineno)
        nv = header[0]
        if toks[0] in (EXISTS, FORALL):
            if clauses:
                raise QDIMACSError("line %d: quantifier line after clauses" % lineno)
            vs = _ints(toks[1:], lineno)
            if not vs or vs[-1] != 0:
                raise QDIMACSError("line %d: quantifier line must end in 0" % lineno)
            vs = vs[:-1]
            if not vs:
                raise QDIMACSError("line %d: empty quantifier block" % lineno)
            for v in vs:
                if v <= 0 or v > nv:
                    raise QDIMACSError("line %d: undeclared variable %d" % (lineno, v))
            if blocks and blocks[-1][0] == toks[0]:
                blocks[-1][1].extend(vs)
            else:
                blocks.append((toks[0], vs))
            continue
        lits = _ints(toks, lineno)
        if lits[-1] != 0:
            raise QDIMACSError("line %d: clause must end in 0" % lineno)
        lits = lits[:-1]
        for l in lits:
            if l == 0:
                raise QDIMACSError("line %d: literal 0 inside clause" % lineno)
            if abs(l) > nv:
                raise QDIMACSError("line %d: undeclared variable %d" % (lineno, abs(l)))
        clauses.append(Clause(tuple(lits)))
    if header is None:
        raise QDIMACSError("missing header")
    if len(clauses) != header[1]:
        raise QDIMACSError("header declares %d clauses, found %d" % (header[1], len(clauses)))
    try:
        prefix = Prefix(tuple((q, tuple(vs)) for q, vs in blocks))
        return QBF(prefix, tuple(clauses), header[0])
    except ValueError as e:
        raise QDIMACSError(str(e)) from None


def format_clause(c: Iterable[int]) -> str:
    return " ".join([str(l) for l in c] + ["0"])


def serialize_qdimacs(q: QBF) -> str:
    out = ["p cnf %d %d" % (q.num_vars, len(q.matrix))]
    for quant, vs in q.prefix.blocks:
        out.append(quant + " " + format_clause(vs))
    out.extend(format_clause(c) for c in q.matrix)
    return "\n".join(out) + "\n"


def read_qdimacs(path) -> QBF:
    with open(path) as f:
        return parse_qdimacs(f.read())


def write_qdimacs(path, q: QBF) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(serialize_qdimacs(q))
