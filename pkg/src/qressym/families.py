"""Generators for the KBKF, QUPARITY and hardened KBKF formula families.

Variable numbering is fixed so that generated files and traces are
reproducible byte for byte:

KBKF        x_j = 3(j-1)+1, y_j = 3(j-1)+2, a_j = 3j, z_j = 3n+j
KBKF_HARD   x_j = 4(j-1)+1, b_j = 4(j-1)+2, y_j = 4(j-1)+3, a_j = 4j, z_j = 4n+j
QUPARITY    x_j = j, a_1 = n+1, a_2 = n+2, y_j = n+1+j  (j >= 2)
"""

from __future__ import annotations

import enum
from typing import List

from .core import EXISTS, FORALL, QBF, Clause, Prefix
from .symmetry import Symmetry


class FamilyId(str, enum.Enum):
    KBKF = "kbkf"
    QUPARITY = "quparity"
    KBKF_HARD = "kbkf-hard"

    @classmethod
    def parse(cls, name) -> "FamilyId":
        if isinstance(name, cls):
            return name
        key = str(name).lower().replace("_", "-")
        for f in cls:
            if f.value == key:
                return f
        raise ValueError("unknown family %r" % (name,))

    def min_n(self) -> int:
        return 2 if self is FamilyId.QUPARITY else 1


def _check_n(f: FamilyId, n: int) -> None:
    if not isinstance(n, int) or n < f.min_n():
        raise ValueError("%s needs n >= %d, got %r" % (f.value, f.min_n(), n))


class KBKFVars:
    def __init__(self, n: int, hard: bool = False):
        self.n = n
        self.hard = hard
        self.width = 4 if hard else 3

    def x(self, j: int) -> int:
        return self.width * (j - 1) + 1

    def b(self, j: int) -> int:
        if not self.hard:
            raise ValueError("b_j exists only in the hardened variant")
        return 4 * (j - 1) + 2

    def y(self, j: int) -> int:
        return self.width * (j - 1) + (3 if self.hard else 2)

    def a(self, j: int) -> int:
        return self.width * j

    def z(self, j: int) -> int:
        return self.width * self.n + j

    # 1-based matrix positions
    def C(self, k: int) -> int:
        return k

    def B(self, k: int) -> int:
        return 2 * self.n + 1 + k


class QuparityVars:
    def __init__(self, n: int):
        self.n = n
        self.a1 = n + 1
        self.a2 = n + 2

    def x(self, j: int) -> int:
        return j

    def y(self, j: int) -> int:
        if j < 2:
            raise ValueError("y_j is defined for j >= 2")
        return self.n + 1 + j

    # 1-based matrix positions; primed clauses via primed=True
    def _group(self, j: int, off: int, primed: bool) -> int:
        base = 4 * (self.n - 1) + 2 if primed else 0
        return base + 4 * (j - 2) + off

    def A(self, j: int, primed: bool = False) -> int:
        return self._group(j, 1, primed)

    def B(self, j: int, primed: bool = False) -> int:
        return self._group(j, 2, primed)

    def C(self, j: int, primed: bool = False) -> int:
        return self._group(j, 3, primed)

    def D(self, j: int, primed: bool = False) -> int:
        return self._group(j, 4, primed)

    def E(self, k: int) -> int:
        return 4 * (self.n - 1) + k


def _kbkf(n: int, hard: bool) -> QBF:
    v = KBKFVars(n, hard)
    x, y, a, z = v.x, v.y, v.a, v.z
    blocks = []
    for j in range(1, n + 1):
        if hard:
            blocks += [(EXISTS, [x(j)]), (FORALL, [v.b(j)]), (EXISTS, [y(j)])]
        else:
            blocks.append((EXISTS, [x(j), y(j)]))
        blocks.append((FORALL, [a(j)]))
    zs = [z(j) for j in range(1, n + 1)]
    blocks.append((EXISTS, zs))

    clauses = [[-x(1), -y(1)]]
    for j in range(1, n):
        clauses.append([x(j), -a(j), -x(j + 1), -y(j + 1)])
        clauses.append([y(j), a(j), -x(j + 1), -y(j + 1)])
    clauses.append([x(n), -a(n)] + [-zi for zi in zs])
    clauses.append([y(n), a(n)] + [-zi for zi in zs])
    if hard:
        for j in range(1, n + 1):
            clauses[2 * j - 1].append(v.b(j))
    for j in range(1, n + 1):
        clauses.append([a(j), z(j)])
        clauses.append([-a(j), z(j)])
    return QBF(Prefix.from_blocks(*blocks), tuple(Clause(tuple(c)) for c in clauses))


def _quparity(n: int) -> QBF:
    v = QuparityVars(n)
    x, y, a1, a2 = v.x, v.y, v.a1, v.a2
    prefix = Prefix.from_blocks(
        (EXISTS, [x(j) for j in range(1, n + 1)]),
        (FORALL, [a1, a2]),
        (EXISTS, [y(j) for j in range(2, n + 1)]),
    )

    def prev(j):
        return x(1) if j == 2 else y(j - 1)

    groups = []
    for j in range(2, n + 1):
        p = prev(j)
        groups.append([
            [-p, -x(j), -y(j)],
            [-p, x(j), y(j)],
            [p, -x(j), y(j)],
            [p, x(j), -y(j)],
        ])
    clauses = [c + [a1, a2] for g in groups for c in g]
    clauses.append([a1, a2, y(n)])
    clauses.append([-a1, -a2, -y(n)])
    clauses += [c + [-a1, -a2] for g in groups for c in g]
    return QBF(prefix, tuple(Clause(tuple(c)) for c in clauses))


def gen_family(f, n: int) -> QBF:
    f = FamilyId.parse(f)
    _check_n(f, n)
    if f is FamilyId.QUPARITY:
        return _quparity(n)
    return _kbkf(n, f is FamilyId.KBKF_HARD)


def family_symmetries(f, n: int) -> List[Symmetry]:
    f = FamilyId.parse(f)
    _check_n(f, n)
    if f is FamilyId.KBKF_HARD:
        return []
    if f is FamilyId.KBKF:
        v = KBKFVars(n)
        return [Symmetry("sigma%d" % i, ((v.x(i), v.y(i)), (v.y(i), v.x(i)), (v.a(i), -v.a(i))))
                for i in range(1, n + 1)]
    v = QuparityVars(n)
    syms = [Symmetry("sigma1", ((1, 2), (2, 1)))]
    for i in range(2, n + 1):
        flips = [i, v.a1, v.a2] + [v.y(k) for k in range(i, n + 1)]
        syms.append(Symmetry("sigma%d" % i, tuple((w, -w) for w in flips)))
    return syms
