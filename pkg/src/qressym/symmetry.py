"""Admissible literal maps, symmetry checks, and clausal symmetry breakers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .core import QBF, Clause, Prefix


class NonClausalBreakerError(ValueError):
    """Raised when a breaker implication keeps a nonempty antecedent."""


class SymmetryFileError(ValueError):
    pass


@dataclass(frozen=True)
class Symmetry:
    """Literal map given by the images of positive variables.

    Unlisted variables are fixed, and ``s(-v) == -s(v)`` holds by
    construction. Identity entries are dropped.
    """

    name: str
    image: Tuple[Tuple[int, int], ...] = ()
    _map: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        items = self.image.items() if isinstance(self.image, Mapping) else self.image
        m: Dict[int, int] = {}
        for v, l in items:
            v, l = int(v), int(l)
            if v <= 0 or l == 0:
                raise ValueError("bad symmetry entry %d -> %d" % (v, l))
            if v in m and m[v] != l:
                raise ValueError("variable %d mapped twice" % v)
            if l != v:
                m[v] = l
        targets = [abs(l) for l in m.values()]
        if len(set(targets)) != len(targets) or set(targets) != set(m):
            raise ValueError("symmetry %r is not a bijection on literals" % self.name)
        if not self.name or any(ch.isspace() for ch in self.name):
            raise ValueError("symmetry name must be nonempty without whitespace")
        object.__setattr__(self, "image", tuple(sorted(m.items())))
        object.__setattr__(self, "_map", m)

    def __call__(self, lit: int) -> int:
        if lit > 0:
            return self._map.get(lit, lit)
        return -self._map.get(-lit, -lit)

    def moved(self) -> List[int]:
        return [v for v, _ in self.image]

    def is_identity(self) -> bool:
        return not self.image

    def is_bijective(self) -> bool:
        targets = [abs(l) for l in self._map.values()]
        return len(set(targets)) == len(targets) and set(targets) == set(self._map)

    def inverse(self, name: Optional[str] = None) -> "Symmetry":
        inv = {}
        for v, l in self.image:
            inv[abs(l)] = v if l > 0 else -v
        return Symmetry(name or self.name + "^-1", tuple(inv.items()))

    def then(self, other: "Symmetry", name: Optional[str] = None) -> "Symmetry":
        """The map ``lit -> other(self(lit))``."""
        vs = set(self._map) | set(other._map)
        return Symmetry(name or "%s.%s" % (other.name, self.name),
                        tuple((v, other(self(v))) for v in sorted(vs)))


def identity(name: str = "id") -> Symmetry:
    return Symmetry(name, ())


def is_admissible(s: Symmetry, p: Prefix) -> bool:
    for v, l in s.image:
        if v not in p or abs(l) not in p:
            raise ValueError("symmetry %s mentions variable not in prefix" % s.name)
    if not s.is_bijective():
        return False
    # blocks are maximal, so equal block index means one quantifier run
    return all(p.block_of(v) == p.block_of(l) for v, l in s.image)


def apply_to_clause(s: Symmetry, c: Clause) -> Clause:
    return Clause(tuple(s(l) for l in c))


def is_symmetry(s: Symmetry, q: QBF) -> bool:
    try:
        if not is_admissible(s, q.prefix):
            return False
    except ValueError:
        return False
    moved = set(s.moved())
    images = Counter()
    for c in q.matrix:
        if moved.isdisjoint(abs(l) for l in c):
            images[c] += 1
        else:
            images[apply_to_clause(s, c)] += 1
    return images == Counter(q.matrix)


def breaker_clauses(q: QBF, syms: Sequence[Symmetry], check: bool = True) -> List[Clause]:
    """Clausal lex-leader breaker over the existential variables of ``q``.

    For each existential ``x`` (prefix order) and each symmetry moving it, the
    implication ``(AND_{w <_P x} w <-> s(w)) -> (x -> s(x))`` is simplified:
    fixed conjuncts vanish, a conjunct ``w <-> -w`` kills the implication, and
    a conjunct that already entails the consequent makes it redundant. What
    remains must have an empty antecedent and becomes the binary clause
    ``(-x | s(x))``.

    ``check=False`` skips verifying that each map is a symmetry of ``q``.
    """
    p = q.prefix
    if check:
        for s in syms:
            if not is_symmetry(s, q):
                raise ValueError("%s is not a symmetry of the formula" % s.name)
    found = []
    for k, s in enumerate(syms):
        moved = sorted(s.moved(), key=p.position)
        # scan in prefix order; fixed variables drop out of the antecedent
        conjuncts = set()
        for x in moved:
            sx = s(x)
            if p.is_existential(x):
                if not any(c in conjuncts for c in ((x, sx), (sx, x), (-x, -sx), (-sx, -x))):
                    if conjuncts:
                        raise NonClausalBreakerError(
                            "non-clausal breaker for variable %d under %s" % (x, s.name))
                    found.append((p.position(x), k, Clause((-x, sx))))
            if sx == -x:
                # antecedent now unsatisfiable for every later variable
                break
            conjuncts.add((x, sx))
    found.sort(key=lambda t: t[:2])
    out: List[Clause] = []
    seen = set()
    for _, _, c in found:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def parse_symmetries(text: str) -> List[Symmetry]:
    syms = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] != "s" or len(toks) < 3:
            raise SymmetryFileError("line %d: expected 's <name> ... 0'" % lineno)
        name = toks[1]
        try:
            nums = [int(t) for t in toks[2:]]
        except ValueError:
            raise SymmetryFileError("line %d: expected integers" % lineno) from None
        if nums[-1] != 0 or len(nums) % 2 != 1:
            raise SymmetryFileError("line %d: expected pairs terminated by 0" % lineno)
        if name in names:
            raise SymmetryFileError("line %d: duplicate symmetry name %s" % (lineno, name))
        pairs = list(zip(nums[:-1:2], nums[1:-1:2]))
        try:
            syms.append(Symmetry(name, tuple(pairs)))
        except ValueError as e:
            raise SymmetryFileError("line %d: %s" % (lineno, e)) from None
        names.add(name)
    return syms


def serialize_symmetries(syms: Iterable[Symmetry]) -> str:
    lines = []
    for s in syms:
        parts = ["s", s.name]
        for v, l in s.image:
            parts += [str(v), str(l)]
        parts.append("0")
        lines.append(" ".join(parts))
    return "".join(line + "\n" for line in lines)
