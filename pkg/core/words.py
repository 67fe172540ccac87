# core/words.py

"""
Bracketed words of the free operated semigroup and one-hole contexts.

A word is a flat, nonempty tuple of primes. A prime is either a Generator
or a Bracket around another word; there is no product-of-products nesting,
so structural equality is word equality. A StarWord is the same thing over
Z ∪ {⋆} with exactly one ⋆ in the whole tree.

Rendering uses `*` between primes and `L^k(...)` for k-fold nesting:
    L(L(x)*y)*z      L^2(x*y)      x*L(⋆)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

from core.errors import WordError

STAR_SYMBOL = "⋆"


@dataclass(frozen=True)
class Generator:
    name: str
    rank: int

    def __post_init__(self) -> None:
        if not self.name:
            raise WordError("Generator name must be a nonempty token")
        if self.rank < 0:
            raise WordError(f"Generator rank must be nonnegative, got {self.rank}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Star:
    """The hole of a ⋆-word."""

    def __str__(self) -> str:
        return STAR_SYMBOL


STAR = Star()


@dataclass(frozen=True)
class Bracket:
    inner: Union["BracketedWord", "StarWord"]

    def __str__(self) -> str:
        return _render_prime(self)


Prime = Union[Generator, Bracket]


class WordMeasure(NamedTuple):
    breadth: int
    depth: int
    z_degree: int
    l_degree: int
    l_breadth: int


# ----------------------------------------------------------------------
# Words
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class BracketedWord:
    primes: Tuple[Prime, ...]

    def __post_init__(self) -> None:
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise WordError("Empty word: the unit is not available in the non-unitary setting")
        for p in primes:
            if isinstance(p, Generator):
                continue
            if isinstance(p, Bracket) and isinstance(p.inner, BracketedWord):
                continue
            raise WordError(f"Invalid prime in a bracketed word: {p!r}")

    # Hash is cached; words are used as dict keys everywhere.
    @cached_property
    def _hash(self) -> int:
        return hash(("BracketedWord", self.primes))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, BracketedWord):
            return NotImplemented
        return self._hash == other._hash and self.primes == other.primes

    def __mul__(self, other: "BracketedWord") -> "BracketedWord":
        if isinstance(other, BracketedWord):
            return concat(self, other)
        return NotImplemented

    def __str__(self) -> str:
        return _render_primes(self.primes)

    def __repr__(self) -> str:
        return f"BracketedWord({self})"

    # ---------- measures ----------

    @cached_property
    def breadth(self) -> int:
        return len(self.primes)

    @cached_property
    def depth(self) -> int:
        return max((p.inner.depth + 1 for p in self.primes if isinstance(p, Bracket)), default=0)

    @cached_property
    def z_degree(self) -> int:
        return sum(1 if isinstance(p, Generator) else p.inner.z_degree for p in self.primes)

    @cached_property
    def l_degree(self) -> int:
        return sum(p.inner.l_degree + 1 for p in self.primes if isinstance(p, Bracket))

    @cached_property
    def l_breadth(self) -> int:
        return sum(1 for p in self.primes if isinstance(p, Bracket))

    @property
    def is_bracket_free(self) -> bool:
        return self.l_breadth == 0

    @cached_property
    def letters(self) -> Tuple[Generator, ...]:
        """Generators in reading order, brackets ignored."""
        out: List[Generator] = []
        for p in self.primes:
            if isinstance(p, Generator):
                out.append(p)
            else:
                out.extend(p.inner.letters)
        return tuple(out)


@dataclass(frozen=True, eq=False)
class StarWord:
    primes: Tuple[Union[Prime, Star], ...]

    def __post_init__(self) -> None:
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise WordError("Empty ⋆-word")
        stars = 0
        for p in primes:
            if isinstance(p, Star):
                stars += 1
            elif isinstance(p, Bracket):
                if isinstance(p.inner, StarWord):
                    stars += 1
                elif not isinstance(p.inner, BracketedWord):
                    raise WordError(f"Invalid bracket argument in a ⋆-word: {p.inner!r}")
            elif not isinstance(p, Generator):
                raise WordError(f"Invalid prime in a ⋆-word: {p!r}")
        if stars != 1:
            raise WordError(f"A ⋆-word needs exactly one ⋆, found {stars}")

    @cached_property
    def _hash(self) -> int:
        return hash(("StarWord", self.primes))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, StarWord):
            return NotImplemented
        return self._hash == other._hash and self.primes == other.primes

    def __str__(self) -> str:
        return _render_primes(self.primes)

    def __repr__(self) -> str:
        return f"StarWord({self})"

    @property
    def is_identity(self) -> bool:
        return len(self.primes) == 1 and isinstance(self.primes[0], Star)

    def __call__(self, u: BracketedWord) -> BracketedWord:
        return substitute(self, u)


IDENTITY_CONTEXT = StarWord((STAR,))


# ----------------------------------------------------------------------
# Generator declarations
# ----------------------------------------------------------------------
class Alphabet:
    """
    Ordered generator declarations for one session.

    rank = declaration index; names are unique.
    """

    def __init__(self, names: Iterable[str] = ()):
        self._by_name: Dict[str, Generator] = {}
        for name in names:
            self.declare(name)

    @classmethod
    def pool(cls, size: int) -> "Alphabet":
        """x, y, z for small pools, x1..xn beyond that."""
        if size <= 3:
            return cls(["x", "y", "z"][:size])
        return cls([f"x{i}" for i in range(1, size + 1)])

    def declare(self, name: str) -> Generator:
        if name in self._by_name:
            raise WordError(f"Duplicate generator declaration: {name}")
        gen = Generator(name=name, rank=len(self._by_name))
        self._by_name[name] = gen
        return gen

    def ensure(self, name: str) -> Generator:
        return self._by_name.get(name) or self.declare(name)

    def __getitem__(self, name: str) -> Generator:
        try:
            return self._by_name[name]
        except KeyError:
            raise WordError(f"Unknown generator: {name}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __iter__(self) -> Iterator[Generator]:
        return iter(self._by_name.values())

    def __len__(self) -> int:
        return len(self._by_name)

    @property
    def names(self) -> List[str]:
        return list(self._by_name)

    def word(self, *names: str) -> BracketedWord:
        return BracketedWord(tuple(self[n] for n in names))


# ----------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------
def word(*items: Union[Generator, Bracket, BracketedWord]) -> BracketedWord:
    """Splice generators, brackets and words into one flat word."""
    primes: List[Prime] = []
    for item in items:
        if isinstance(item, BracketedWord):
            primes.extend(item.primes)
        else:
            primes.append(item)
    return BracketedWord(tuple(primes))


def bracket(u: BracketedWord, times: int = 1) -> BracketedWord:
    if not isinstance(u, BracketedWord):
        raise WordError("bracket() takes a nonempty bracketed word")
    for _ in range(times):
        u = BracketedWord((Bracket(u),))
    return u


def concat(u: BracketedWord, v: BracketedWord) -> BracketedWord:
    return BracketedWord(u.primes + v.primes)


def measure(u: BracketedWord) -> WordMeasure:
    return WordMeasure(
        breadth=u.breadth,
        depth=u.depth,
        z_degree=u.z_degree,
        l_degree=u.l_degree,
        l_breadth=u.l_breadth,
    )


def structural_key(u: BracketedWord) -> Tuple[int, int, str]:
    """Order-free canonical sort key used for enumeration and reports."""
    return (u.z_degree, u.l_degree, str(u))


# ----------------------------------------------------------------------
# L-block decomposition  u = u0 L(ů1) u1 ... L(ůr) ur
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class LBlockDecomposition:
    outer_factors: Tuple[Tuple[Generator, ...], ...]
    bracket_args: Tuple[BracketedWord, ...]

    @property
    def r(self) -> int:
        return len(self.bracket_args)

    def reassemble(self) -> BracketedWord:
        primes: List[Prime] = list(self.outer_factors[0])
        for arg, factor in zip(self.bracket_args, self.outer_factors[1:]):
            primes.append(Bracket(arg))
            primes.extend(factor)
        return BracketedWord(tuple(primes))


def l_block_decompose(u: BracketedWord) -> LBlockDecomposition:
    factors: List[Tuple[Generator, ...]] = []
    args: List[BracketedWord] = []
    current: List[Generator] = []
    for p in u.primes:
        if isinstance(p, Generator):
            current.append(p)
        else:
            factors.append(tuple(current))
            args.append(p.inner)
            current = []
    factors.append(tuple(current))
    return LBlockDecomposition(outer_factors=tuple(factors), bracket_args=tuple(args))


# ----------------------------------------------------------------------
# Substitution and occurrences
# ----------------------------------------------------------------------
def substitute(q: StarWord, u: BracketedWord) -> BracketedWord:
    """q|_u: splice the primes of u where ⋆ sits."""
    if not isinstance(q, StarWord):
        raise WordError("substitute() needs a ⋆-word context")
    return BracketedWord(_substitute_primes(q.primes, u))


def _substitute_primes(primes: Sequence[Union[Prime, Star]], u: BracketedWord) -> Tuple[Prime, ...]:
    out: List[Prime] = []
    for p in primes:
        if isinstance(p, Star):
            out.extend(u.primes)
        elif isinstance(p, Bracket) and isinstance(p.inner, StarWord):
            out.append(Bracket(BracketedWord(_substitute_primes(p.inner.primes, u))))
        else:
            out.append(p)
    return tuple(out)


class Occurrence(NamedTuple):
    """
    A contiguous prime run primes[start:end] at the nesting level reached
    by following `path` (indices of bracket primes from the top).
    """
    path: Tuple[int, ...]
    start: int
    end: int

    def level(self, w: BracketedWord) -> Tuple[Prime, ...]:
        primes = w.primes
        for idx in self.path:
            primes = primes[idx].inner.primes
        return primes

    def subword(self, w: BracketedWord) -> BracketedWord:
        return BracketedWord(self.level(w)[self.start:self.end])

    def context(self, w: BracketedWord) -> StarWord:
        return StarWord(_context_primes(w.primes, self.path, self.start, self.end))


def _context_primes(primes, path, start, end):
    if not path:
        return primes[:start] + (STAR,) + primes[end:]
    k = path[0]
    inner = StarWord(_context_primes(primes[k].inner.primes, path[1:], start, end))
    return primes[:k] + (Bracket(inner),) + primes[k + 1:]


def iter_occurrences(w: BracketedWord) -> Iterator[Occurrence]:
    """
    Every contiguous prime run at every nesting level. Canonical order:
    the runs of a level (by start, then length) come before the runs
    inside its brackets, brackets visited left to right.
    """
    yield from _iter_level(w.primes, ())


def _iter_level(primes, path) -> Iterator[Occurrence]:
    n = len(primes)
    for i in range(n):
        for j in range(i + 1, n + 1):
            yield Occurrence(path, i, j)
    for i, p in enumerate(primes):
        if isinstance(p, Bracket):
            yield from _iter_level(p.inner.primes, path + (i,))


def iter_subwords(w: BracketedWord) -> Iterator[Tuple[StarWord, BracketedWord]]:
    for occ in iter_occurrences(w):
        yield occ.context(w), occ.subword(w)


def find_subword_contexts(w: BracketedWord, m: BracketedWord) -> List[StarWord]:
    """All q with q|_m = w, in canonical traversal order."""
    out: List[StarWord] = []
    for occ in iter_occurrences(w):
        if occ.end - occ.start != m.breadth:
            continue
        if occ.level(w)[occ.start:occ.end] == m.primes:
            out.append(occ.context(w))
    return out


def mirror(u: BracketedWord) -> BracketedWord:
    """Reverse the prime order at every nesting level."""
    return BracketedWord(
        tuple(p if isinstance(p, Generator) else Bracket(mirror(p.inner)) for p in reversed(u.primes))
    )


# ----------------------------------------------------------------------
# Rendering
# ----------------------------------------------------------------------
def _render_primes(primes) -> str:
    return "*".join(_render_prime(p) for p in primes)


def _render_prime(p) -> str:
    if isinstance(p, (Generator, Star)):
        return str(p)
    k = 1
    inner = p.inner
    while len(inner.primes) == 1 and isinstance(inner.primes[0], Bracket):
        inner = inner.primes[0].inner
        k += 1
    head = "L" if k == 1 else f"L^{k}"
    return f"{head}({_render_primes(inner.primes)})"
