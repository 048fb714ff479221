"""Core types for strict-preference domains: alternatives, orderings,
profiles, profile moves, and dense indexing of the full profile domain.

Alternatives are integers ``0..m-1`` with single-character display labels.
An ordering is a tuple of alternatives from top (rank 1) to bottom (rank m);
a profile is one ordering per individual.  Choice sets are m-bit masks over
alternatives, wrapped in :class:`ChoiceSet` for display.

The full domain over m alternatives and n individuals has ``(m!)**n``
profiles.  :class:`DomainIndex` fixes the canonical enumeration: orderings
are sorted lexicographically by their rank sequence, and a profile's index
is the base-m! number whose digits are the per-individual ordering indices,
individual 1 most significant.  Every sweep, witness, and search result is
reported in this order, which makes output reproducible across runs and
worker counts.

All operations here are pure functions on immutable values.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

import numpy as np

MAX_ALTERNATIVES = 8
DEFAULT_MAX_INDIVIDUALS = 6

_LABEL_POOL = "abcdefgh"

#: An ordering is a tuple of alternative indices, rank 1 first.
Ordering = tuple[int, ...]


def default_labels(m: int) -> str:
    """Default display labels: 'a' for alternative 0, 'b' for 1, and so on."""
    if not 2 <= m <= MAX_ALTERNATIVES:
        raise ValueError(f"supported sizes are 2..{MAX_ALTERNATIVES} alternatives, got {m}")
    return _LABEL_POOL[:m]


class Alternative(NamedTuple):
    index: int
    label: str


@dataclass(frozen=True)
class Universe:
    """The alternative set; position in ``labels`` is the alternative index."""

    labels: str

    def __post_init__(self) -> None:
        if not 2 <= len(self.labels) <= MAX_ALTERNATIVES:
            raise ValueError(
                f"supported sizes are 2..{MAX_ALTERNATIVES} alternatives, got {len(self.labels)}"
            )
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"alternative labels must be distinct: {self.labels!r}")

    @classmethod
    def of_size(cls, m: int) -> "Universe":
        return cls(default_labels(m))

    @property
    def m(self) -> int:
        return len(self.labels)

    @property
    def alternatives(self) -> tuple[Alternative, ...]:
        return tuple(Alternative(i, c) for i, c in enumerate(self.labels))

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def index(self, label: str) -> int:
        pos = self.labels.find(label)
        if pos < 0:
            raise ValueError(f"unknown alternative {label!r} (universe {self.labels!r})")
        return pos

    def label(self, x: int) -> str:
        return self.labels[x]

    def mask_members(self, mask: int) -> tuple[int, ...]:
        return tuple(x for x in range(self.m) if mask >> x & 1)

    def mask_labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[x] for x in self.mask_members(mask))

    def mask_text(self, mask: int) -> str:
        return "".join(self.mask_labels(mask))

    def mask_from_labels(self, text: str) -> int:
        mask = 0
        for c in text:
            mask |= 1 << self.index(c)
        return mask


@dataclass(frozen=True)
class ChoiceSet:
    """A non-empty subset of a universe's alternatives, stored as a bit mask."""

    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if not 0 < self.mask <= self.universe.full_mask:
            raise ValueError(f"choice sets are non-empty subsets of the universe, got mask {self.mask}")

    @classmethod
    def from_labels(cls, universe: Universe, text: str) -> "ChoiceSet":
        return cls(universe, universe.mask_from_labels(text))

    @property
    def members(self) -> tuple[int, ...]:
        return self.universe.mask_members(self.mask)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.universe.mask_labels(self.mask)

    def text(self) -> str:
        return self.universe.mask_text(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Profile:
    """One strict ordering per individual, all over the same universe."""

    universe: Universe
    orderings: tuple[Ordering, ...]

    def __post_init__(self) -> None:
        if len(self.orderings) < 2:
            raise ValueError("profiles need at least 2 individuals")
        expected = tuple(range(self.universe.m))
        for i, r in enumerate(self.orderings):
            if tuple(sorted(r)) != expected:
                raise ValueError(f"ordering {i + 1} is not a permutation of the universe: {r}")

    @property
    def m(self) -> int:
        return self.universe.m

    @property
    def n(self) -> int:
        return len(self.orderings)

    def top(self, i: int) -> int:
        return self.orderings[i][0]

    def __str__(self) -> str:
        lbl = self.universe.labels
        return "|".join("".join(lbl[x] for x in r) for r in self.orderings)


class ParseError(ValueError):
    """Profile text did not parse; ``position`` is the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_profile(text: str, universe: Universe | None = None) -> Profile:
    """Parse ``"xyz|yzx|zxy"`` into a Profile.

    Individuals are separated by ``|``; each ordering is written top to
    bottom as concatenated single-character labels.  Whitespace around ``|``
    is ignored.  When no universe is given, one is inferred with alternative
    indices assigned by order of first appearance in the text.
    """
    if universe is None:
        seen: dict[str, int] = {}
        for c in text:
            if c not in "| \t" and c not in seen:
                seen[c] = len(seen)
        try:
            universe = Universe("".join(seen))
        except ValueError as exc:
            raise ParseError(str(exc), 0) from None

    orderings: list[Ordering] = []
    current: list[int] = []
    used: set[int] = set()

    def close(end: int) -> None:
        if len(current) != universe.m:
            raise ParseError(f"ordering has {len(current)} of {universe.m} alternatives", end)
        orderings.append(tuple(current))
        current.clear()
        used.clear()

    for pos, c in enumerate(text):
        if c in " \t":
            continue
        if c == "|":
            close(pos)
            continue
        idx = universe.labels.find(c)
        if idx < 0:
            raise ParseError(f"unknown alternative {c!r} (universe {universe.labels!r})", pos)
        if idx in used:
            raise ParseError(f"alternative {c!r} repeated within one ordering", pos)
        used.add(idx)
        current.append(idx)
    close(len(text))

    if len(orderings) < 2:
        raise ParseError("profiles need at least 2 individuals", len(text))
    return Profile(universe, tuple(orderings))


# ---------------------------------------------------------------------------
# Rank queries and dominance


def rank_of(r: Ordering, x: int) -> int:
    """1-based rank of alternative ``x`` in ordering ``r`` (rank 1 = top)."""
    return r.index(x) + 1


def pareto_dominates(u: Profile, x: int, y: int) -> bool:
    """True iff every individual ranks ``x`` above ``y`` at ``u``."""
    if x == y:
        raise ValueError("dominance is defined for distinct alternatives")
    return all(r.index(x) < r.index(y) for r in u.orderings)


# ---------------------------------------------------------------------------
# One-profile moves


class TranspositionSite(NamedTuple):
    """An adjacent pair inverted between two individuals.

    ``x`` is immediately above ``y`` for individual ``i`` and ``y`` is
    immediately above ``x`` for individual ``j`` (0-based individuals).
    """

    x: int
    y: int
    i: int
    j: int


def _swap_adjacent(r: Ordering, p: int) -> Ordering:
    return r[:p] + (r[p + 1], r[p]) + r[p + 2 :]


def transposition_sites(u: Profile) -> tuple[TranspositionSite, ...]:
    """All transposition sites of ``u``, one per unordered individual pair per
    unordered alternative pair.

    The orientation is canonical: ``x`` is the alternative ranked higher by
    the first-listed individual.  Sites are emitted in a deterministic order:
    by individual pair ``(i, j)`` with ``i < j``, then by the position of
    ``x`` in ``u(i)``.
    """
    sites: list[TranspositionSite] = []
    positions = []
    for r in u.orderings:
        pos = [0] * u.m
        for p, a in enumerate(r):
            pos[a] = p
        positions.append(pos)
    for i in range(u.n - 1):
        ri = u.orderings[i]
        for j in range(i + 1, u.n):
            pj = positions[j]
            for p in range(u.m - 1):
                x, y = ri[p], ri[p + 1]
                if pj[x] == pj[y] + 1:  # y immediately above x for j
                    sites.append(TranspositionSite(x, y, i, j))
    return tuple(sites)


def apply_transposition(u: Profile, s: TranspositionSite) -> Profile:
    """Swap the adjacent pair ``(x, y)`` in both individuals of the site."""
    x, y, i, j = s
    if i == j or not (0 <= i < u.n and 0 <= j < u.n):
        raise ValueError(f"invalid site individuals ({i}, {j})")
    ri, rj = u.orderings[i], u.orderings[j]
    p, q = ri.index(x), rj.index(y)
    if p + 1 >= u.m or ri[p + 1] != y:
        raise ValueError(f"site invalid: {u.universe.label(x)} is not immediately above "
                         f"{u.universe.label(y)} for individual {i + 1}")
    if q + 1 >= u.m or rj[q + 1] != x:
        raise ValueError(f"site invalid: {u.universe.label(y)} is not immediately above "
                         f"{u.universe.label(x)} for individual {j + 1}")
    new = list(u.orderings)
    new[i] = _swap_adjacent(ri, p)
    new[j] = _swap_adjacent(rj, q)
    return Profile(u.universe, tuple(new))


def raise_one(u: Profile, i: int, x: int) -> Profile:
    """Raise ``x`` one rank in individual ``i``'s ordering."""
    r = u.orderings[i]
    p = r.index(x)
    if p == 0:
        raise ValueError(f"{u.universe.label(x)} is already at the top for individual {i + 1}")
    new = list(u.orderings)
    new[i] = _swap_adjacent(r, p - 1)
    return Profile(u.universe, tuple(new))


def lower_one(u: Profile, i: int, x: int) -> Profile:
    """Lower ``x`` one rank in individual ``i``'s ordering."""
    r = u.orderings[i]
    p = r.index(x)
    if p == u.m - 1:
        raise ValueError(f"{u.universe.label(x)} is already at the bottom for individual {i + 1}")
    new = list(u.orderings)
    new[i] = _swap_adjacent(r, p)
    return Profile(u.universe, tuple(new))


def _reinsert_below(r: Ordering, x: int, y: int) -> Ordering:
    rest = [a for a in r if a != x]
    rest.insert(rest.index(y) + 1, x)
    return tuple(rest)


def raise_to_just_below(u: Profile, i: int, x: int, y: int) -> Profile:
    """Move ``x`` up to sit immediately below ``y`` in ``i``'s ordering.

    Requires ``x`` below ``y``; the relative order of all other alternatives
    is unchanged.  A no-op when ``x`` is already immediately below ``y``.
    """
    r = u.orderings[i]
    if x == y:
        raise ValueError("cannot move an alternative relative to itself")
    if r.index(x) < r.index(y):
        raise ValueError(f"{u.universe.label(x)} is not below {u.universe.label(y)} "
                         f"for individual {i + 1}")
    new = list(u.orderings)
    new[i] = _reinsert_below(r, x, y)
    return Profile(u.universe, tuple(new))


def lower_to_just_below(u: Profile, i: int, x: int, y: int) -> Profile:
    """Move ``x`` down to sit immediately below ``y`` in ``i``'s ordering."""
    r = u.orderings[i]
    if x == y:
        raise ValueError("cannot move an alternative relative to itself")
    if r.index(x) > r.index(y):
        raise ValueError(f"{u.universe.label(x)} is not above {u.universe.label(y)} "
                         f"for individual {i + 1}")
    new = list(u.orderings)
    new[i] = _reinsert_below(r, x, y)
    return Profile(u.universe, tuple(new))


# ---------------------------------------------------------------------------
# Symmetries


def _check_permutation(perm: Sequence[int], size: int, what: str) -> None:
    if tuple(sorted(perm)) != tuple(range(size)):
        raise ValueError(f"{what} permutation must rearrange 0..{size - 1}, got {tuple(perm)}")


def apply_alternative_permutation(u: Profile, theta: Sequence[int]) -> Profile:
    """Relabel alternatives: alternative ``a`` becomes ``theta[a]`` everywhere."""
    _check_permutation(theta, u.m, "alternative")
    return Profile(u.universe, tuple(tuple(theta[a] for a in r) for r in u.orderings))


def apply_individual_permutation(u: Profile, rho: Sequence[int]) -> Profile:
    """Reorder individuals: position ``i`` receives ``u(rho[i])``."""
    _check_permutation(rho, u.n, "individual")
    return Profile(u.universe, tuple(u.orderings[rho[i]] for i in range(u.n)))


def permute_mask(mask: int, theta: Sequence[int]) -> int:
    """Apply an alternative relabeling to a choice-set mask."""
    out = 0
    for a, b in enumerate(theta):
        if mask >> a & 1:
            out |= 1 << b
    return out


# ---------------------------------------------------------------------------
# Domain enumeration


def enumerate_orderings(m: int) -> tuple[Ordering, ...]:
    """All m! orderings of ``m`` alternatives, lexicographic by rank sequence."""
    if not 2 <= m <= MAX_ALTERNATIVES:
        raise ValueError(f"supported sizes are 2..{MAX_ALTERNATIVES} alternatives, got {m}")
    return tuple(itertools.permutations(range(m)))


_CHUNK = 1 << 18


def index_chunks(total: int, size: int = _CHUNK) -> Iterator[tuple[int, int]]:
    """Split ``range(total)`` into contiguous chunks for sweeping."""
    for lo in range(0, total, size):
        yield lo, min(lo + size, total)


class DomainIndex:
    """Canonical enumeration of every profile over ``m`` alternatives and
    ``n`` individuals, plus the precomputed lookup tables used by sweeps.

    The heavy tables are built lazily and cached; instances are meant to be
    shared.  All tables are read-only after construction, so a DomainIndex
    can be used concurrently from any number of workers.
    """

    def __init__(self, m: int, n: int, labels: str | None = None, *,
                 max_individuals: int = DEFAULT_MAX_INDIVIDUALS):
        if not 2 <= m <= MAX_ALTERNATIVES:
            raise ValueError(f"supported sizes are 2..{MAX_ALTERNATIVES} alternatives, got {m}")
        if not 2 <= n <= max_individuals:
            raise ValueError(
                f"supported sizes are 2..{max_individuals} individuals, got {n} "
                "(raise max_individuals to override)"
            )
        self.universe = Universe(labels) if labels is not None else Universe.of_size(m)
        if self.universe.m != m:
            raise ValueError(f"labels {self.universe.labels!r} do not match m={m}")
        self.m = m
        self.n = n
        self.order_count = math.factorial(m)
        self.total = self.order_count ** n
        #: place value of individual i's digit (individual 1 most significant)
        self.places = tuple(self.order_count ** (n - 1 - i) for i in range(n))

    def __repr__(self) -> str:  # pragma: no cover
        return f"DomainIndex(m={self.m}, n={self.n}, labels={self.universe.labels!r})"

    # -- ordering tables ---------------------------------------------------

    @cached_property
    def orderings(self) -> tuple[Ordering, ...]:
        return enumerate_orderings(self.m)

    @cached_property
    def _ordering_index(self) -> dict[Ordering, int]:
        return {r: o for o, r in enumerate(self.orderings)}

    @cached_property
    def ordering_table(self) -> np.ndarray:
        """(m!, m) int8: alternative at each rank of each ordering."""
        return np.array(self.orderings, dtype=np.int8)

    @cached_property
    def rank_table(self) -> np.ndarray:
        """(m!, m) int8: 0-based rank position of each alternative."""
        tbl = self.ordering_table
        out = np.empty_like(tbl)
        rows = np.arange(tbl.shape[0])[:, None]
        out[rows, tbl] = np.arange(self.m, dtype=np.int8)[None, :]
        return out

    @cached_property
    def above_table(self) -> np.ndarray:
        """(m!, m) uint32: mask of alternatives ranked above each alternative."""
        tbl = self.ordering_table
        count = tbl.shape[0]
        out = np.zeros((count, self.m), dtype=np.uint32)
        rows = np.arange(count)
        cum = np.zeros(count, dtype=np.uint32)
        for p in range(self.m):
            col = tbl[:, p].astype(np.uint32)
            out[rows, col] = cum
            cum = cum | (np.uint32(1) << col)
        return out

    @cached_property
    def swap_table(self) -> np.ndarray:
        """(m!, m-1) int32: ordering index after swapping ranks p and p+1."""
        index = self._ordering_index
        out = np.empty((self.order_count, self.m - 1), dtype=np.int32)
        for o, r in enumerate(self.orderings):
            for p in range(self.m - 1):
                out[o, p] = index[_swap_adjacent(r, p)]
        return out

    @cached_property
    def top_table(self) -> np.ndarray:
        """(m!,) int8: top-ranked alternative of each ordering."""
        return self.ordering_table[:, 0].copy()

    @cached_property
    def adjacent_relabel_table(self) -> np.ndarray:
        """(m-1, m!) int32: ordering index after relabeling a <-> a+1."""
        index = self._ordering_index
        out = np.empty((self.m - 1, self.order_count), dtype=np.int32)
        for g in range(self.m - 1):
            theta = list(range(self.m))
            theta[g], theta[g + 1] = theta[g + 1], theta[g]
            for o, r in enumerate(self.orderings):
                out[g, o] = index[tuple(theta[a] for a in r)]
        return out

    @cached_property
    def adjacent_relabel_masks(self) -> np.ndarray:
        """(m-1, 2**m) uint8: choice-set mask after relabeling a <-> a+1."""
        size = 1 << self.m
        out = np.empty((self.m - 1, size), dtype=np.uint8)
        for g in range(self.m - 1):
            theta = list(range(self.m))
            theta[g], theta[g + 1] = theta[g + 1], theta[g]
            for mask in range(size):
                out[g, mask] = permute_mask(mask, theta)
        return out

    def relabel_action(self, theta: Sequence[int]) -> np.ndarray:
        """(m!,) int32: ordering index under an arbitrary alternative relabeling."""
        _check_permutation(theta, self.m, "alternative")
        index = self._ordering_index
        return np.fromiter(
            (index[tuple(theta[a] for a in r)] for r in self.orderings),
            count=self.order_count, dtype=np.int32,
        )

    # -- profile indexing ---------------------------------------------------

    def ordering_index(self, r: Ordering) -> int:
        try:
            return self._ordering_index[tuple(r)]
        except KeyError:
            raise ValueError(f"not an ordering of this universe: {r}") from None

    def index_orderings(self, orderings: Sequence[Ordering]) -> int:
        if len(orderings) != self.n:
            raise ValueError(f"expected {self.n} orderings, got {len(orderings)}")
        k = 0
        for r in orderings:
            k = k * self.order_count + self.ordering_index(r)
        return k

    def index(self, u: Profile) -> int:
        if u.universe != self.universe:
            raise ValueError(f"profile universe {u.universe.labels!r} does not match "
                             f"domain universe {self.universe.labels!r}")
        return self.index_orderings(u.orderings)

    def profile(self, k: int) -> Profile:
        if not 0 <= k < self.total:
            raise ValueError(f"profile index {k} out of range [0, {self.total})")
        digits = []
        for _ in range(self.n):
            k, o = divmod(k, self.order_count)
            digits.append(o)
        return Profile(self.universe, tuple(self.orderings[o] for o in reversed(digits)))

    def profile_text(self, k: int) -> str:
        return str(self.profile(k))

    def parse(self, text: str) -> Profile:
        u = parse_profile(text, self.universe)
        if u.n != self.n:
            raise ValueError(f"expected {self.n} individuals, got {u.n}")
        return u

    def digit(self, i: int, ks: np.ndarray) -> np.ndarray:
        """Ordering indices of individual ``i`` for an array of profile indices."""
        return (ks // self.places[i]) % self.order_count

    # -- whole-domain tables -------------------------------------------------

    @cached_property
    def pareto_table(self) -> np.ndarray:
        """(total,) uint8: mask of undominated alternatives at every profile."""
        out = np.empty(self.total, dtype=np.uint8)
        above = self.above_table
        full = np.uint8(self.universe.full_mask)
        for lo, hi in index_chunks(self.total):
            ks = np.arange(lo, hi)
            digits = [self.digit(i, ks) for i in range(self.n)]
            dominated = np.zeros(hi - lo, dtype=np.uint8)
            for x in range(self.m):
                common = above[digits[0], x]
                for i in range(1, self.n):
                    common = common & above[digits[i], x]
                dominated |= (common != 0).astype(np.uint8) << np.uint8(x)
            out[lo:hi] = full ^ dominated
        return out

    @cached_property
    def tops_table(self) -> np.ndarray:
        """(total,) uint8: mask of top-ranked alternatives at every profile."""
        out = np.empty(self.total, dtype=np.uint8)
        top = self.top_table
        for lo, hi in index_chunks(self.total):
            ks = np.arange(lo, hi)
            acc = np.zeros(hi - lo, dtype=np.uint8)
            for i in range(self.n):
                acc |= np.uint8(1) << top[self.digit(i, ks)].astype(np.uint8)
            out[lo:hi] = acc
        return out


def index_profile(d: DomainIndex, k: int) -> Profile:
    """Profile at position ``k`` of the canonical enumeration."""
    return d.profile(k)


def profile_index(d: DomainIndex, u: Profile) -> int:
    """Position of ``u`` in the canonical enumeration (inverse of index_profile)."""
    return d.index(u)
