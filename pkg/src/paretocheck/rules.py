"""Social choice correspondences: the Pareto rule, the comparison rules, and
the catalog of example rules, all behind one evaluation interface.

A :class:`Correspondence` maps every profile of its ``(m, n)`` domain to a
non-empty choice set.  It is either a named rule or a table: a default named
rule plus a finite map of per-profile overrides.  Named rules evaluate one
profile at a time through :func:`evaluate` and produce whole-domain value
tables (one uint8 mask per profile index) for the sweep checkers.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .core import (
    ChoiceSet,
    DomainIndex,
    Ordering,
    Profile,
    Universe,
    apply_alternative_permutation,
    apply_individual_permutation,
    index_chunks,
    parse_profile,
    permute_mask,
)

# ---------------------------------------------------------------------------
# Single-profile rule evaluation (mask level)


def _above_masks(u: Profile) -> list[list[int]]:
    """Per individual, the mask of alternatives ranked above each alternative."""
    out = []
    for r in u.orderings:
        above = [0] * u.m
        cum = 0
        for a in r:
            above[a] = cum
            cum |= 1 << a
        out.append(above)
    return out


def pareto_mask(u: Profile) -> int:
    """Mask of undominated alternatives at ``u`` (pairwise dominance scan)."""
    above = _above_masks(u)
    mask = 0
    for y in range(u.m):
        common = above[0][y]
        for i in range(1, u.n):
            common &= above[i][y]
        if common == 0:
            mask |= 1 << y
    return mask


def tops_mask(u: Profile) -> int:
    mask = 0
    for r in u.orderings:
        mask |= 1 << r[0]
    return mask


def _argmax_mask(scores: Sequence[int]) -> int:
    best = max(scores)
    mask = 0
    for x, s in enumerate(scores):
        if s == best:
            mask |= 1 << x
    return mask


def borda_mask(u: Profile) -> int:
    scores = [0] * u.m
    for r in u.orderings:
        for p, a in enumerate(r):
            scores[a] += u.m - 1 - p
    return _argmax_mask(scores)


def plurality_mask(u: Profile) -> int:
    counts = [0] * u.m
    for r in u.orderings:
        counts[r[0]] += 1
    return _argmax_mask(counts)


def copeland_mask(u: Profile) -> int:
    """Maximizers of pairwise-majority wins minus losses (ties count 0)."""
    m, n = u.m, u.n
    prefer = [[0] * m for _ in range(m)]
    for r in u.orderings:
        for p in range(m):
            for q in range(p + 1, m):
                prefer[r[p]][r[q]] += 1
    scores = [0] * m
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            if 2 * prefer[x][y] > n:
                scores[x] += 1
            elif 2 * prefer[x][y] < n:
                scores[x] -= 1
    return _argmax_mask(scores)


def _drop_one_mask(u: Profile, t: int) -> int:
    base = pareto_mask(u)
    if base == 1 << t:
        return base
    return base & ~(1 << t) if base & (1 << t) else base


# Public ChoiceSet-returning rule functions.


def pareto_set(u: Profile) -> ChoiceSet:
    """Exactly the alternatives no other alternative dominates at ``u``."""
    return ChoiceSet(u.universe, pareto_mask(u))


def pareto_set_by_elimination(u: Profile) -> ChoiceSet:
    """Independent route to the undominated set: repeatedly discard any
    alternative dominated by a still-standing alternative until none is."""
    alive = set(range(u.m))
    changed = True
    while changed:
        changed = False
        for y in sorted(alive):
            for x in sorted(alive):
                if x != y and all(r.index(x) < r.index(y) for r in u.orderings):
                    alive.discard(y)
                    changed = True
                    break
    mask = 0
    for x in alive:
        mask |= 1 << x
    return ChoiceSet(u.universe, mask)


def tops_union(u: Profile) -> ChoiceSet:
    """The alternatives that are some individual's first choice."""
    return ChoiceSet(u.universe, tops_mask(u))


def borda(u: Profile) -> ChoiceSet:
    """Maximizers of the total positional score (rank k earns m - k points)."""
    return ChoiceSet(u.universe, borda_mask(u))


def plurality(u: Profile) -> ChoiceSet:
    """Maximizers of the first-place count."""
    return ChoiceSet(u.universe, plurality_mask(u))


def copeland(u: Profile) -> ChoiceSet:
    return ChoiceSet(u.universe, copeland_mask(u))


def dictatorship(u: Profile, i: int) -> ChoiceSet:
    """The top choice of individual ``i`` (0-based)."""
    if not 0 <= i < u.n:
        raise ValueError(f"no individual {i} in a profile of {u.n}")
    return ChoiceSet(u.universe, 1 << u.orderings[i][0])


def constant_all(u: Profile) -> ChoiceSet:
    """Every alternative, at every profile."""
    return ChoiceSet(u.universe, u.universe.full_mask)


# ---------------------------------------------------------------------------
# Whole-domain value tables


def _table_tops(d: DomainIndex) -> np.ndarray:
    return d.tops_table.copy()


def _table_pareto(d: DomainIndex) -> np.ndarray:
    return d.pareto_table.copy()


def _table_all(d: DomainIndex) -> np.ndarray:
    return np.full(d.total, d.universe.full_mask, dtype=np.uint8)


def _table_dictator(d: DomainIndex, i: int) -> np.ndarray:
    out = np.empty(d.total, dtype=np.uint8)
    top = d.top_table
    for lo, hi in index_chunks(d.total):
        ks = np.arange(lo, hi)
        out[lo:hi] = np.uint8(1) << top[d.digit(i, ks)].astype(np.uint8)
    return out


def _scores_to_mask(scores: np.ndarray) -> np.ndarray:
    best = scores.max(axis=1, keepdims=True)
    hits = scores == best
    mask = np.zeros(scores.shape[0], dtype=np.uint8)
    for x in range(scores.shape[1]):
        mask |= hits[:, x].astype(np.uint8) << np.uint8(x)
    return mask


def _table_borda(d: DomainIndex) -> np.ndarray:
    per_order = (d.m - 1 - d.rank_table).astype(np.int32)  # (m!, m)
    out = np.empty(d.total, dtype=np.uint8)
    for lo, hi in index_chunks(d.total):
        ks = np.arange(lo, hi)
        scores = per_order[d.digit(0, ks)].copy()
        for i in range(1, d.n):
            scores += per_order[d.digit(i, ks)]
        out[lo:hi] = _scores_to_mask(scores)
    return out


def _table_plurality(d: DomainIndex) -> np.ndarray:
    top = d.top_table
    out = np.empty(d.total, dtype=np.uint8)
    for lo, hi in index_chunks(d.total):
        ks = np.arange(lo, hi)
        counts = np.zeros((hi - lo, d.m), dtype=np.int32)
        rows = np.arange(hi - lo)
        for i in range(d.n):
            counts[rows, top[d.digit(i, ks)]] += 1
        out[lo:hi] = _scores_to_mask(counts)
    return out


def _table_copeland(d: DomainIndex) -> np.ndarray:
    # prefer[o, x, y] = 1 iff x ranks above y in ordering o
    rank = d.rank_table
    prefer = (rank[:, :, None] < rank[:, None, :]).astype(np.int8)
    out = np.empty(d.total, dtype=np.uint8)
    for lo, hi in index_chunks(d.total):
        ks = np.arange(lo, hi)
        counts = prefer[d.digit(0, ks)].astype(np.int16)
        for i in range(1, d.n):
            counts += prefer[d.digit(i, ks)]
        beats = (2 * counts > d.n)
        scores = beats.sum(axis=2, dtype=np.int16) - beats.sum(axis=1, dtype=np.int16)
        out[lo:hi] = _scores_to_mask(scores)
    return out


def _table_drop_one(d: DomainIndex, t: int) -> np.ndarray:
    base = d.pareto_table
    bit = np.uint8(1 << t)
    dropped = base & np.uint8(~np.uint8(bit) & 0xFF)
    return np.where(base == bit, base, np.where(dropped != 0, dropped, base)).astype(np.uint8)


# ---------------------------------------------------------------------------
# Correspondences

_DICTATOR_RE = re.compile(r"^dictator:(\d+)$")
_DROP_RE = re.compile(r"^drop:(.)$")
_EXAMPLE_RE = re.compile(r"^example:(\d+)(?:-(orbit|neutral|unrestricted))?$")

#: Axiom-claim entries driving the axiom-matrix checks (3 alternatives,
#: 3 individuals unless noted).  Unlisted rule/axiom pairs carry no claim.


@dataclass(frozen=True)
class RuleCatalogEntry:
    name: str
    expected_axioms: frozenset[str]       # claimed to hold
    expected_failures: frozenset[str]     # claimed to fail
    note: str


RULE_CATALOG: dict[str, RuleCatalogEntry] = {
    e.name: e
    for e in (
        RuleCatalogEntry(
            "pareto",
            frozenset({"pareto", "tops-in", "balancedness", "monotonicity",
                       "weak-monotonicity", "strong-stability", "anonymity", "neutrality"}),
            frozenset(),
            "undominated alternatives; satisfies the full axiom list",
        ),
        RuleCatalogEntry(
            "tops",
            frozenset({"pareto", "tops-in", "monotonicity", "weak-monotonicity",
                       "anonymity", "neutrality"}),
            frozenset({"balancedness", "strong-stability"}),
            "union of the individual tops",
        ),
        RuleCatalogEntry(
            "borda",
            frozenset({"pareto", "balancedness", "monotonicity", "weak-monotonicity",
                       "anonymity", "neutrality"}),
            frozenset({"tops-in", "strong-stability"}),
            "positional scoring rule",
        ),
        RuleCatalogEntry(
            "plurality",
            frozenset({"pareto", "monotonicity", "weak-monotonicity",
                       "anonymity", "neutrality"}),
            frozenset({"tops-in", "balancedness", "strong-stability"}),
            "first-place counting rule",
        ),
        RuleCatalogEntry(
            "copeland",
            frozenset({"pareto", "balancedness", "anonymity", "neutrality"}),
            frozenset({"strong-stability"}),
            "pairwise-majority wins minus losses",
        ),
        RuleCatalogEntry(
            "dictator:1",
            frozenset({"pareto", "neutrality"}),
            frozenset({"strong-stability", "anonymity"}),
            "first individual's top choice",
        ),
        RuleCatalogEntry(
            "all",
            frozenset({"tops-in", "balancedness", "monotonicity", "weak-monotonicity",
                       "strong-stability", "anonymity", "neutrality"}),
            frozenset({"pareto"}),
            "the whole alternative set, constantly",
        ),
    )
}


class Correspondence:
    """A total map from the profiles of one ``(m, n)`` domain to choice sets.

    ``default`` names a rule from the catalog; ``overrides`` maps specific
    profiles (as ordering tuples) to fixed choice-set masks.  Evaluation is
    pure and instances are immutable, so a correspondence can be shared
    freely between workers.
    """

    def __init__(self, universe: Universe, n: int, default: str = "pareto",
                 overrides: Mapping[tuple[Ordering, ...], int] | None = None,
                 name: str | None = None):
        self.universe = universe
        self.n = n
        self.default = default
        self.overrides: dict[tuple[Ordering, ...], int] = dict(overrides or {})
        self.name = name or (default if not self.overrides else f"table({default})")
        self._choose_base, self._table_base = _resolve_base(default, universe, n)
        full = universe.full_mask
        for key, mask in self.overrides.items():
            if len(key) != n:
                raise ValueError(f"override profile has {len(key)} individuals, expected {n}")
            if not 0 < mask <= full:
                raise ValueError(f"override value must be a non-empty subset mask, got {mask}")
        self._tables: dict[tuple[int, int, str], np.ndarray] = {}

    @property
    def m(self) -> int:
        return self.universe.m

    def _check_profile(self, u: Profile) -> None:
        if u.universe != self.universe or u.n != self.n:
            raise ValueError(
                f"profile over {u.universe.labels!r} with n={u.n} does not match rule "
                f"{self.name!r} over {self.universe.labels!r} with n={self.n}"
            )

    def choose_mask(self, u: Profile) -> int:
        self._check_profile(u)
        hit = self.overrides.get(u.orderings)
        if hit is not None:
            return hit
        return self._choose_base(u)

    def choose(self, u: Profile) -> ChoiceSet:
        return ChoiceSet(self.universe, self.choose_mask(u))

    def _check_domain(self, d: DomainIndex) -> None:
        if d.universe != self.universe or d.n != self.n:
            raise ValueError(
                f"domain {d!r} does not match rule {self.name!r} "
                f"over {self.universe.labels!r} with n={self.n}"
            )

    def value_table(self, d: DomainIndex) -> np.ndarray:
        """(total,) uint8 mask per profile index; cached per domain."""
        self._check_domain(d)
        key = (d.m, d.n, d.universe.labels)
        table = self._tables.get(key)
        if table is None:
            table = self._table_base(d)
            for orderings, mask in self.overrides.items():
                table[d.index_orderings(orderings)] = mask
            table.flags.writeable = False
            self._tables[key] = table
        return table

    def deviation_indices(self, d: DomainIndex) -> np.ndarray:
        """Indices where this rule differs from the undominated-set rule."""
        return np.nonzero(self.value_table(d) != d.pareto_table)[0]

    def table_json(self) -> dict:
        """JSON form of a table correspondence (see README for the schema)."""
        lbl = self.universe.labels
        return {
            "m": self.m,
            "n": self.n,
            "labels": lbl,
            "default": self.default,
            "overrides": {
                "|".join("".join(lbl[a] for a in r) for r in key): list(self.universe.mask_labels(mask))
                for key, mask in sorted(self.overrides.items())
            },
        }

    def __repr__(self) -> str:  # pragma: no cover
        return f"Correspondence({self.name!r}, m={self.m}, n={self.n})"


def evaluate(G: Correspondence, u: Profile) -> ChoiceSet:
    """Value of correspondence ``G`` at profile ``u``."""
    return G.choose(u)


def _resolve_base(name: str, universe: Universe, n: int) -> tuple[
        Callable[[Profile], int], Callable[[DomainIndex], np.ndarray]]:
    simple: dict[str, tuple[Callable[[Profile], int], Callable[[DomainIndex], np.ndarray]]] = {
        "pareto": (pareto_mask, _table_pareto),
        "tops": (tops_mask, _table_tops),
        "borda": (borda_mask, _table_borda),
        "plurality": (plurality_mask, _table_plurality),
        "copeland": (copeland_mask, _table_copeland),
        "all": (lambda u: u.universe.full_mask, _table_all),
    }
    if name in simple:
        return simple[name]
    match = _DICTATOR_RE.match(name)
    if match:
        i = int(match.group(1)) - 1
        if not 0 <= i < n:
            raise ValueError(f"rule {name!r} needs an individual in 1..{n}")
        return (lambda u: 1 << u.orderings[i][0]), (lambda d: _table_dictator(d, i))
    match = _DROP_RE.match(name)
    if match:
        t = universe.index(match.group(1))
        return (lambda u: _drop_one_mask(u, t)), (lambda d: _table_drop_one(d, t))
    match = _EXAMPLE_RE.match(name)
    if match:
        inner = example_rule(int(match.group(1)), match.group(2), m=universe.m, n=n)
        if inner.universe != universe:
            raise ValueError(f"rule {name!r} uses universe {inner.universe.labels!r}, "
                             f"not {universe.labels!r}")
        return inner.choose_mask, inner.value_table
    raise ValueError(f"unknown rule {name!r}")


def make_rule(name: str, m: int | None = None, n: int | None = None,
              labels: str | None = None) -> Correspondence:
    """Build a catalog rule by name for an ``(m, n)`` domain.

    Example rules carry their own default sizes, so ``m`` and ``n`` may be
    omitted for them; plain catalog rules require both.
    """
    match = _EXAMPLE_RE.match(name)
    if match:
        return example_rule(int(match.group(1)), match.group(2), m=m, n=n, labels=labels)
    if m is None or n is None:
        raise ValueError(f"rule {name!r} needs explicit sizes m and n")
    universe = Universe(labels) if labels else Universe.of_size(m)
    return Correspondence(universe, n, default=name, name=name)


# ---------------------------------------------------------------------------
# Example rules


def _parse_fixed(universe: Universe, text: str) -> tuple[Ordering, ...]:
    return parse_profile(text, universe).orderings


def symmetry_orbit(universe: Universe, orderings: tuple[Ordering, ...]) -> tuple[tuple[Ordering, ...], ...]:
    """Closure of one profile under all alternative relabelings and all
    individual permutations, deduplicated, in deterministic order."""
    n = len(orderings)
    base = Profile(universe, orderings)
    seen: set[tuple[Ordering, ...]] = set()
    for theta in itertools.permutations(range(universe.m)):
        relabeled = apply_alternative_permutation(base, theta)
        for rho in itertools.permutations(range(n)):
            seen.add(apply_individual_permutation(relabeled, rho).orderings)
    return tuple(sorted(seen))


def _orbit_tops_overrides(universe: Universe, seed: tuple[Ordering, ...]) -> dict[tuple[Ordering, ...], int]:
    out = {}
    for member in symmetry_orbit(universe, seed):
        out[member] = tops_mask(Profile(universe, member))
    return out


_EXAMPLE_LABELS = {2: "xy", 4: "xyz", 5: "xyzw", 6: "xyzw", 7: "xyzw",
                   8: "xyzwt", 9: "xyzwt", 10: "abc"}


def tail_orderings_for_anchored_pair(universe: Universe) -> tuple[Ordering, ...]:
    """The six orderings of x, y, z, t with x above y and z above t, and w
    appended at the bottom (universe 'xyzwt')."""
    x, y, z, w, t = range(5)
    out = []
    for perm in itertools.permutations((x, y, z, t)):
        if perm.index(x) < perm.index(y) and perm.index(z) < perm.index(t):
            out.append(perm + (w,))
    return tuple(out)


def restricted_pair_profiles(universe: Universe, n: int) -> tuple[tuple[Ordering, ...], ...]:
    """Profiles built from the eight-ordering list in which each of the two
    anchor orderings occurs exactly once and every other slot holds one of
    the six tail orderings."""
    anchor1 = _parse_fixed(universe, "xywzt|xywzt")[0]
    anchor2 = _parse_fixed(universe, "ztwxy|ztwxy")[0]
    tails = tail_orderings_for_anchored_pair(universe)
    profiles = []
    for p1, p2 in itertools.permutations(range(n), 2):
        rest = [i for i in range(n) if i not in (p1, p2)]
        for combo in itertools.product(tails, repeat=len(rest)):
            orderings: list[Ordering] = [()] * n
            orderings[p1] = anchor1
            orderings[p2] = anchor2
            for slot, r in zip(rest, combo):
                orderings[slot] = r
            profiles.append(tuple(orderings))
    return tuple(sorted(set(profiles)))


def example_rule(k: int, variant: str | None = None, *, m: int | None = None,
                 n: int | None = None, labels: str | None = None,
                 drop: str | None = None) -> Correspondence:
    """Example correspondence ``k`` (1..11), optionally a named variant.

    Variants: ``example:5-orbit`` extends the single fixed profile to its
    full symmetry orbit; ``example:8-neutral`` does the same for the fixed
    pair; ``example:9-unrestricted`` drops the occurs-exactly-once condition
    on the two anchor orderings.
    """
    def fix(size_m: int | None, size_n: int | None, *, m_free: bool = False,
            n_free: bool = False) -> tuple[int, int]:
        got_m = m if m is not None else (size_m if size_m else 3)
        got_n = n if n is not None else (size_n if size_n else 3)
        if not m_free and size_m is not None and got_m != size_m:
            raise ValueError(f"example {k} is defined for m={size_m}, got m={got_m}")
        if not n_free and size_n is not None and got_n != size_n:
            raise ValueError(f"example {k} is defined for n={size_n}, got n={got_n}")
        return got_m, got_n

    if variant is not None and (k, variant) not in {(5, "orbit"), (8, "neutral"), (9, "unrestricted")}:
        raise ValueError(f"example {k} has no {variant!r} variant")
    name = f"example:{k}" + (f"-{variant}" if variant else "")

    if k == 1:
        em, en = fix(None, None, m_free=True, n_free=True)
        universe = Universe(labels) if labels else Universe.of_size(em)
        return Correspondence(universe, en, default="all", name=name)

    if k == 2:
        em, en = fix(2, 3)
        universe = Universe(labels or _EXAMPLE_LABELS[2])
        return Correspondence(universe, en, default="plurality", name=name)

    if k == 3:
        em, en = fix(None, None, m_free=True, n_free=True)
        if em < 3:
            raise ValueError(f"example 3 needs m >= 3, got m={em}")
        universe = Universe(labels) if labels else Universe.of_size(em)
        return Correspondence(universe, en, default="tops", name=name)

    if k == 4:
        em, en = fix(3, 3)
        universe = Universe(labels or _EXAMPLE_LABELS[4])
        fixed = _parse_fixed(universe, "xyz|yzx|zxy")
        return Correspondence(universe, en, overrides={fixed: universe.mask_from_labels("x")},
                              name=name)

    if k == 5:
        em, en = fix(4, 3)
        universe = Universe(labels or _EXAMPLE_LABELS[5])
        fixed = _parse_fixed(universe, "xyzw|ywxz|zwxy")
        if variant == "orbit":
            overrides = _orbit_tops_overrides(universe, fixed)
        else:
            overrides = {fixed: tops_mask(Profile(universe, fixed))}
        return Correspondence(universe, en, overrides=overrides, name=name)

    if k == 6:
        em, en = fix(4, None, n_free=True)
        universe = Universe(labels or _EXAMPLE_LABELS[6])
        dropped = drop if drop is not None else universe.labels[-1]
        return Correspondence(universe, en, default=f"drop:{dropped}", name=name)

    if k == 7:
        em, en = fix(4, None, n_free=True)
        universe = Universe(labels or _EXAMPLE_LABELS[7])
        return Correspondence(universe, en, default="tops", name=name)

    if k == 8:
        em, en = fix(5, 2)
        universe = Universe(labels or _EXAMPLE_LABELS[8])
        fixed = _parse_fixed(universe, "xywzt|ztwxy")
        if variant == "neutral":
            overrides = _orbit_tops_overrides(universe, fixed)
        else:
            chosen = universe.mask_from_labels("xz")
            swapped = (fixed[1], fixed[0])
            overrides = {fixed: chosen, swapped: chosen}
        return Correspondence(universe, en, overrides=overrides, name=name)

    if k == 9:
        em, en = fix(5, None, n_free=True)
        if en < 3:
            raise ValueError(f"example 9 needs n >= 3, got n={en}")
        universe = Universe(labels or _EXAMPLE_LABELS[9])
        if variant == "unrestricted":
            anchor1 = _parse_fixed(universe, "xywzt|xywzt")[0]
            anchor2 = _parse_fixed(universe, "ztwxy|ztwxy")[0]
            pool = (anchor1, anchor2) + tail_orderings_for_anchored_pair(universe)
            overrides = {}
            for combo in itertools.product(pool, repeat=en):
                overrides[combo] = tops_mask(Profile(universe, combo))
        else:
            chosen = universe.mask_from_labels("xz")
            overrides = {p: chosen for p in restricted_pair_profiles(universe, en)}
        return Correspondence(universe, en, overrides=overrides, name=name)

    if k == 10:
        em, en = fix(3, 3)
        universe = Universe(labels or _EXAMPLE_LABELS[10])
        chosen = universe.mask_from_labels("ac")
        overrides = {
            _parse_fixed(universe, "cba|acb|abc"): chosen,
            _parse_fixed(universe, "cba|cab|abc"): chosen,
        }
        return Correspondence(universe, en, overrides=overrides, name=name)

    if k == 11:
        em, en = fix(None, None, m_free=True, n_free=True)
        universe = Universe(labels) if labels else Universe.of_size(em)
        if universe.m != em:
            raise ValueError(f"labels {universe.labels!r} do not match m={em}")
        overrides = {}
        for r in itertools.permutations(range(em)):
            overrides[(r,) * en] = (1 << r[0]) | (1 << r[1])
        return Correspondence(universe, en, overrides=overrides, name=name)

    raise ValueError(f"unknown example {k} (supported: 1..11)")


# ---------------------------------------------------------------------------
# Table-correspondence files


def load_table(source: str | dict) -> Correspondence:
    """Build a table correspondence from its JSON form.

    Schema: ``{"m": int, "n": int, "default": rule-name,
    "overrides": {"<profile>": ["x", "z"], ...}, "labels": "xyzw"?}``.
    ``labels`` is optional; absent, labels come from the first override
    profile's order of appearance, or default to 'a', 'b', ... .
    """
    data = json.loads(source) if isinstance(source, str) else source
    try:
        m, n, default = int(data["m"]), int(data["n"]), data["default"]
    except KeyError as exc:
        raise ValueError(f"table file is missing the {exc.args[0]!r} field") from None
    raw = data.get("overrides", {})
    labels = data.get("labels")
    if labels is None:
        if raw:
            labels = "".join(dict.fromkeys(c for c in next(iter(raw)) if c not in "| \t"))
        else:
            labels = None
    universe = Universe(labels) if labels else Universe.of_size(m)
    if universe.m != m:
        raise ValueError(f"labels {universe.labels!r} do not match m={m}")
    overrides = {}
    for text, chosen in raw.items():
        profile = parse_profile(text, universe)
        if profile.n != n:
            raise ValueError(f"override profile {text!r} has {profile.n} individuals, expected {n}")
        overrides[profile.orderings] = universe.mask_from_labels("".join(chosen))
    return Correspondence(universe, n, default=default, overrides=overrides, name="table")
