"""Exhaustive enumerators for the combinatorial families, flip equivalence
classes, perfect ranking of signed permutations, and the one-step
recurrence maps between indexed families.

Reference enumerators sweep all 2^n * n! windows in lexicographic order and
keep the members of a literal membership predicate; there are no shortcut
generators.  Statistic-distribution sweeps used by the verification harness
share the same predicates but organize the sweep by underlying unsigned
permutation for speed.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

from .signed_perm import (
    Cycle,
    CycleForm,
    SignedPerm,
    cycle_form,
    from_window,
    stat_neg,
    stat_npk,
    stat_smax,
    stat_spk,
    valley_values,
)

FAMILIES = (
    "alternating",
    "snakes-b",
    "snakes-d",
    "cud-a",
    "cud-b",
    "cud-d",
    "vs-b",
    "vs-d",
    "fl-b",
    "fl-d",
)

DEFAULT_FAMILY_CAP = 8


class SizeCapExceededError(ValueError):
    pass


class IllegalFlipError(ValueError):
    pass


class IndexOutOfRangeError(ValueError):
    pass


class RankOutOfRangeError(ValueError):
    pass


class UnknownFamilyError(ValueError):
    pass


def family_cap() -> int:
    env = os.environ.get("ARNOLD_MAX_N")
    return int(env) if env else DEFAULT_FAMILY_CAP


def _check_size(n: int) -> None:
    if n < 1:
        raise SizeCapExceededError("n must be at least 1")
    if n > family_cap():
        raise SizeCapExceededError(f"n={n} exceeds the configured cap {family_cap()}")


# ---------------------------------------------------------------------------
# window iteration and perfect ranking

def windows(n: int) -> Iterator[tuple[int, ...]]:
    """All 2^n * n! windows in lexicographic order of the integer tuple."""

    def extend(prefix: tuple[int, ...], used: frozenset[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for a in range(n, 0, -1):
            if a not in used:
                yield from extend(prefix + (-a,), used | {a})
        for a in range(1, n + 1):
            if a not in used:
                yield from extend(prefix + (a,), used | {a})

    yield from extend((), frozenset())


def _candidates(n: int, used: set[int]) -> list[int]:
    neg = [-a for a in range(n, 0, -1) if a not in used]
    pos = [a for a in range(1, n + 1) if a not in used]
    return neg + pos


def rank(p: SignedPerm) -> int:
    """Position of the window in lexicographic order over all of size n."""
    n = p.n
    used: set[int] = set()
    r = 0
    for i, v in enumerate(p.window):
        cands = _candidates(n, used)
        block = factorial(n - 1 - i) * (1 << (n - 1 - i))
        r += cands.index(v) * block
        used.add(abs(v))
    return r


def unrank(r: int, n: int) -> SignedPerm:
    """Inverse of rank: unrank(0, n) is the lexicographically least window.

    >>> unrank(0, 2).window
    (-2, -1)
    """
    total = factorial(n) * (1 << n)
    if not 0 <= r < total:
        raise RankOutOfRangeError(f"rank {r} outside [0, {total})")
    used: set[int] = set()
    out = []
    for i in range(n):
        cands = _candidates(n, used)
        block = factorial(n - 1 - i) * (1 << (n - 1 - i))
        d, r = divmod(r, block)
        v = cands[d]
        out.append(v)
        used.add(abs(v))
    return SignedPerm(tuple(out))


# ---------------------------------------------------------------------------
# membership predicates

def _down_up(seq: Sequence[int]) -> bool:
    # s1 > s2 < s3 > ...
    return all(
        (seq[i] > seq[i + 1]) if i % 2 == 0 else (seq[i] < seq[i + 1])
        for i in range(len(seq) - 1)
    )


def _up_down(seq: Sequence[int]) -> bool:
    # s1 < s2 > s3 < ...
    return all(
        (seq[i] < seq[i + 1]) if i % 2 == 0 else (seq[i] > seq[i + 1])
        for i in range(len(seq) - 1)
    )


def is_alternating(w: Sequence[int]) -> bool:
    return _down_up(w)


def is_snake_b(w: Sequence[int]) -> bool:
    return w[0] > 0 and _down_up(w)


def is_snake_d(w: Sequence[int]) -> bool:
    if w[0] >= 0:
        return False
    if len(w) >= 2 and not w[0] > -w[1]:
        return False
    return _up_down(w)


def _cycles_up_down(cf: CycleForm) -> bool:
    return all(_up_down([abs(e) for e in c.entries]) for c in cf.cycles if not c.bracket)


def is_cud_b(cf: CycleForm) -> bool:
    return cf.is_special() and _cycles_up_down(cf)


def is_cud_d(cf: CycleForm) -> bool:
    last = cf.cycles[-1]
    if not last.bracket or len(last.entries) != 2:
        return False
    if any(c.bracket for c in cf.cycles[:-1]):
        return False
    return _cycles_up_down(cf)


def is_vs_b(w: Sequence[int]) -> bool:
    vv = valley_values([abs(v) for v in w])
    for i, v in enumerate(w):
        if v < 0 and (i == 0 or abs(w[i - 1]) not in vv):
            return False
    return True


def is_vs_d(w: Sequence[int]) -> bool:
    if w[0] >= 0:
        return False
    if len(w) >= 2 and not (w[1] > 0 and -w[0] > w[1]):
        return False
    vv = valley_values([abs(v) for v in w])
    for i in range(2, len(w)):
        if w[i] < 0 and abs(w[i - 1]) not in vv:
            return False
    return True


# ---------------------------------------------------------------------------
# flips and flip classes

def flip(obj, k: int):
    """Reverse the length-k prefix.  Legal when k = 1, k = n, or the entry
    after the prefix is smaller in absolute value than everything in it."""
    win = obj.window if isinstance(obj, SignedPerm) else tuple(obj)
    n = len(win)
    if not 1 <= k <= n:
        raise IllegalFlipError(f"k={k} outside 1..{n}")
    if 1 < k < n and abs(win[k]) >= min(abs(v) for v in win[:k]):
        raise IllegalFlipError(f"entry after prefix is not a new minimum (k={k})")
    out = tuple(reversed(win[:k])) + win[k:]
    return SignedPerm(out) if isinstance(obj, SignedPerm) else out


def legal_flips(win: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = len(win)
    prefix_min = abs(win[0])
    for k in range(1, n + 1):
        if k == 1 or k == n or abs(win[k]) < prefix_min:
            yield tuple(reversed(win[:k])) + win[k:]
        if k < n:
            prefix_min = min(prefix_min, abs(win[k]))


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class FlipClass:
    canon: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    smax: int
    spk: int

    @property
    def n(self) -> int:
        return len(self.canon)

    def to_json(self) -> dict:
        return {
            "window": list(self.canon),
            "members": [list(m) for m in self.members],
            "smax": self.smax,
            "spk": self.spk,
        }


def _build_class(members: list[tuple[int, ...]]) -> FlipClass:
    members.sort()
    smaxes = {stat_smax(m) for m in members}
    spks = {stat_spk(SignedPerm(m)) for m in members}
    if len(smaxes) != 1 or len(spks) != 1:
        raise ValueError(f"class of {members[0]} has non-constant smax/spk")
    return FlipClass(members[0], tuple(members), smaxes.pop(), spks.pop())


@lru_cache(maxsize=None)
def flip_classes(n: int) -> tuple[FlipClass, ...]:
    """All flip equivalence classes of signed windows of size n, each with
    its sorted member list; constancy of smax and spk is checked here."""
    _check_size(n)
    all_windows = list(windows(n))
    index = {w: i for i, w in enumerate(all_windows)}
    uf = _UnionFind(len(all_windows))
    for i, w in enumerate(all_windows):
        for img in legal_flips(w):
            uf.union(i, index[img])
    groups: dict[int, list[tuple[int, ...]]] = {}
    for i, w in enumerate(all_windows):
        groups.setdefault(uf.find(i), []).append(w)
    classes = [_build_class(g) for g in groups.values()]
    classes.sort(key=lambda c: c.canon)
    return tuple(classes)


@lru_cache(maxsize=None)
def unsigned_flip_classes(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Flip classes of ordinary permutations, as sorted member tuples."""
    _check_size(n)
    perms = sorted(permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}
    uf = _UnionFind(len(perms))
    for i, p in enumerate(perms):
        for img in legal_flips(p):
            uf.union(i, index[img])
    groups: dict[int, list[tuple[int, ...]]] = {}
    for i, p in enumerate(perms):
        groups.setdefault(uf.find(i), []).append(p)
    out = [tuple(sorted(g)) for g in groups.values()]
    out.sort()
    return tuple(out)


# ---------------------------------------------------------------------------
# family enumeration

@lru_cache(maxsize=None)
def _enumerate(family: str, n: int):
    if family == "alternating":
        return tuple(
            SignedPerm(p) for p in sorted(permutations(range(1, n + 1))) if is_alternating(p)
        )
    if family == "cud-a":
        out = []
        for p in sorted(permutations(range(1, n + 1))):
            cf = cycle_form(SignedPerm(p))
            if is_cud_b(cf):
                out.append(cf)
        return tuple(out)
    if family == "snakes-b":
        return tuple(SignedPerm(w) for w in windows(n) if is_snake_b(w))
    if family == "snakes-d":
        return tuple(SignedPerm(w) for w in windows(n) if is_snake_d(w))
    if family == "vs-b":
        return tuple(SignedPerm(w) for w in windows(n) if is_vs_b(w))
    if family == "vs-d":
        return tuple(SignedPerm(w) for w in windows(n) if is_vs_d(w))
    if family == "cud-b":
        out = []
        for w in windows(n):
            cf = cycle_form(SignedPerm(w))
            if is_cud_b(cf):
                out.append(cf)
        return tuple(out)
    if family == "cud-d":
        out = []
        for w in windows(n):
            cf = cycle_form(SignedPerm(w))
            if is_cud_d(cf):
                out.append(cf)
        return tuple(out)
    if family == "fl-b":
        return tuple(c for c in flip_classes(n) if c.smax > 0)
    if family == "fl-d":
        return tuple(c for c in flip_classes(n) if c.smax < 0)
    raise UnknownFamilyError(family)


def enumerate_family(family: str, n: int):
    """Every member of the family, exactly once, ordered by canonical window."""
    if family not in FAMILIES:
        raise UnknownFamilyError(family)
    _check_size(n)
    return _enumerate(family, n)


def family_index(family: str, obj) -> int:
    """The indexing statistic: last-cycle leader for cycle families, first
    window entry for window families, signed maximum for flip classes."""
    if family in ("cud-a", "cud-b", "cud-d"):
        return obj.cycles[-1].leader
    if family in ("alternating", "snakes-b", "vs-b"):
        return obj.window[0]
    if family in ("snakes-d", "vs-d"):
        return -obj.window[0]
    if family == "fl-b":
        return obj.smax
    if family == "fl-d":
        return -obj.smax
    raise UnknownFamilyError(family)


def enumerate_indexed(family: str, n: int, k: int):
    """Members with index k; the disjoint union over k = 1..n is the family."""
    if not 1 <= k <= n:
        raise IndexOutOfRangeError(f"index {k} outside 1..{n}")
    return tuple(obj for obj in enumerate_family(family, n) if family_index(family, obj) == k)


# ---------------------------------------------------------------------------
# fast statistic-distribution sweeps (same predicates, organized per
# unsigned permutation so the n=7 checks stay inside their time budget)

def _perm_cycles(p: tuple[int, ...]) -> list[list[int]]:
    n = len(p)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x - 1]
        cycles.append(cyc)
    return cycles


@lru_cache(maxsize=None)
def cud_distribution(n: int) -> Counter:
    """Counter over (side, index, npk) for both cycle-up-down families,
    side "b" or "d", index = last-cycle leader."""
    _check_size(n)
    counts: Counter = Counter()
    for p in permutations(range(1, n + 1)):
        cycles = _perm_cycles(p)
        if not all(_up_down(c) for c in cycles):
            continue
        data = []
        for c in cycles:
            full = 0
            prefix = 0
            ascents = []
            for j, v in enumerate(c):
                if j >= 1 and c[j] > c[j - 1]:
                    ascents.append(prefix)
                prefix |= 1 << (v - 1)
            full = prefix
            data.append((full, ascents, c[0], len(c) == 1))
        max_leader = max(d[2] for d in data)
        for mask in range(1 << n):
            odd = [d for d in data if (mask & d[0]).bit_count() & 1]
            npk = 0
            for _, ascents, _, _ in data:
                for pm in ascents:
                    npk += (mask & pm).bit_count() & 1
            if not odd:
                counts[("b", max_leader, npk)] += 1
            elif len(odd) == 1 and odd[0][3] and odd[0][2] == max_leader:
                counts[("d", max_leader, npk + 1)] += 1
    return counts


@lru_cache(maxsize=None)
def vs_distribution(n: int) -> Counter:
    """Counter over (side, first-entry index, neg) for the valley families."""
    _check_size(n)
    counts: Counter = Counter()
    for p in permutations(range(1, n + 1)):
        vv = valley_values(p)
        val_pos = [i for i in range(n - 1) if p[i] in vv] if n > 1 else []
        allowed_b = 0
        allowed_d = 0
        for i in val_pos:
            allowed_b |= 1 << (i + 1)
            if i >= 1:
                allowed_d |= 1 << (i + 1)
        sub = allowed_b
        while True:
            counts[("b", p[0], sub.bit_count())] += 1
            if sub == 0:
                break
            sub = (sub - 1) & allowed_b
        if n == 1 or p[0] > p[1]:
            sub = allowed_d
            while True:
                counts[("d", p[0], sub.bit_count() + 1)] += 1
                if sub == 0:
                    break
                sub = (sub - 1) & allowed_d
    return counts


# ---------------------------------------------------------------------------
# one-step recurrence maps between indexed families

@dataclass(frozen=True)
class StepRecord:
    source: object
    case: str
    target_family: str
    target_n: int
    target_index: int
    image: object
    stat_before: int
    stat_after: int


@dataclass(frozen=True)
class StepReport:
    family: str
    side: str
    n: int
    k: int
    records: tuple[StepRecord, ...]


def _remove_shift(v: int, removed: int) -> int:
    if abs(v) < removed:
        return v
    return v - 1 if v > 0 else v + 1


def _swap_abs(v: int, a: int, b: int) -> int:
    if abs(v) == a:
        return b if v > 0 else -b
    if abs(v) == b:
        return a if v > 0 else -a
    return v


def psi_cud_d(cf: CycleForm) -> StepRecord:
    """One recurrence step on a type-D cycle-up-down member with final
    bracket (k,-k), k >= 2: either drop the bracket (when k-1 leads the
    previous cycle) or slide the bracket down to (k-1,-(k-1))."""
    if not is_cud_d(cf):
        raise ValueError("not a type-D cycle-up-down cycle form")
    k = cf.cycles[-1].leader
    if k < 2:
        raise IndexOutOfRangeError("step needs k >= 2")
    body = cf.cycles[:-1]
    before = stat_npk(cf)
    if any(c.leader == k - 1 for c in body):
        new = tuple(Cycle(tuple(_remove_shift(v, k) for v in c.entries)) for c in body)
        image = CycleForm(new)
        return StepRecord(cf, "i", "cud-b", cf.n - 1, k - 1, image, before, stat_npk(image))
    new = tuple(Cycle(tuple(_swap_abs(v, k - 1, k) for v in c.entries)) for c in body)
    image = CycleForm(new + (Cycle((k - 1, -(k - 1)), bracket=True),))
    return StepRecord(cf, "ii", "cud-d", cf.n, k - 1, image, before, stat_npk(image))


def psi_cud_b(cf: CycleForm) -> StepRecord:
    """One recurrence step on a type-B cycle-up-down member with last-cycle
    leader k < n: delete a final (k,-(k+1)) into a bracket, split the last
    cycle at k+1, or swap the values k and k+1."""
    if not is_cud_b(cf):
        raise ValueError("not a type-B cycle-up-down cycle form")
    k = cf.cycles[-1].leader
    if k >= cf.n:
        raise IndexOutOfRangeError("step needs k < n")
    last = cf.cycles[-1]
    body = cf.cycles[:-1]
    before = stat_npk(cf)
    if last.entries == (k, -(k + 1)):
        new = tuple(Cycle(tuple(_remove_shift(v, k + 1) for v in c.entries)) for c in body)
        image = CycleForm(new + (Cycle((k, -k), bracket=True),))
        return StepRecord(cf, "i", "cud-d", cf.n - 1, k, image, before, stat_npk(image))
    abs_entries = [abs(v) for v in last.entries]
    if k + 1 in abs_entries:
        pos = abs_entries.index(k + 1)
        first = Cycle((k,) + last.entries[1:pos])
        second = Cycle((k + 1,) + last.entries[pos + 1 :])
        image = CycleForm(body + (first, second))
        return StepRecord(cf, "ii", "cud-b", cf.n, k + 1, image, before, stat_npk(image))
    new = tuple(Cycle(tuple(_swap_abs(v, k, k + 1) for v in c.entries)) for c in cf.cycles)
    image = CycleForm(new)
    return StepRecord(cf, "iii", "cud-b", cf.n, k + 1, image, before, stat_npk(image))


def psi_cud_bridge(cf: CycleForm) -> StepRecord:
    """Swap a final singleton (n) with the bracket (n,-n) and back."""
    n = cf.n
    last = cf.cycles[-1]
    before = stat_npk(cf)
    if last.bracket:
        image = CycleForm(cf.cycles[:-1] + (Cycle((n,)),))
        return StepRecord(cf, "bridge", "cud-b", n, n, image, before, stat_npk(image))
    if last.entries != (n,):
        raise ValueError("bridge step needs last cycle (n) or (n,-n)")
    image = CycleForm(cf.cycles[:-1] + (Cycle((n, -n), bracket=True),))
    return StepRecord(cf, "bridge", "cud-d", n, n, image, before, stat_npk(image))


def psi_vs_d(p: SignedPerm) -> StepRecord:
    """One recurrence step on a type-D valley member starting -k, k >= 2."""
    if not is_vs_d(p.window):
        raise ValueError("not a type-D valley signed permutation")
    w = p.window
    k = -w[0]
    if k < 2:
        raise IndexOutOfRangeError("step needs k >= 2")
    before = stat_neg(p)
    if w[1] == k - 1:
        image = from_window(tuple(_remove_shift(v, k) for v in w[1:]))
        return StepRecord(p, "1", "vs-b", p.n - 1, k - 1, image, before, stat_neg(image))
    image = from_window(tuple(_swap_abs(v, k - 1, k) for v in w))
    return StepRecord(p, "2", "vs-d", p.n, k - 1, image, before, stat_neg(image))


def psi_vs_b(p: SignedPerm) -> StepRecord:
    """One recurrence step on a type-B valley member starting k < n.

    A window [k, -(k+1), x, ...] drops its head when 0 < x < k; when x > k
    the head pair is rewritten to [k+1, k, -x, ...] instead, which keeps the
    step invertible.  Any other window swaps the values k and k+1.
    """
    if not is_vs_b(p.window):
        raise ValueError("not a type-B valley signed permutation")
    w = p.window
    k = w[0]
    if k >= p.n:
        raise IndexOutOfRangeError("step needs k < n")
    before = stat_neg(p)
    if len(w) >= 2 and w[1] == -(k + 1):
        if p.n == 2 or 0 < w[2] < k:
            image = from_window(tuple(_remove_shift(v, k) for v in w[1:]))
            return StepRecord(p, "1", "vs-d", p.n - 1, k, image, before, stat_neg(image))
        image = from_window((k + 1, k, -w[2]) + w[3:])
        return StepRecord(p, "1b", "vs-b", p.n, k + 1, image, before, stat_neg(image))
    image = from_window(tuple(_swap_abs(v, k, k + 1) for v in w))
    return StepRecord(p, "2", "vs-b", p.n, k + 1, image, before, stat_neg(image))


def psi_vs_bridge(p: SignedPerm) -> StepRecord:
    """Negate a leading n (type B, index n) to -n (type D, index n) or back."""
    w = p.window
    before = stat_neg(p)
    if w[0] == p.n:
        image = from_window((-p.n,) + w[1:])
        return StepRecord(p, "bridge", "vs-d", p.n, p.n, image, before, stat_neg(image))
    if w[0] == -p.n:
        image = from_window((p.n,) + w[1:])
        return StepRecord(p, "bridge", "vs-b", p.n, p.n, image, before, stat_neg(image))
    raise ValueError("bridge step needs first entry n or -n")


def recurrence_step_cud(n: int, k: int, side: str) -> StepReport:
    """Apply the one-step map to every member of the indexed family."""
    if side == "d":
        if not 1 < k <= n:
            raise IndexOutOfRangeError("type-D step needs 1 < k <= n")
        records = tuple(psi_cud_d(cf) for cf in enumerate_indexed("cud-d", n, k))
    elif side == "b":
        if not 1 <= k < n:
            raise IndexOutOfRangeError("type-B step needs 1 <= k < n")
        records = tuple(psi_cud_b(cf) for cf in enumerate_indexed("cud-b", n, k))
    else:
        raise ValueError("side must be 'b' or 'd'")
    return StepReport("cud", side, n, k, records)


def recurrence_step_vs(n: int, k: int, side: str) -> StepReport:
    if side == "d":
        if not 1 < k <= n:
            raise IndexOutOfRangeError("type-D step needs 1 < k <= n")
        records = tuple(psi_vs_d(p) for p in enumerate_indexed("vs-d", n, k))
    elif side == "b":
        if not 1 <= k < n:
            raise IndexOutOfRangeError("type-B step needs 1 <= k < n")
        records = tuple(psi_vs_b(p) for p in enumerate_indexed("vs-b", n, k))
    else:
        raise ValueError("side must be 'b' or 'd'")
    return StepReport("vs", side, n, k, records)
