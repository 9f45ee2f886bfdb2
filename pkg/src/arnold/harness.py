"""Named, runnable checks: every identity the package claims is verified by
exhaustive enumeration at desk scale, against golden tables where the
expected values are fixed numbers.

Each check returns a CheckResult; a pass/fail check fails exactly when it
collected at least one mismatch record.  Report-only checks never fail:
they exist to record findings (currently, where the per-object tree/npk
exponent identity holds and where it does not).
"""
from __future__ import annotations

import json
import os
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from itertools import permutations
from pathlib import Path
from typing import Callable, Iterable

from . import bijections as bij
from . import families as fam
from . import trees as tr
from .families import SizeCapExceededError
from .laurent import LaurentPoly
from .signed_perm import (
    SignedPerm,
    left_to_right_minima,
    peak_values,
    stat_npk,
    stat_smax,
    stat_spk,
)
from .triangles import arnold_hoffman, arnold_numbers, check_hoffman_identities, euler_numbers

MAX_DETAILS = 12


class UnknownCheckError(ValueError):
    pass


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    n_range: tuple[int, int]
    status: str  # "pass" | "fail" | "report-only"
    details: tuple[str, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "n_range": list(self.n_range),
            "status": self.status,
            "details": list(self.details),
            "elapsed": self.elapsed,
        }


@dataclass(frozen=True)
class RegisteredCheck:
    check_id: str
    claim: str
    default_max_n: int
    report_only: bool = False


def _load_golden(name: str, golden_dir: str | None):
    if golden_dir is not None:
        return json.loads((Path(golden_dir) / name).read_text())
    return json.loads(resources.files("arnold.golden").joinpath(name).read_text())


def _clip(details: list[str]) -> tuple[str, ...]:
    if len(details) > MAX_DETAILS:
        extra = len(details) - MAX_DETAILS
        return tuple(details[:MAX_DETAILS] + [f"... and {extra} more"])
    return tuple(details)


def _poly_of_counts(stat_counts: dict[int, int], n: int) -> LaurentPoly:
    """Generating polynomial sum of t^(n+1-2*s) over a statistic multiset."""
    coeffs: dict[int, int] = {}
    for s, c in stat_counts.items():
        e = n + 1 - 2 * s
        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPoly(coeffs)


def _emp_poly(emp_counts: dict[int, int]) -> LaurentPoly:
    return LaurentPoly(dict(emp_counts))


# ---------------------------------------------------------------------------
# triangle and table checks

def check_table_arnold(n_max: int, golden_dir: str | None = None) -> list[str]:
    golden = _load_golden("table1.json", golden_dir)
    top = min(n_max, len(golden["rows"]))
    rows = arnold_numbers(top)
    details = []
    for row, grow in zip(rows, golden["rows"][:top]):
        if list(row.neg) != grow["neg"] or list(row.pos) != grow["pos"]:
            details.append(f"row {row.n}: got neg={list(row.neg)} pos={list(row.pos)}")
        if sum(row.pos) != golden["springer_b"][row.n - 1]:
            details.append(f"row {row.n}: positive sum {sum(row.pos)}")
        if sum(row.neg) != golden["springer_d"][row.n - 1]:
            details.append(f"row {row.n}: negative sum {sum(row.neg)}")
    return details


def check_table_polys(n_max: int, golden_dir: str | None = None) -> list[str]:
    golden = _load_golden("table2.json", golden_dir)
    top = min(n_max, len(golden["rows"]))
    rows = arnold_hoffman(top)
    details = []
    for row, grow in zip(rows, golden["rows"][:top]):
        want_neg = [LaurentPoly.from_json_map(m) for m in grow["neg"]]
        want_pos = [LaurentPoly.from_json_map(m) for m in grow["pos"]]
        if list(row.neg) != want_neg or list(row.pos) != want_pos:
            details.append(f"row {row.n} differs from the stored polynomials")
    return details


def check_poly_at_1(n_max: int, golden_dir: str | None = None) -> list[str]:
    polys = arnold_hoffman(n_max)
    nums = arnold_numbers(n_max)
    details = []
    for prow, nrow in zip(polys, nums):
        for k, poly in prow.entries():
            if poly(1) != nrow.value(k):
                details.append(f"V({prow.n},{k})(1) = {poly(1)} != {nrow.value(k)}")
    return details


def check_row_sums_springer(n_max: int, golden_dir: str | None = None) -> list[str]:
    golden = _load_golden("table1.json", golden_dir)
    top = min(n_max, len(golden["springer_b"]))
    details = []
    for row in arnold_numbers(top):
        if sum(row.pos) != golden["springer_b"][row.n - 1]:
            details.append(f"n={row.n}: positive row sum {sum(row.pos)}")
        if sum(row.neg) != golden["springer_d"][row.n - 1]:
            details.append(f"n={row.n}: negative row sum {sum(row.neg)}")
    return details


def check_hoffman_q(n_max: int, golden_dir: str | None = None) -> list[str]:
    return [
        f"n={r.n}: t*Q_n differs from the positive-side row sum"
        for r in check_hoffman_identities(n_max)
        if not r.q_side_ok
    ]


def check_hoffman_p(n_max: int, golden_dir: str | None = None) -> list[str]:
    return [
        f"n={r.n}: P_n - t*Q_n differs from the negative-side row sum"
        for r in check_hoffman_identities(n_max)
        if not r.p_side_ok
    ]


def check_entringer_alternating(n_max: int, golden_dir: str | None = None) -> list[str]:
    from .triangles import entringer

    details = []
    rows = entringer(n_max)
    for n in range(1, n_max + 1):
        counts = Counter()
        for p in permutations(range(1, n + 1)):
            if fam.is_alternating(p):
                counts[p[0]] += 1
        for k in range(1, n + 1):
            if counts.get(k, 0) != rows[n - 1][k - 1]:
                details.append(
                    f"n={n} k={k}: {counts.get(k, 0)} alternating vs entry {rows[n - 1][k - 1]}"
                )
    return details


def check_snakes_arnold(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    rows = arnold_numbers(n_max)
    for n in range(1, n_max + 1):
        row = rows[n - 1]
        b_counts = Counter(p.window[0] for p in fam.enumerate_family("snakes-b", n))
        d_counts = Counter(-p.window[0] for p in fam.enumerate_family("snakes-d", n))
        for k in range(1, n + 1):
            if b_counts.get(k, 0) != row.value(k):
                details.append(f"n={n}: {b_counts.get(k, 0)} type-B snakes start {k}, triangle {row.value(k)}")
            if d_counts.get(k, 0) != row.value(-k):
                details.append(f"n={n}: {d_counts.get(k, 0)} type-D snakes start -{k}, triangle {row.value(-k)}")
    return details


# ---------------------------------------------------------------------------
# refined-family theorems

def _compare_family_polys(
    n_max: int, dist_of_n: Callable[[int], Counter], label: str
) -> list[str]:
    details = []
    polys = arnold_hoffman(n_max)
    for n in range(1, n_max + 1):
        dist = dist_of_n(n)
        grouped: dict[tuple[str, int], dict[int, int]] = {}
        for (side, idx, s), c in dist.items():
            grouped.setdefault((side, idx), {}).setdefault(s, 0)
            grouped[(side, idx)][s] += c
        row = polys[n - 1]
        for k in range(1, n + 1):
            got_b = _poly_of_counts(grouped.get(("b", n - k + 1), {}), n)
            if got_b != row.value(k):
                details.append(f"{label} B n={n} k={k}: {got_b} != {row.value(k)}")
            got_d = _poly_of_counts(grouped.get(("d", n - k + 1), {}), n)
            if got_d != row.value(-k):
                details.append(f"{label} D n={n} k={k}: {got_d} != {row.value(-k)}")
    return details


def check_thm_cud(n_max: int, golden_dir: str | None = None) -> list[str]:
    return _compare_family_polys(n_max, fam.cud_distribution, "cud")


def check_thm_vs(n_max: int, golden_dir: str | None = None) -> list[str]:
    return _compare_family_polys(n_max, fam.vs_distribution, "vs")


def _fl_distribution(n: int) -> Counter:
    counts: Counter = Counter()
    for cls in fam.flip_classes(n):
        side = "b" if cls.smax > 0 else "d"
        counts[(side, abs(cls.smax), cls.spk)] += 1
    return counts


def check_thm_fl(n_max: int, golden_dir: str | None = None) -> list[str]:
    return _compare_family_polys(n_max, _fl_distribution, "fl")


def _tree_distribution(n: int) -> Counter:
    counts: Counter = Counter()
    for t in tr.gen_trees(n):
        c = tr.classify(t)
        side = "b" if c.kind == "o" else "d"
        counts[(side, c.rightmost_label, c.emp)] += 1
    return counts


def check_thm_trees(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    polys = arnold_hoffman(n_max)
    for n in range(1, n_max + 1):
        dist = _tree_distribution(n)
        grouped: dict[tuple[str, int], dict[int, int]] = {}
        for (side, idx, emp), c in dist.items():
            grouped.setdefault((side, idx), {}).setdefault(emp, 0)
            grouped[(side, idx)][emp] += c
        row = polys[n - 1]
        for k in range(1, n + 1):
            got_o = _emp_poly(grouped.get(("b", n - k + 1), {}))
            if got_o != row.value(k):
                details.append(f"trees-o n={n} k={k}: {got_o} != {row.value(k)}")
            got_s = _emp_poly(grouped.get(("d", n - k + 1), {}))
            if got_s != row.value(-k):
                details.append(f"trees-s n={n} k={k}: {got_s} != {row.value(-k)}")
    return details


# ---------------------------------------------------------------------------
# bijection checks

def _tree_counts_by_index(n: int) -> Counter:
    counts: Counter = Counter()
    for t in tr.gen_trees(n):
        c = tr.classify(t)
        counts[(c.kind, c.rightmost_label)] += 1
    return counts


def _check_bijection_into_trees(
    n_max: int,
    family: str,
    mapping: Callable,
    index_of: Callable,
    kind: str,
    label: str,
) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        members = fam.enumerate_family(family, n)
        images = []
        for m in members:
            t = mapping(m)
            c = tr.classify(t)
            if not tr.is_complete_increasing(t, n):
                details.append(f"{label} n={n}: invalid image tree for {m}")
                continue
            if c.kind != kind or c.rightmost_label != index_of(m):
                details.append(
                    f"{label} n={n}: {m} lands at ({c.kind},{c.rightmost_label}), "
                    f"expected ({kind},{index_of(m)})"
                )
            images.append(t)
        if len(set(images)) != len(images):
            details.append(f"{label} n={n}: images collide")
        tree_counts = _tree_counts_by_index(n)
        by_index = Counter(index_of(m) for m in members)
        for k in range(1, n + 1):
            if by_index.get(k, 0) != tree_counts.get((kind, k), 0):
                details.append(
                    f"{label} n={n} k={k}: {by_index.get(k, 0)} members vs "
                    f"{tree_counts.get((kind, k), 0)} trees"
                )
    return details


def check_bij_cud_b(n_max: int, golden_dir: str | None = None) -> list[str]:
    return _check_bijection_into_trees(
        n_max, "cud-b", bij.phi_cud_b, lambda cf: cf.cycles[-1].leader, "o", "cud-b"
    )


def check_bij_cud_d(n_max: int, golden_dir: str | None = None) -> list[str]:
    return _check_bijection_into_trees(
        n_max, "cud-d", bij.phi_cud_d, lambda cf: cf.cycles[-1].leader, "*", "cud-d"
    )


def check_bij_vs_b(n_max: int, golden_dir: str | None = None) -> list[str]:
    return _check_bijection_into_trees(
        n_max, "vs-b", bij.phi_vs_b, lambda p: p.window[0], "o", "vs-b"
    )


def check_bij_vs_d(n_max: int, golden_dir: str | None = None) -> list[str]:
    return _check_bijection_into_trees(
        n_max, "vs-d", bij.phi_vs_d, lambda p: -p.window[0], "*", "vs-d"
    )


def check_bij_fl(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        classes = fam.flip_classes(n)
        images = []
        for cls in classes:
            member_trees = {bij.tau_flip(SignedPerm(w)) for w in cls.members}
            if len(member_trees) != 1:
                details.append(f"fl n={n}: members of {cls.canon} map to different trees")
                continue
            t = member_trees.pop()
            c = tr.classify(t)
            want_kind = "o" if cls.smax > 0 else "*"
            if c.kind != want_kind or c.rightmost_label != abs(cls.smax):
                details.append(
                    f"fl n={n}: class {cls.canon} lands at ({c.kind},{c.rightmost_label}), "
                    f"expected ({want_kind},{abs(cls.smax)})"
                )
            images.append(t)
        if len(set(images)) != len(images):
            details.append(f"fl n={n}: class images collide")
        total_trees = sum(_tree_counts_by_index(n).values())
        if len(images) != total_trees:
            details.append(f"fl n={n}: {len(images)} classes vs {total_trees} trees")
    return details


def _path_labels(t) -> frozenset[int]:
    return frozenset(
        node.label for node in tr.rightmost_path(t) if isinstance(node, tr.Node)
    )


def check_cor_rightmost_cycle_min(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        for family, mapping in (("cud-b", bij.phi_cud_b), ("cud-d", bij.phi_cud_d)):
            for cf in fam.enumerate_family(family, n):
                want = frozenset(c.leader for c in cf.cycles)
                got = _path_labels(mapping(cf))
                if got != want:
                    details.append(f"{family} n={n}: {cf} path labels {sorted(got)}")
    return details


def check_cor_rightmost_ltr_min(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        for family, mapping in (("vs-b", bij.phi_vs_b), ("vs-d", bij.phi_vs_d)):
            for p in fam.enumerate_family(family, n):
                want = left_to_right_minima(p.abs_window())
                got = _path_labels(mapping(p))
                if got != want:
                    details.append(f"{family} n={n}: {p} path labels {sorted(got)}")
    return details


def check_lemma_emp_spk(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        for cls in fam.flip_classes(n):
            emp = tr.count_empty(bij.phi_f(cls))
            if emp != n - 2 * cls.spk + 1:
                details.append(f"n={n}: class {cls.canon} has emp {emp}, spk {cls.spk}")
    return details


def check_lemma_peak_leaf(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        for p in permutations(range(1, n + 1)):
            t = bij.algo3(p)

            def two_empty(s, acc):
                if s is tr.EMPTY or s.children is None:
                    return
                if s.children == (tr.EMPTY, tr.EMPTY):
                    acc.add(s.label)
                two_empty(s.children[0], acc)
                two_empty(s.children[1], acc)

            found: set[int] = set()
            two_empty(t, found)
            if found - {p[0]} != set(peak_values(p)):
                details.append(f"n={n} perm {p}: double-empty labels {sorted(found)}")
    return details


def check_knuth_flip_euler(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    euler = euler_numbers(n_max)
    for n in range(1, n_max + 1):
        classes = fam.unsigned_flip_classes(n)
        if len(classes) != euler[n - 1]:
            details.append(f"n={n}: {len(classes)} classes vs Euler number {euler[n - 1]}")
    if n_max >= 3:
        classes3 = {frozenset(c) for c in fam.unsigned_flip_classes(3)}
        want = {
            frozenset({(1, 2, 3), (3, 2, 1), (2, 3, 1), (1, 3, 2)}),
            frozenset({(2, 1, 3), (3, 1, 2)}),
        }
        if classes3 != want:
            details.append("n=3: class structure differs from the two known classes")
    return details


# ---------------------------------------------------------------------------
# recurrence-step checks

def _verify_step_partition(
    records: Iterable[fam.StepRecord],
    expected: dict[str, tuple[str, int, int, int]],
    target_sets: dict[tuple[str, int, int], set],
    label: str,
) -> list[str]:
    """Check case targets and statistic shifts, then exact coverage of each
    target set with no collisions."""
    details = []
    seen: dict[tuple[str, int, int], set] = {key: set() for key in target_sets}
    for rec in records:
        if rec.case not in expected:
            details.append(f"{label}: unexpected case {rec.case} for {rec.source}")
            continue
        family, t_n, t_index, shift = expected[rec.case]
        if (rec.target_family, rec.target_n, rec.target_index) != (family, t_n, t_index):
            details.append(
                f"{label}: {rec.source} sent to ({rec.target_family},{rec.target_n},"
                f"{rec.target_index}), expected ({family},{t_n},{t_index})"
            )
            continue
        if rec.stat_after - rec.stat_before != shift:
            details.append(
                f"{label}: {rec.source} shifts stat by {rec.stat_after - rec.stat_before},"
                f" expected {shift}"
            )
        bucket = seen[(family, t_n, t_index)]
        if rec.image in bucket:
            details.append(f"{label}: image {rec.image} hit twice")
        bucket.add(rec.image)
    for key, want in target_sets.items():
        got = seen[key]
        if got != want:
            missing = len(want - got)
            extra = len(got - want)
            details.append(
                f"{label}: target {key} covered with {missing} missing, {extra} extra"
            )
    return details


def _target_set(family: str, n: int, k: int) -> set:
    return set(fam.enumerate_indexed(family, n, k))


def check_recstep_cud(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            report = fam.recurrence_step_cud(n, k, "d")
            expected = {
                "i": ("cud-b", n - 1, k - 1, -1),
                "ii": ("cud-d", n, k - 1, 0),
            }
            targets = {
                ("cud-b", n - 1, k - 1): _target_set("cud-b", n - 1, k - 1),
                ("cud-d", n, k - 1): _target_set("cud-d", n, k - 1),
            }
            details += _verify_step_partition(
                report.records, expected, targets, f"cud-d n={n} k={k}"
            )
        for k in range(1, n):
            report = fam.recurrence_step_cud(n, k, "b")
            expected = {
                "i": ("cud-d", n - 1, k, 0),
                "ii": ("cud-b", n, k + 1, 0),
                "iii": ("cud-b", n, k + 1, 0),
            }
            targets = {
                ("cud-d", n - 1, k): _target_set("cud-d", n - 1, k),
                ("cud-b", n, k + 1): _target_set("cud-b", n, k + 1),
            }
            details += _verify_step_partition(
                report.records, expected, targets, f"cud-b n={n} k={k}"
            )
        bridge_sources = fam.enumerate_indexed("cud-b", n, n)
        bridge_images = {fam.psi_cud_bridge(cf).image for cf in bridge_sources}
        if bridge_images != _target_set("cud-d", n, n):
            details.append(f"cud bridge n={n}: images differ from the type-D family")
    return details


def check_recstep_vs(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            report = fam.recurrence_step_vs(n, k, "d")
            expected = {
                "1": ("vs-b", n - 1, k - 1, -1),
                "2": ("vs-d", n, k - 1, 0),
            }
            targets = {
                ("vs-b", n - 1, k - 1): _target_set("vs-b", n - 1, k - 1),
                ("vs-d", n, k - 1): _target_set("vs-d", n, k - 1),
            }
            details += _verify_step_partition(
                report.records, expected, targets, f"vs-d n={n} k={k}"
            )
        for k in range(1, n):
            report = fam.recurrence_step_vs(n, k, "b")
            expected = {
                "1": ("vs-d", n - 1, k, 0),
                "1b": ("vs-b", n, k + 1, 0),
                "2": ("vs-b", n, k + 1, 0),
            }
            targets = {
                ("vs-d", n - 1, k): _target_set("vs-d", n - 1, k),
                ("vs-b", n, k + 1): _target_set("vs-b", n, k + 1),
            }
            details += _verify_step_partition(
                report.records, expected, targets, f"vs-b n={n} k={k}"
            )
        bridge_sources = fam.enumerate_indexed("vs-b", n, n)
        bridge_images = {fam.psi_vs_bridge(p).image for p in bridge_sources}
        if bridge_images != _target_set("vs-d", n, n):
            details.append(f"vs bridge n={n}: images differ from the type-D family")
    return details


def check_smax_well_defined(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        try:
            for cls in fam.flip_classes(n):
                values = {stat_smax(w) for w in cls.members}
                if values != {cls.smax}:
                    details.append(f"n={n}: class {cls.canon} has smax values {values}")
        except ValueError as exc:
            details.append(f"n={n}: {exc}")
    return details


def check_spk_well_defined(n_max: int, golden_dir: str | None = None) -> list[str]:
    details = []
    for n in range(1, n_max + 1):
        try:
            for cls in fam.flip_classes(n):
                values = {stat_spk(SignedPerm(w)) for w in cls.members}
                if values != {cls.spk}:
                    details.append(f"n={n}: class {cls.canon} has spk values {values}")
        except ValueError as exc:
            details.append(f"n={n}: {exc}")
    return details


def check_report_emp_npk(n_max: int, golden_dir: str | None = None) -> list[str]:
    """Report-only: where does emp(tree image) equal n+1-2*npk per object?"""
    findings = []
    for n in range(1, n_max + 1):
        agree = 0
        total = 0
        for family, mapping in (("cud-b", bij.phi_cud_b), ("cud-d", bij.phi_cud_d)):
            for cf in fam.enumerate_family(family, n):
                emp = tr.count_empty(mapping(cf))
                total += 1
                if emp == n + 1 - 2 * stat_npk(cf):
                    agree += 1
        findings.append(f"n={n}: per-object identity holds for {agree}/{total} members")
    return findings


# ---------------------------------------------------------------------------
# registry

CHECKS: tuple[RegisteredCheck, ...] = (
    RegisteredCheck("table-arnold", "numeric double triangle matches the stored table", 5),
    RegisteredCheck("table-polys", "polynomial double triangle matches the stored table", 5),
    RegisteredCheck("poly-at-1", "polynomials evaluated at 1 give the numeric triangle", 10),
    RegisteredCheck("row-sums-springer", "row sums give the Springer numbers", 5),
    RegisteredCheck("hoffman-q", "t*Q_n equals the positive-side row sum", 10),
    RegisteredCheck("hoffman-p", "P_n - t*Q_n equals the negative-side row sum", 10),
    RegisteredCheck("entringer-alternating", "triangle entries count alternating permutations by first entry", 8),
    RegisteredCheck("snakes-arnold", "snake counts by first entry reproduce the triangle", 5),
    RegisteredCheck("thm-cud", "cycle-up-down npk polynomials reproduce the refined triangle", 7),
    RegisteredCheck("thm-vs", "valley-family neg polynomials reproduce the refined triangle", 7),
    RegisteredCheck("thm-fl", "flip-class spk polynomials reproduce the refined triangle", 6),
    RegisteredCheck("thm-trees", "tree emp polynomials reproduce the refined triangle", 7),
    RegisteredCheck("bij-cud-b", "type-B cycle map is an index-preserving bijection to empty-ended trees", 6),
    RegisteredCheck("bij-cud-d", "type-D cycle map is an index-preserving bijection to labelled-ended trees", 6),
    RegisteredCheck("bij-vs-b", "type-B valley map is an index-preserving bijection", 6),
    RegisteredCheck("bij-vs-d", "type-D valley map is an index-preserving bijection", 6),
    RegisteredCheck("bij-fl", "flip-class map is well defined and bijective", 6),
    RegisteredCheck("cor-rightmost-cycle-min", "rightmost-path labels are the cycle minima", 6),
    RegisteredCheck("cor-rightmost-ltr-min", "rightmost-path labels are the left-to-right minima", 6),
    RegisteredCheck("lemma-emp-spk", "emp equals n - 2*spk + 1 on every flip class", 6),
    RegisteredCheck("lemma-peak-leaf", "double-empty nodes of the min-split tree are the peaks", 7),
    RegisteredCheck("knuth-flip-euler", "unsigned flip classes are counted by Euler numbers", 7),
    RegisteredCheck("recstep-cud", "cycle-family one-step maps partition their targets", 6),
    RegisteredCheck("recstep-vs", "valley-family one-step maps partition their targets", 6),
    RegisteredCheck("smax-well-defined", "smax is constant on every flip class", 6),
    RegisteredCheck("spk-well-defined", "spk is constant on every flip class", 6),
    RegisteredCheck("report-emp-npk-perobject", "where the per-object emp/npk exponent identity holds", 6, report_only=True),
)

_CHECK_FUNCS: dict[str, Callable[..., list[str]]] = {
    "table-arnold": check_table_arnold,
    "table-polys": check_table_polys,
    "poly-at-1": check_poly_at_1,
    "row-sums-springer": check_row_sums_springer,
    "hoffman-q": check_hoffman_q,
    "hoffman-p": check_hoffman_p,
    "entringer-alternating": check_entringer_alternating,
    "snakes-arnold": check_snakes_arnold,
    "thm-cud": check_thm_cud,
    "thm-vs": check_thm_vs,
    "thm-fl": check_thm_fl,
    "thm-trees": check_thm_trees,
    "bij-cud-b": check_bij_cud_b,
    "bij-cud-d": check_bij_cud_d,
    "bij-vs-b": check_bij_vs_b,
    "bij-vs-d": check_bij_vs_d,
    "bij-fl": check_bij_fl,
    "cor-rightmost-cycle-min": check_cor_rightmost_cycle_min,
    "cor-rightmost-ltr-min": check_cor_rightmost_ltr_min,
    "lemma-emp-spk": check_lemma_emp_spk,
    "lemma-peak-leaf": check_lemma_peak_leaf,
    "knuth-flip-euler": check_knuth_flip_euler,
    "recstep-cud": check_recstep_cud,
    "recstep-vs": check_recstep_vs,
    "smax-well-defined": check_smax_well_defined,
    "spk-well-defined": check_spk_well_defined,
    "report-emp-npk-perobject": check_report_emp_npk,
}


def check_ids() -> tuple[str, ...]:
    return tuple(spec.check_id for spec in CHECKS)


def _spec(check_id: str) -> RegisteredCheck:
    for spec in CHECKS:
        if spec.check_id == check_id:
            return spec
    raise UnknownCheckError(f"unknown check {check_id!r}")


def verify(check_id: str, max_n: int | None = None, golden_dir: str | None = None) -> CheckResult:
    """Run one registered check up to max_n (its default ceiling if omitted)."""
    spec = _spec(check_id)
    n_max = spec.default_max_n if max_n is None else max_n
    if n_max < 1:
        raise SizeCapExceededError("max_n must be at least 1")
    start = time.perf_counter()
    details = _CHECK_FUNCS[check_id](n_max, golden_dir)
    elapsed = time.perf_counter() - start
    if spec.report_only:
        status = "report-only"
    else:
        status = "fail" if details else "pass"
    return CheckResult(check_id, (1, n_max), status, _clip(details), elapsed)


def verify_all(max_n: int | None = None, golden_dir: str | None = None) -> list[CheckResult]:
    """Run every registered check at its default ceiling, capped by max_n.
    Results come back in registry order regardless of execution order."""
    if max_n is not None and max_n < 1:
        raise SizeCapExceededError("max_n must be at least 1")
    plan = [
        (spec.check_id, spec.default_max_n if max_n is None else min(spec.default_max_n, max_n))
        for spec in CHECKS
    ]
    threads = int(os.environ.get("ARNOLD_THREADS", "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(verify, cid, n, golden_dir) for cid, n in plan]
            return [f.result() for f in futures]
    return [verify(cid, n, golden_dir) for cid, n in plan]
