"""Solvabilizer sets, the maximal-solvable census, and cover-instance reduction.

Sol(x) = { y : <x,y> is solvable }.  It is computed once per conjugacy class
representative by pairwise closure (with two accelerations that change
nothing about the result: a solvable <x,y> marks all of its elements as
members at once, and any closure passing |G|/2 is the whole group, which is
nonsolvable whenever G is).  Every other solvabilizer is materialized by
conjugation equivariance: Sol(g x g^-1) = g Sol(x) g^-1.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import GroupSolvable, InfeasibleUniverse, InternalInconsistency, NotTwoGenerated
from .group import (
    ClassPartition,
    ElementSet,
    GroupTable,
    _generating_subset,
    is_solvable,
)

_PRIMES = frozenset(
    p for p in range(2, 20000) if p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))
)


def _sol_of_rep(table: GroupTable, x: int) -> np.ndarray:
    """Sol(x) as a boolean mask, by pairwise subgroup closure."""
    n = table.order
    group_nonsolvable = not table.is_group_solvable()
    half = n // 2 if group_nonsolvable else None
    sol = np.zeros(n, dtype=bool)
    sol[table.closure_indices([x])] = True
    inv = table.inverse_of
    known_out = np.zeros(n, dtype=bool)
    for y in range(1, n):
        if sol[y]:
            continue
        if known_out[inv[y]]:
            known_out[y] = True  # <x,y> = <x,y^-1>
            continue
        H = table.closure_indices([x, y], stop_above=half)
        if H is None:
            known_out[y] = True
            continue
        hs = ElementSet.from_indices(table, H, is_subgroup=True)
        hs._gens = [x, y]
        if is_solvable(table, hs):
            sol[H] = True
        else:
            known_out[y] = True
    return sol


class SolvabilizerIncidence:
    """Per-class solvabilizer sets with conjugation expansion on demand.

    Class representatives are computed lazily: verifying a certificate only
    touches the classes of its elements, while the covering pipeline pulls
    in exactly the classes of the universe targets.
    """

    def __init__(self, table: GroupTable):
        self.table = table
        self.classes: ClassPartition = table.conjugacy_classes()
        self.radical: ElementSet = table.solvable_radical_set()
        self._rep_sol: dict[int, np.ndarray] = {}
        self._sol_cache: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    def rep_sol(self, cid: int) -> np.ndarray:
        mask = self._rep_sol.get(cid)
        if mask is None:
            rep = self.classes.representatives[cid]
            if rep in self.radical:
                mask = np.ones(self.table.order, dtype=bool)
            else:
                mask = _sol_of_rep(self.table, rep)
            with self._lock:
                self._rep_sol[cid] = mask
        return mask

    def precompute_all(self, jobs: int = 1):
        """Materialize every class (optionally across threads; results identical)."""
        todo = [cid for cid in range(self.classes.count) if cid not in self._rep_sol]
        if jobs > 1 and len(todo) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                list(pool.map(self.rep_sol, todo))
        else:
            for cid in todo:
                self.rep_sol(cid)

    def sol(self, x: int) -> np.ndarray:
        """Sol(x) mask for any element, via Sol(x) = w Sol(rep) w^-1."""
        x = int(x)
        cached = self._sol_cache.get(x)
        if cached is not None:
            return cached
        cid = int(self.classes.class_of[x])
        rep_mask = self.rep_sol(cid)
        w = int(self.classes.conjugator[x])
        if w == 0:
            mask = rep_mask
        else:
            mask = np.zeros(self.table.order, dtype=bool)
            mask[self.table.conjugate_indices(w, np.where(rep_mask)[0])] = True
        self._sol_cache[x] = mask
        return mask

    def sol_set(self, x: int) -> ElementSet:
        return ElementSet(self.table, self.sol(x).copy())

    def sol_size_of_class(self, cid: int) -> int:
        return int(self.rep_sol(cid).sum())


def sol_of(table: GroupTable, x: int) -> ElementSet:
    """Solvabilizer of one element (computed through the shared incidence)."""
    return sol_incidence(table).sol_set(x)


def sol_incidence(table: GroupTable, jobs: int = 1) -> SolvabilizerIncidence:
    """Incidence structure, cached on the table; jobs > 1 prefetches every class."""
    inc = getattr(table, "_incidence", None)
    if inc is None:
        inc = SolvabilizerIncidence(table)
        table._incidence = inc
    if jobs > 1:
        inc.precompute_all(jobs)
    return inc


def union_check(incidence: SolvabilizerIncidence, involutions_only: bool = False) -> bool:
    """Whether the solvabilizers of the (chosen) nonradical elements cover G."""
    table = incidence.table
    union = np.zeros(table.order, dtype=bool)
    gens = table.generator_indices
    for cid, rep in enumerate(incidence.classes.representatives):
        if rep == 0 or rep in incidence.radical:
            continue
        if involutions_only and table.order_of[rep] != 2:
            continue
        # close the rep's solvabilizer under conjugation = union over the class
        mask = incidence.rep_sol(cid).copy()
        changed = True
        while changed:
            changed = False
            idx = np.where(mask)[0]
            for g in gens:
                img = table.conjugate_indices(g, idx)
                fresh = img[~mask[img]]
                if len(fresh):
                    mask[fresh] = True
                    changed = True
        union |= mask
        if union.all():
            return True
    return bool(union.all())


# -- maximal solvable census ---------------------------------------------------


@dataclass
class MaximalSolvableCensus:
    subgroups: list[ElementSet]
    class_of_subgroup: list[int]
    class_orders: list[int]          # |H| for each conjugacy class of subgroups
    class_counts: list[int]          # number of conjugates in each class

    def membership_counts(self, x: int) -> dict[int, int]:
        """How many census members of each subgroup order contain x."""
        out: dict[int, int] = {}
        for H in self.subgroups:
            if x in H:
                out[len(H)] = out.get(len(H), 0) + 1
        return out

    def union_containing(self, x: int) -> np.ndarray:
        table = self.subgroups[0].owner
        mask = np.zeros(table.order, dtype=bool)
        for H in self.subgroups:
            if x in H:
                mask |= H.mask
        return mask


def maximal_solvable_subgroups(table: GroupTable, warn: bool = True) -> MaximalSolvableCensus:
    """Census of the maximal solvable subgroups.

    Seeds are the distinct solvable <rep, y> subgroups seen by the incidence
    computation; one seed per conjugacy orbit is greedily extended (adjoin the
    smallest index that keeps the extension solvable, restarting the scan after
    each success), and the maximal results are saturated under conjugation.
    """
    if table.is_group_solvable():
        full = ElementSet.full(table)
        return MaximalSolvableCensus([full], [0], [table.order], [1])
    inc = sol_incidence(table)
    if len(inc.radical) > 1 and warn:
        import warnings

        warnings.warn("census on a group with nontrivial radical", stacklevel=2)
    n = table.order
    seeds: dict[bytes, list[int]] = {}
    for cid, rep in enumerate(inc.classes.representatives):
        if rep == 0 or rep in inc.radical:
            continue
        for y in np.where(inc.rep_sol(cid))[0].tolist():
            if y == 0:
                continue
            H = table.closure_indices([rep, y])
            fp = _fingerprint(n, H)
            if fp not in seeds:
                seeds[fp] = H
    seed_reps = _orbit_representatives(table, list(seeds.values()))
    maximal: dict[bytes, list[int]] = {}
    for seed in seed_reps:
        ext = _extend_to_maximal_solvable(table, seed)
        maximal[_fingerprint(n, ext)] = ext
    # saturate under conjugation, then classify
    subgroups: list[ElementSet] = []
    class_of: list[int] = []
    class_orders: list[int] = []
    class_counts: list[int] = []
    seen: set[bytes] = set()
    for fp in sorted(maximal):
        if fp in seen:
            continue
        orbit = _conjugation_orbit(table, maximal[fp])
        cid = len(class_orders)
        members = sorted(orbit.values(), key=lambda idx: tuple(idx))
        for idx in members:
            es = ElementSet.from_indices(table, idx, is_subgroup=True)
            subgroups.append(es)
            class_of.append(cid)
        class_orders.append(len(members[0]))
        class_counts.append(len(members))
        seen.update(orbit.keys())
    return MaximalSolvableCensus(subgroups, class_of, class_orders, class_counts)


def _fingerprint(n: int, indices: list[int]) -> bytes:
    mask = np.zeros(n, dtype=bool)
    mask[indices] = True
    return np.packbits(mask).tobytes()


def _conjugation_orbit(table: GroupTable, indices: list[int]) -> dict[bytes, list[int]]:
    orbit = {_fingerprint(table.order, indices): sorted(indices)}
    stack = [sorted(indices)]
    while stack:
        cur = np.array(stack.pop())
        for g in table.generator_indices:
            img = sorted(table.conjugate_indices(g, cur).tolist())
            fp = _fingerprint(table.order, img)
            if fp not in orbit:
                orbit[fp] = img
                stack.append(img)
    return orbit


def _orbit_representatives(table: GroupTable, subgroup_lists: list[list[int]]) -> list[list[int]]:
    reps, seen = [], set()
    for idx in sorted(subgroup_lists, key=lambda l: (len(l), l)):
        fp = _fingerprint(table.order, idx)
        if fp in seen:
            continue
        reps.append(idx)
        seen.update(_conjugation_orbit(table, idx).keys())
    return reps


def _extend_to_maximal_solvable(table: GroupTable, seed: list[int]) -> list[int]:
    n = table.order
    group_nonsolvable = not table.is_group_solvable()
    cur = sorted(seed)
    gens = None
    in_cur = set(cur)
    failed: set[int] = set()  # nonsolvable adjunctions stay nonsolvable as cur grows
    restart = True
    while restart:
        restart = False
        if gens is None:
            gens = _generating_subset(table, cur)
        for g in range(1, n):
            if g in in_cur or g in failed:
                continue
            H2 = table.closure_indices(gens + [g], stop_above=n // 2 if group_nonsolvable else None)
            if H2 is None:
                failed.add(g)
                continue
            es = ElementSet.from_indices(table, H2, is_subgroup=True)
            es._gens = gens + [g]
            if is_solvable(table, es):
                cur = H2
                in_cur = set(cur)
                gens = gens + [g]
                restart = True
                break
            failed.add(g)
    return cur


# -- cover instance reduction ---------------------------------------------------


@dataclass
class Candidate:
    element: int
    order: int
    is_involution: bool
    class_id: int
    row: int  # coverage bitmask over universe positions


@dataclass
class CoverInstance:
    universe: list[int]              # canonical generator per maximal cyclic subgroup
    target_class: list[int]          # conjugation orbit id per universe entry
    candidates: list[Candidate]
    involutions_only: bool
    alpha_floor: int = 0
    #: candidate classes are whole conjugation orbits of an instance symmetry;
    #: only then may the solver restrict its first pick to class representatives
    conjugation_symmetric: bool = False
    notes: list[str] = field(default_factory=list)
    merged_into: dict[int, int] = field(default_factory=dict)  # dropped elem -> kept elem

    @property
    def size(self) -> int:
        return len(self.universe)

    def full_mask(self) -> int:
        return (1 << len(self.universe)) - 1

    def feasible(self) -> bool:
        m = 0
        for c in self.candidates:
            m |= c.row
        return m == self.full_mask()


def maximal_cyclic_generators(table: GroupTable) -> list[int]:
    """Canonical generator (least index among generators) per maximal cyclic subgroup."""
    n = table.order
    by_subgroup: dict[bytes, int] = {}
    masks: dict[bytes, int] = {}
    for x in range(1, n):
        idx = table.closure_indices([x])
        fp = _fingerprint(n, idx)
        if fp not in by_subgroup:
            m = 0
            for t in idx:
                m |= 1 << t
            masks[fp] = m
            best = x
            size = len(idx)
            for t in idx:
                if table.order_of[t] == size and t < best:
                    best = t
            by_subgroup[fp] = best
    items = list(masks.items())
    out = []
    for fp, m in items:
        if any(fp2 != fp and (m | m2) == m2 for fp2, m2 in items):
            continue  # strictly inside a bigger cyclic subgroup
        out.append(by_subgroup[fp])
    return sorted(out)


def reduce_instance(incidence: SolvabilizerIncidence, involutions_only: bool = False,
                    prune_dominated: bool = True) -> CoverInstance:
    """Reduce covering G to an exact set-cover instance.

    Universe: one canonical generator per maximal cyclic subgroup not inside
    the radical (covering a generator covers its whole cyclic group, and
    radical targets lie in every solvabilizer).  Candidates: prime-order
    nonradical elements (Sol(x) never shrinks under x -> x^n, so a cover maps
    to a no-larger prime-order cover), or just the involutions.  Identical
    coverage rows are merged and, unless disabled, dominated candidates are
    dropped (both preserve the optimum).
    """
    table = incidence.table
    if table.is_group_solvable():
        raise GroupSolvable("covering numbers are undefined for solvable groups")
    notes = []
    rad_mask = incidence.radical.mask
    universe = maximal_cyclic_generators(table)
    kept_universe = [t for t in universe if not rad_mask[t]]
    if len(kept_universe) != len(universe):
        notes.append(f"universe: dropped {len(universe) - len(kept_universe)} radical targets")
    universe = kept_universe
    orders = table.order_of
    if involutions_only:
        cand_elems = [x for x in range(1, table.order) if orders[x] == 2 and not rad_mask[x]]
    else:
        cand_elems = [x for x in range(1, table.order) if orders[x] in _PRIMES and not rad_mask[x]]
    notes.append(f"universe {len(universe)} maximal cyclic targets; raw candidates {len(cand_elems)}")
    # coverage rows via columns: t in Sol(x) iff x in Sol(t)
    rows = {x: 0 for x in cand_elems}
    for ui, t in enumerate(universe):
        sol_t = incidence.sol(t)
        bit = 1 << ui
        for x in cand_elems:
            if sol_t[x]:
                rows[x] |= bit
    classes = incidence.classes
    # dedupe identical rows (keep least element), then drop dominated rows
    by_row: dict[int, int] = {}
    merged: dict[int, int] = {}
    for x in cand_elems:
        r = rows[x]
        if r not in by_row:
            by_row[r] = x
        else:
            merged[x] = by_row[r]
    uniq = sorted(by_row.items(), key=lambda kv: (-bin(kv[0]).count("1"), kv[1]))
    if prune_dominated:
        kept: list[tuple[int, int]] = []
        for r, x in uniq:
            dominator = next((x2 for r2, x2 in kept if (r | r2) == r2), None)
            if dominator is None:
                kept.append((r, x))
            else:
                merged[x] = dominator
    else:
        kept = uniq
    notes.append(f"candidates after dedupe {len(uniq)}, after dominance pruning {len(kept)}")
    candidates = [
        Candidate(x, int(orders[x]), orders[x] == 2, int(classes.class_of[x]), r)
        for r, x in sorted(kept, key=lambda rx: rx[1])
    ]
    target_class = _target_orbits(table, universe)
    inst = CoverInstance(
        universe=universe,
        target_class=target_class,
        candidates=candidates,
        involutions_only=involutions_only,
        alpha_floor=3,
        conjugation_symmetric=True,
        notes=notes,
        merged_into=merged,
    )
    if not inst.feasible():
        if involutions_only:
            raise InfeasibleUniverse("some target is covered by no involution")
        raise InternalInconsistency("unrestricted instance must be feasible")
    return inst


def _target_orbits(table: GroupTable, universe: list[int]) -> list[int]:
    """Conjugation-orbit id of each universe target's cyclic subgroup."""
    subs = {ui: table.closure_indices([t]) for ui, t in enumerate(universe)}
    fp_to_ui = {_fingerprint(table.order, idx): ui for ui, idx in subs.items()}
    out = [-1] * len(universe)
    nxt = 0
    for ui in range(len(universe)):
        if out[ui] >= 0:
            continue
        for fp in _conjugation_orbit(table, subs[ui]):
            hit = fp_to_ui.get(fp)
            if hit is not None:
                out[hit] = nxt
        nxt += 1
    return out


# -- clique numbers -------------------------------------------------------------


@dataclass
class CliqueResult:
    lower: int
    upper: int
    witness: list[int]

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __int__(self) -> int:
        if not self.exact:
            raise ValueError("clique bound is an interval")
        return self.lower


def mu_s(table: GroupTable, node_limit: int = 10 ** 7, time_limit: float = 60.0) -> CliqueResult:
    """Largest set of pairwise non-solvabilized elements (max clique)."""
    inc = sol_incidence(table)
    rad = inc.radical.mask
    verts = [x for x in range(1, table.order) if not rad[x]]
    adj = {}
    for x in verts:
        sol_x = inc.sol(x)
        m = 0
        for y in verts:
            if y != x and not sol_x[y]:
                m |= 1 << y
        adj[x] = m
    return _max_clique(verts, adj, node_limit, time_limit)


def mu_pairwise_generators(table: GroupTable, node_limit: int = 10 ** 7, time_limit: float = 60.0) -> CliqueResult:
    """Max clique of the pairwise-generation graph (<x,y> = G)."""
    n = table.order
    verts = list(range(1, n))
    adj = {x: 0 for x in verts}
    found_any = False
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if table.closure_indices([x, y], stop_above=n // 2) is None:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
                found_any = True
    if not found_any:
        raise NotTwoGenerated("no pair of elements generates the group")
    return _max_clique(verts, adj, node_limit, time_limit)


def pairwise_generates(table: GroupTable, elements: list[int]) -> bool:
    n = table.order
    for i, x in enumerate(elements):
        for y in elements[i + 1:]:
            if table.closure_indices([x, y], stop_above=n // 2) is not None:
                return False
    return True


def _max_clique(verts: list[int], adj: dict[int, int], node_limit: int, time_limit: float) -> CliqueResult:
    """Tomita-style branch and bound with a greedy-coloring bound."""
    deadline = time.monotonic() + time_limit
    best: list[int] = []
    nodes = [0]
    timeout = [False]

    def color_sort(P: int):
        order = []
        cnum = 0
        Q = P
        while Q:
            cnum += 1
            avail = Q
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                order.append((v, cnum))
                Q &= ~(1 << v)
                avail &= ~adj.get(v, 0)
        return order

    root_bound = 0

    def expand(P: int, clique: list[int]):
        nodes[0] += 1
        if nodes[0] > node_limit or time.monotonic() > deadline:
            timeout[0] = True
            return
        order = color_sort(P)
        for v, c in reversed(order):
            if timeout[0]:
                return
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            expand(P & adj.get(v, 0) & ((1 << v) - 1), clique)
            if len(clique) > len(best):
                best[:] = clique
            clique.pop()
            P &= ~(1 << v)

    full = 0
    for v in verts:
        full |= 1 << v
    root_bound = max((c for _, c in color_sort(full)), default=0)
    expand(full, [])
    upper = root_bound if timeout[0] else len(best)
    return CliqueResult(lower=len(best), upper=max(upper, len(best)), witness=sorted(best))
