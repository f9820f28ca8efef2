"""Dense permutation-group engine.

A GroupTable holds every element of a finite permutation group, indexed
0..order-1 with the identity at index 0.  All heavy operations (closure,
conjugacy, derived series, radical, quotients) work on element indices and
are vectorized over the image matrix; element sets are boolean masks.

Products compose right-to-left; enumeration is breadth-first over left
multiplication by the generators (generator-major within a layer), which
fixes a deterministic element order reproducible across runs.
"""

from __future__ import annotations

import threading
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadParameter,
    CapExceeded,
    EmptyGenerators,
    InternalInconsistency,
    NotASubgroup,
    NotNormal,
)
from .perm import Permutation, perm_order

DEFAULT_CAP = 20000

#: derived_subgroup uses all-pairs commutators below this size, a generating
#: subset above it (same subgroup either way, see derived_subgroup).
_ALL_PAIRS_LIMIT = 768


class GroupTable:
    """Fully enumerated permutation group with indexed elements."""

    def __init__(self, imgs: np.ndarray, generator_indices: Sequence[int]):
        self.imgs = imgs
        self.order = len(imgs)
        self.degree = imgs.shape[1]
        self.generator_indices = list(generator_indices)
        self._lock = threading.Lock()
        self._build_lookup()
        inv_imgs = np.empty_like(imgs)
        inv_imgs[np.arange(self.order)[:, None], imgs] = np.arange(self.degree)[None, :]
        self.inverse_of = self.lookup_images(inv_imgs)
        self.order_of = np.array([perm_order(imgs[i]) for i in range(self.order)])
        self._conj_cache: dict[int, np.ndarray] = {}
        self._solvable_cache: dict[bytes, bool] = {}
        self._classes: Optional[ClassPartition] = None
        self._radical: Optional[ElementSet] = None
        self._group_solvable: Optional[bool] = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_generators(cls, generators: Sequence[Permutation], cap: int = DEFAULT_CAP) -> "GroupTable":
        if not generators:
            raise EmptyGenerators("need at least one generator")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise BadParameter("generators must share a degree")
        if cap < 1:
            raise BadParameter("cap must be >= 1")
        gen_imgs = [np.asarray(g.images, dtype=np.int16) for g in generators]
        ident = np.arange(degree, dtype=np.int16)
        elems = [ident]
        index = {ident.tobytes(): 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in gen_imgs:
                prods = g[np.stack(frontier)]  # left multiplication, layer batch
                for row in prods:
                    k = row.tobytes()
                    if k not in index:
                        index[k] = len(elems)
                        elems.append(row)
                        nxt.append(row)
                        if len(elems) > cap:
                            raise CapExceeded(cap)
            frontier = nxt
        imgs = np.stack(elems)
        gen_idx = [index[g.tobytes()] for g in gen_imgs]
        return cls(imgs, gen_idx)

    def _build_lookup(self):
        # greedy base: fewest points whose images separate all elements
        n, d = self.order, self.degree
        base = []
        key = np.zeros(n, dtype=np.int64)
        distinct = 1
        while distinct < n:
            best, best_count = -1, distinct
            for p in range(d):
                c = len(np.unique(key * d + self.imgs[:, p]))
                if c > best_count:
                    best, best_count = p, c
                    if c == n:
                        break
            if best < 0:
                raise InternalInconsistency("image matrix contains duplicate rows")
            base.append(best)
            key = key * d + self.imgs[:, base[-1]]
            distinct = len(np.unique(key))
            if d ** len(base) >= 2 ** 62:
                raise InternalInconsistency("base key overflow")
        self.base = np.array(base, dtype=np.int64)
        order = np.argsort(key, kind="stable")
        self._sorted_keys = key[order]
        self._sorted_pos = order.astype(np.int32)

    # -- lookup and multiplication -----------------------------------------

    def _key_of(self, imgs: np.ndarray) -> np.ndarray:
        key = np.zeros(len(imgs), dtype=np.int64)
        for p in self.base:
            key = key * self.degree + imgs[:, p]
        return key

    def lookup_images(self, imgs: np.ndarray) -> np.ndarray:
        """Indices of image rows known to belong to the group."""
        pos = np.searchsorted(self._sorted_keys, self._key_of(imgs))
        return self._sorted_pos[pos].astype(np.int64)

    def find_permutation(self, perm: Permutation) -> int:
        """Index of an arbitrary permutation, or -1 when not a member."""
        if perm.degree != self.degree:
            return -1
        row = np.asarray(perm.images, dtype=np.int16)[None, :]
        pos = int(np.searchsorted(self._sorted_keys, self._key_of(row)[0]))
        if pos >= self.order:
            return -1
        idx = int(self._sorted_pos[pos])
        return idx if np.array_equal(self.imgs[idx], row[0]) else -1

    def permutation(self, i: int) -> Permutation:
        return Permutation(self.imgs[i])

    def elements(self) -> list[Permutation]:
        """All elements in index order (index 0 is the identity)."""
        return [self.permutation(i) for i in range(self.order)]

    def mul(self, i: int, j: int) -> int:
        prod = self.imgs[i][self.imgs[j]][None, :]
        return int(self.lookup_images(prod)[0])

    def mul_left(self, g: int, idx: np.ndarray) -> np.ndarray:
        """Indices of elem_g ∘ elem_j for each j in idx."""
        return self.lookup_images(self.imgs[g][self.imgs[idx]])

    def mul_right(self, idx: np.ndarray, g: int) -> np.ndarray:
        """Indices of elem_i ∘ elem_g for each i in idx."""
        return self.lookup_images(self.imgs[idx][:, self.imgs[g]])

    def conjugate_indices(self, g: int, idx: np.ndarray) -> np.ndarray:
        """Indices of g t g^-1 for each t in idx."""
        return self.mul_right(self.mul_left(g, idx), int(self.inverse_of[g]))

    def conj_perm(self, g: int) -> np.ndarray:
        """Full conjugation map t -> g t g^-1 as an index array (cached)."""
        with self._lock:
            cp = self._conj_cache.get(g)
        if cp is None:
            cp = self.conjugate_indices(g, np.arange(self.order))
            with self._lock:
                self._conj_cache[g] = cp
        return cp

    # -- closure -----------------------------------------------------------

    def closure_indices(self, seeds: Iterable[int], stop_above: Optional[int] = None) -> Optional[list[int]]:
        """Sorted indices of the subgroup generated by seeds.

        Breadth-first orbit of the identity under left multiplication by the
        seeds; positive words suffice in a finite group.  Returns None as soon
        as the size exceeds stop_above.
        """
        seeds = [int(s) for s in dict.fromkeys(seeds) if s != 0]
        if not seeds:
            return [0]
        gen_imgs = self.imgs[np.array(seeds)]
        frontier = self.imgs[np.array([0], dtype=np.int64)]
        keys_seen = {int(self._key_of(frontier)[0])}
        count = 1
        while len(frontier):
            new_rows = []
            for g in gen_imgs:
                cand = g[frontier]  # (m, d)
                keys = self._key_of(cand)
                for r, k in enumerate(keys.tolist()):
                    if k not in keys_seen:
                        keys_seen.add(k)
                        new_rows.append(cand[r])
                        count += 1
                        if stop_above is not None and count > stop_above:
                            return None
            frontier = np.stack(new_rows) if new_rows else np.empty((0, self.degree), dtype=self.imgs.dtype)
        pos = np.searchsorted(self._sorted_keys, np.fromiter(keys_seen, dtype=np.int64, count=len(keys_seen)))
        return sorted(self._sorted_pos[pos].tolist())

    # -- cached global properties ------------------------------------------

    def conjugacy_classes(self) -> "ClassPartition":
        if self._classes is None:
            self._classes = _compute_classes(self)
        return self._classes

    def solvable_radical_set(self) -> "ElementSet":
        if self._radical is None:
            self._radical = _compute_radical(self)
        return self._radical

    def is_group_solvable(self) -> bool:
        if self._group_solvable is None:
            full = ElementSet.full(self)
            full._gens = list(self.generator_indices)
            self._group_solvable = is_solvable(self, full)
        return self._group_solvable

    def involution_indices(self) -> np.ndarray:
        return np.where(self.order_of == 2)[0]

    def __repr__(self):
        return f"GroupTable(order={self.order}, degree={self.degree})"


class ElementSet:
    """Subset of one GroupTable's elements as a boolean mask."""

    def __init__(self, owner: GroupTable, mask: np.ndarray, is_subgroup: bool = False):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (owner.order,):
            raise BadParameter("mask length must equal group order")
        self.owner = owner
        self.mask = mask
        self.is_subgroup = is_subgroup
        self._gens: Optional[list[int]] = None  # generating subset, when known

    @classmethod
    def from_indices(cls, owner: GroupTable, indices: Iterable[int], is_subgroup: bool = False) -> "ElementSet":
        mask = np.zeros(owner.order, dtype=bool)
        mask[list(indices)] = True
        return cls(owner, mask, is_subgroup)

    @classmethod
    def full(cls, owner: GroupTable) -> "ElementSet":
        return cls(owner, np.ones(owner.order, dtype=bool), is_subgroup=True)

    @classmethod
    def trivial(cls, owner: GroupTable) -> "ElementSet":
        return cls.from_indices(owner, [0], is_subgroup=True)

    def indices(self) -> np.ndarray:
        return np.where(self.mask)[0]

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, i) -> bool:
        return bool(self.mask[int(i)])

    def __eq__(self, other) -> bool:
        return isinstance(other, ElementSet) and self.owner is other.owner and np.array_equal(self.mask, other.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.owner, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.owner, self.mask & other.mask)

    def issubset(self, other: "ElementSet") -> bool:
        return bool(np.all(~self.mask | other.mask))

    def fingerprint(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    def verify_subgroup(self) -> bool:
        """Full closure check: identity, products, inverses."""
        idx = self.indices()
        if len(idx) == 0 or not self.mask[0]:
            return False
        if self.owner.order % len(idx) != 0:
            return False
        if not self.mask[self.owner.inverse_of[idx]].all():
            return False
        for i in idx:
            if not self.mask[self.owner.mul_left(int(i), idx)].all():
                return False
        return True

    def __repr__(self):
        return f"ElementSet(size={len(self)}, subgroup={self.is_subgroup})"


class ClassPartition:
    """Conjugacy classes with per-element conjugator witnesses."""

    def __init__(self, class_of: np.ndarray, representatives: list[int], conjugator: np.ndarray):
        self.class_of = class_of
        self.representatives = representatives
        self.conjugator = conjugator  # w with rep^w = element (w x w^-1 form)
        self.sizes = np.bincount(class_of, minlength=len(representatives))

    @property
    def count(self) -> int:
        return len(self.representatives)

    def members(self, cid: int) -> np.ndarray:
        return np.where(self.class_of == cid)[0]


# -- spec operations ---------------------------------------------------------


def enumerate_group(generators: Sequence[Permutation], cap: int = DEFAULT_CAP) -> GroupTable:
    """Breadth-first closure of the generators; identity gets index 0."""
    return GroupTable.from_generators(generators, cap)


def subgroup_closure(table: GroupTable, seeds: Iterable[int]) -> ElementSet:
    """Smallest subgroup containing the seed elements."""
    seeds = [int(s) for s in seeds]
    if any(s < 0 or s >= table.order for s in seeds):
        raise BadParameter("seed index out of range")
    idx = table.closure_indices(seeds)
    out = ElementSet.from_indices(table, idx, is_subgroup=True)
    out._gens = sorted(dict.fromkeys(s for s in seeds if s != 0)) or [0]
    return out


def _generating_subset(table: GroupTable, indices: list[int]) -> list[int]:
    """Small deterministic generating subset of a known subgroup."""
    want = len(indices)
    gens: list[int] = []
    have = {0}
    for x in indices:
        if x in have:
            continue
        gens.append(x)
        have = set(table.closure_indices(gens))
        if len(have) == want:
            break
    return gens or [0]


def _require_subgroup(table: GroupTable, H: ElementSet):
    if not H.is_subgroup:
        if not H.verify_subgroup():
            raise NotASubgroup("element set is not a subgroup")
        H.is_subgroup = True


def derived_subgroup(table: GroupTable, H: ElementSet) -> ElementSet:
    """Subgroup generated by all commutators [a,b] with a,b in H.

    Small sets get the literal all-pairs closure.  Large sets first extract a
    generating subset g_1..g_k and close the conjugates of the generator
    commutators instead, which generates the same subgroup (the commutator
    subgroup is the normal closure of the generator commutators).
    """
    _require_subgroup(table, H)
    idx = H.indices()
    m = len(idx)
    if m == 1:
        return ElementSet.trivial(table)
    if m <= _ALL_PAIRS_LIMIT:
        comms = set()
        inv = table.inverse_of
        imgs = table.imgs
        for a in idx.tolist():
            ab = imgs[a][imgs[idx]]                       # a∘b for all b
            binv_ab = np.take_along_axis(imgs[inv[idx]], ab, axis=1)
            c = imgs[inv[a]][binv_ab]                     # a^-1 b^-1 a b
            comms.update(table.lookup_images(c).tolist())
        comms.discard(0)
        out = ElementSet.from_indices(table, table.closure_indices(comms), is_subgroup=True)
        out._gens = _generating_subset(table, sorted(out.indices().tolist()))
        return out
    gens = H._gens if H._gens else _generating_subset(table, idx.tolist())
    comms = set()
    for a in gens:
        for b in gens:
            ab = table.mul(a, b)
            ba = table.mul(b, a)
            comms.add(table.mul(int(table.inverse_of[ba]), ab))
    comms.discard(0)
    if not comms:
        return ElementSet.trivial(table)
    sub = _normal_closure_within(table, sorted(comms), gens)
    out = ElementSet.from_indices(table, sub, is_subgroup=True)
    out._gens = _generating_subset(table, sub)
    return out


def _normal_closure_within(table: GroupTable, seeds: list[int], ambient_gens: list[int]) -> list[int]:
    """Smallest subgroup containing seeds and closed under conjugation by ambient_gens."""
    gens = list(seeds)
    cur = table.closure_indices(gens)
    while True:
        cur_arr = np.array(cur)
        inset = np.zeros(table.order, dtype=bool)
        inset[cur_arr] = True
        new = set()
        for g in ambient_gens:
            img = table.conjugate_indices(int(g), cur_arr)
            out = img[~inset[img]]
            new.update(out.tolist())
        if not new:
            return cur
        gens.extend(sorted(new)[:4])
        cur = table.closure_indices(gens)


def is_solvable(table: GroupTable, H: ElementSet) -> bool:
    """Whether the derived series of H reaches the trivial subgroup."""
    _require_subgroup(table, H)
    key = H.fingerprint()
    cached = table._solvable_cache.get(key)
    if cached is not None:
        return cached
    cur = H
    while True:
        if len(cur) == 1:
            verdict = True
            break
        nxt = derived_subgroup(table, cur)
        if len(nxt) == len(cur):
            verdict = False
            break
        cur = nxt
    table._solvable_cache[key] = verdict
    return verdict


def _compute_classes(table: GroupTable) -> ClassPartition:
    gens = table.generator_indices
    cps = [table.conj_perm(g) for g in gens]
    class_of = np.full(table.order, -1, dtype=np.int64)
    conjor = np.zeros(table.order, dtype=np.int64)
    reps = []
    for r in range(table.order):
        if class_of[r] >= 0:
            continue
        cid = len(reps)
        reps.append(r)
        class_of[r] = cid
        stack = [r]
        while stack:
            t = stack.pop()
            for g, cp in zip(gens, cps):
                u = int(cp[t])
                if class_of[u] < 0:
                    class_of[u] = cid
                    conjor[u] = table.mul(g, int(conjor[t]))
                    stack.append(u)
    return ClassPartition(class_of, reps, conjor)


def conjugacy_classes(table: GroupTable) -> ClassPartition:
    """Orbits of the conjugation action; representative = least index per class."""
    return table.conjugacy_classes()


def _compute_radical(table: GroupTable) -> ElementSet:
    """Union of the classes whose normal closure is solvable.

    x lies in the solvable radical exactly when its normal closure <x^G> is
    solvable, and that matches the pairwise description { x : all <x,y>
    solvable } by the radical characterization the rest of the library leans
    on.  Verified as a normal solvable subgroup before returning.
    """
    classes = table.conjugacy_classes()
    rad = np.zeros(table.order, dtype=bool)
    rad[0] = True
    for rep in classes.representatives:
        if rep == 0 or rad[rep]:
            continue
        sub = _normal_closure_within(table, [rep], table.generator_indices)
        H = ElementSet.from_indices(table, sub, is_subgroup=True)
        H._gens = _generating_subset(table, sub)
        if is_solvable(table, H):
            rad |= H.mask
    out = ElementSet(table, rad, is_subgroup=True)
    if not out.verify_subgroup():
        raise InternalInconsistency("radical candidate is not a subgroup")
    for g in table.generator_indices:
        if not np.array_equal(np.sort(table.conjugate_indices(g, out.indices())), out.indices()):
            raise InternalInconsistency("radical candidate is not normal")
    out._gens = _generating_subset(table, out.indices().tolist())
    if not is_solvable(table, out):
        raise InternalInconsistency("radical candidate is not solvable")
    return out


def solvable_radical(table: GroupTable) -> ElementSet:
    """R(G): the elements whose solvabilizer is the whole group."""
    return table.solvable_radical_set()


def quotient_by(table: GroupTable, N: ElementSet) -> GroupTable:
    """Permutation table of G/N via the action on left cosets of N."""
    _require_subgroup(table, N)
    n_idx = N.indices()
    for g in table.generator_indices:
        if not np.array_equal(np.sort(table.conjugate_indices(g, n_idx)), n_idx):
            raise NotNormal("subgroup is not normal")
    coset_of = np.full(table.order, -1, dtype=np.int64)
    reps = []
    for x in range(table.order):
        if coset_of[x] >= 0:
            continue
        coset_of[table.lookup_images(table.imgs[x][table.imgs[n_idx]])] = len(reps)
        reps.append(x)
    k = len(reps)
    qgens = []
    for g in table.generator_indices:
        arr = np.array([coset_of[table.mul(g, r)] for r in reps])
        qgens.append(Permutation(arr))
    qt = GroupTable.from_generators(qgens, cap=max(k, 1))
    if qt.order != k:
        raise InternalInconsistency("coset action kernel is larger than N")
    return qt


def index_two_subgroups(table: GroupTable) -> list[ElementSet]:
    """All index-2 subgroups, via the subgroup generated by squares and commutators."""
    squares = np.take_along_axis(table.imgs, table.imgs, axis=1)
    seed = set(table.lookup_images(squares).tolist())
    for a in table.generator_indices:
        for b in table.generator_indices:
            ab = table.mul(a, b)
            ba = table.mul(b, a)
            seed.add(table.mul(int(table.inverse_of[ba]), ab))
    seed.discard(0)
    S = table.closure_indices(sorted(seed))
    k = table.order // len(S)
    if k == 1:
        return []
    s_arr = np.array(S)
    coset_of = np.full(table.order, -1, dtype=np.int64)
    reps = []
    for x in range(table.order):
        if coset_of[x] >= 0:
            continue
        coset_of[table.lookup_images(table.imgs[x][table.imgs[s_arr]])] = len(reps)
        reps.append(x)
    qmul = [[int(coset_of[table.mul(reps[i], reps[j])]) for j in range(k)] for i in range(k)]
    out = []
    import itertools

    for combo in itertools.combinations(range(1, k), k // 2 - 1):
        sub = {0, *combo}
        if all(qmul[a][b] in sub for a in sub for b in sub):
            mask = np.isin(coset_of, list(sub))
            es = ElementSet(table, mask, is_subgroup=True)
            es._gens = _generating_subset(table, np.where(mask)[0].tolist())
            out.append(es)
    return out
