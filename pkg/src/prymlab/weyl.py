"""Signed permutations and the reflection groups they generate.

An element acts on the signed indices {-n, ..., -1, 1, ..., n} and commutes
with negation, so it is stored by the images of the positive indices alone.
Composition follows function application: ``(w * v)(j) == w(v(j))``.

The weight orbits that drive the covering constructions are realised as
concrete label sets:

* vector labels -- the signed indices themselves (orbit size ``2n``);
* spinor labels -- subsets of ``{1..n}``, one per sign pattern of the
  half-sum weight (orbit size ``2**n``);
* pair labels -- the unordered pairs ``{j, -j}`` (orbit size ``n``);
* parity labels -- even/odd subset size, a two-element quotient;
* spinor-class labels -- unordered pairs ``{A, complement(A)}``.

Text form used by the CLI: a signed permutation is the list of images of
``1..n``, e.g. ``[-1, 2, 3]`` for the sign flip of the first index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import RankError

RANK_MAX = 8
CLASSIFY_RANK_MAX = 6


@dataclass(frozen=True)
class SignedPerm:
    """A bijection of {+-1..+-n} commuting with negation."""

    n: int
    image: tuple

    def __post_init__(self):
        if not 1 <= self.n <= RANK_MAX:
            raise RankError(f"rank must be in 1..{RANK_MAX}, got {self.n}")
        if len(self.image) != self.n:
            raise ValueError("image must list the images of 1..n")
        if sorted(abs(v) for v in self.image) != list(range(1, self.n + 1)):
            raise ValueError(f"not a signed permutation: {self.image!r}")

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_list(cls, values) -> "SignedPerm":
        values = [int(v) for v in values]
        return cls(len(values), tuple(values))

    def to_list(self) -> list:
        return list(self.image)

    def __call__(self, j: int) -> int:
        if j > 0:
            return self.image[j - 1]
        return -self.image[-j - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        if self.n != other.n:
            raise ValueError("rank mismatch in composition")
        return SignedPerm(self.n, tuple(self(v) for v in other.image))

    def inverse(self) -> "SignedPerm":
        img = [0] * self.n
        for j in range(1, self.n + 1):
            v = self.image[j - 1]
            if v > 0:
                img[v - 1] = j
            else:
                img[-v - 1] = -j
        return SignedPerm(self.n, tuple(img))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.n + 1))

    def neg_count(self) -> int:
        """Number of positive indices sent to negative ones."""
        return sum(1 for v in self.image if v < 0)

    def __repr__(self):
        return f"SignedPerm({list(self.image)})"


def commutator(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class Root:
    """A short root (one index) or long root (two indices, relative sign).

    ``Root("short", j)`` is the sign flip of index ``j``;
    ``Root("long", j, k, sign)`` is ``e_j + sign*e_k`` with ``j < k``.
    """

    kind: str
    j: int
    k: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.kind not in ("short", "long"):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.j < 1:
            raise ValueError("indices are 1-based")
        if self.kind == "short":
            if self.k != 0:
                raise ValueError("short roots carry a single index")
        else:
            if self.k < 1 or self.k == self.j:
                raise ValueError("long roots need two distinct indices")
            if self.sign not in (1, -1):
                raise ValueError("long root sign must be +-1")


def short_root(j: int) -> Root:
    return Root("short", j)


def long_root(j: int, k: int, sign: int) -> Root:
    if j > k:
        j, k = k, j
    return Root("long", j, k, sign)


def all_roots(n: int, kinds=("short", "long")) -> list:
    roots = []
    if "short" in kinds:
        roots.extend(short_root(j) for j in range(1, n + 1))
    if "long" in kinds:
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                roots.append(long_root(j, k, -1))
                roots.append(long_root(j, k, +1))
    return roots


def reflection(root: Root, n: int) -> SignedPerm:
    """The reflection attached to a root, as a signed permutation.

    A short root flips its index; ``e_j - e_k`` swaps ``j`` and ``k``;
    ``e_j + e_k`` swaps them with a sign flip.
    """
    if root.j > n or (root.kind == "long" and root.k > n):
        raise RankError(f"root {root} does not fit in rank {n}")
    img = list(range(1, n + 1))
    if root.kind == "short":
        img[root.j - 1] = -root.j
    elif root.sign == -1:
        img[root.j - 1] = root.k
        img[root.k - 1] = root.j
    else:
        img[root.j - 1] = -root.k
        img[root.k - 1] = -root.j
    return SignedPerm(n, tuple(img))


def reflection_kind(w: SignedPerm):
    """Classify ``w`` as a reflection: returns ("short", root), ("long", root)
    or None."""
    moved = [j for j in range(1, w.n + 1) if w(j) != j]
    if len(moved) == 1:
        j = moved[0]
        if w(j) == -j:
            return ("short", short_root(j))
        return None
    if len(moved) == 2:
        j, k = moved
        if w(j) == k and w(k) == j:
            return ("long", long_root(j, k, -1))
        if w(j) == -k and w(k) == -j:
            return ("long", long_root(j, k, +1))
    return None


# ---------------------------------------------------------------------------
# orbit labels


class OrbitKind(str, Enum):
    VECTOR = "vector"
    SPINOR = "spinor"
    PAIR_CLASS = "pairclass"
    PARITY = "parity"
    SPINOR_CLASS = "spinorclass"


@dataclass(frozen=True)
class OrbitLabel:
    kind: OrbitKind
    value: object

    def __repr__(self):
        return f"OrbitLabel({self.kind.value}, {self.value!r})"


def vector_label(j: int) -> OrbitLabel:
    if j == 0:
        raise ValueError("vector labels are nonzero signed indices")
    return OrbitLabel(OrbitKind.VECTOR, j)


def spinor_label(subset) -> OrbitLabel:
    return OrbitLabel(OrbitKind.SPINOR, tuple(sorted(set(subset))))


def pair_label(j: int) -> OrbitLabel:
    if j < 1:
        raise ValueError("pair labels are positive indices")
    return OrbitLabel(OrbitKind.PAIR_CLASS, j)


def parity_label(parity: int) -> OrbitLabel:
    # 0 = even subset size, 1 = odd
    return OrbitLabel(OrbitKind.PARITY, parity % 2)


def _mask(subset, n: int) -> int:
    m = 0
    for j in subset:
        m |= 1 << (j - 1)
    return m


def _unmask(mask: int) -> tuple:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def spinor_class_label(subset, n: int) -> OrbitLabel:
    a = _mask(subset, n)
    b = ((1 << n) - 1) ^ a
    rep = min(a, b)
    return OrbitLabel(OrbitKind.SPINOR_CLASS, (_unmask(rep), _unmask(max(a, b))))


@lru_cache(maxsize=None)
def orbit_labels(kind: OrbitKind, n: int) -> tuple:
    """Canonical ordered labels of a weight orbit.

    Vector order is ``1, -1, 2, -2, ..., n, -n``; spinor subsets come in
    binary mask order (bit ``j-1`` set iff ``j`` is in the subset). These
    orders fix every matrix in the package bit-for-bit.
    """
    kind = OrbitKind(kind)
    if kind is OrbitKind.VECTOR:
        out = []
        for j in range(1, n + 1):
            out.extend((vector_label(j), vector_label(-j)))
        return tuple(out)
    if kind is OrbitKind.SPINOR:
        return tuple(spinor_label(_unmask(m)) for m in range(1 << n))
    if kind is OrbitKind.PAIR_CLASS:
        return tuple(pair_label(j) for j in range(1, n + 1))
    if kind is OrbitKind.PARITY:
        return (parity_label(0), parity_label(1))
    if kind is OrbitKind.SPINOR_CLASS:
        full = (1 << n) - 1
        reps = [m for m in range(1 << n) if m < (full ^ m)]
        return tuple(spinor_class_label(_unmask(m), n) for m in reps)
    raise ValueError(f"unknown orbit kind {kind!r}")


def _label_rank_ok(label: OrbitLabel, n: int) -> bool:
    kind, value = label.kind, label.value
    if kind is OrbitKind.VECTOR:
        return 1 <= abs(value) <= n
    if kind is OrbitKind.SPINOR:
        return all(1 <= j <= n for j in value)
    if kind is OrbitKind.PAIR_CLASS:
        return 1 <= value <= n
    if kind is OrbitKind.SPINOR_CLASS:
        a, b = value
        return len(a) + len(b) == n and all(1 <= j <= n for j in a + b)
    return True


def act(w: SignedPerm, label: OrbitLabel) -> OrbitLabel:
    """Action of a signed permutation on an orbit label.

    Spinor subsets transform by pushing each signed coordinate of the
    half-sum weight through ``w``; the quotient orbits inherit the action.
    """
    if not _label_rank_ok(label, w.n):
        raise RankError(f"label {label!r} does not live in rank {w.n}")
    kind = label.kind
    if kind is OrbitKind.VECTOR:
        return vector_label(w(label.value))
    if kind is OrbitKind.SPINOR:
        return spinor_label(_act_subset(w, label.value))
    if kind is OrbitKind.PAIR_CLASS:
        return pair_label(abs(w(label.value)))
    if kind is OrbitKind.PARITY:
        return parity_label(label.value + w.neg_count())
    if kind is OrbitKind.SPINOR_CLASS:
        return spinor_class_label(_act_subset(w, label.value[0]), w.n)
    raise ValueError(f"unknown orbit kind {kind!r}")


def _act_subset(w: SignedPerm, subset) -> tuple:
    # sign pattern: -1 on members, +1 off members; push through w
    inside = set(subset)
    out = []
    for j in range(1, w.n + 1):
        v = w(j)
        sign = -1 if j in inside else 1
        if v < 0:
            sign = -sign
        if sign < 0:
            out.append(abs(v))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _label_index(kind: OrbitKind, n: int):
    return {lab: i for i, lab in enumerate(orbit_labels(kind, n))}


def perm_on_orbit(w: SignedPerm, kind: OrbitKind) -> tuple:
    """Index permutation induced on the canonical labels: position i maps to
    ``perm[i]``."""
    labels = orbit_labels(OrbitKind(kind), w.n)
    index = _label_index(OrbitKind(kind), w.n)
    return tuple(index[act(w, lab)] for lab in labels)


# ---------------------------------------------------------------------------
# subgroup classification


class GroupClass(str, Enum):
    FULL_B = "FullB"
    FULL_D = "FullD"
    NORMALIZER_G1 = "NormalizerG1"
    G1_CONJUGATE = "G1Conjugate"
    INTRANSITIVE = "Intransitive"
    OTHER = "Other"


def generated_group(gens) -> set:
    """Closure of the generating set, by breadth-first multiplication."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators of mixed rank")
    seen = {SignedPerm.identity(n)}
    frontier = [SignedPerm.identity(n)]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = g * h
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


def _is_transitive_signed(gens, n: int) -> bool:
    # orbit of +1 on the 2n signed indices under the generators
    seen = {1}
    frontier = [1]
    targets = 2 * n
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                for y in (g(x), g.inverse()(x)):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return len(seen) == targets


def _sign_block(group, n: int, allow_swap: bool):
    """Search for a sign choice S = {t_j * j} preserved (or preserved-or-
    swapped with -S) by every element. Returns the sign vector or None."""
    for bits in range(1 << (n - 1)):  # t_1 fixed +1; -S gives the same block pair
        signs = [1] + [1 if (bits >> i) & 1 == 0 else -1 for i in range(n - 1)]
        block = frozenset(signs[j - 1] * j for j in range(1, n + 1))
        neg_block = frozenset(-x for x in block)
        ok = True
        for g in group:
            img = frozenset(g(x) for x in block)
            if img == block:
                continue
            if allow_swap and img == neg_block:
                continue
            ok = False
            break
        if ok:
            return signs
    return None


def classify_subgroup(gens) -> GroupClass:
    """Identify the group generated inside the rank-n signed permutations.

    Full enumeration, exact; refuses ranks above CLASSIFY_RANK_MAX.
    """
    gens = list(gens)
    n = gens[0].n
    if n > CLASSIFY_RANK_MAX:
        raise RankError(
            f"subgroup classification enumerates the group; rank {n} > {CLASSIFY_RANK_MAX} unsupported"
        )
    group = generated_group(gens)
    order = len(group)
    fact = math.factorial(n)
    if order == (1 << n) * fact:
        return GroupClass.FULL_B
    if order == (1 << (n - 1)) * fact and all(g.neg_count() % 2 == 0 for g in group):
        return GroupClass.FULL_D
    transitive = _is_transitive_signed(gens, n)
    if order == 2 * fact and transitive and _sign_block(group, n, allow_swap=True):
        return GroupClass.NORMALIZER_G1
    if order == fact and _sign_block(group, n, allow_swap=False):
        return GroupClass.G1_CONJUGATE
    if not transitive:
        return GroupClass.INTRANSITIVE
    return GroupClass.OTHER
