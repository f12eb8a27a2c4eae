"""Finite sets of non-negative integers, sumsets, and power-set classification.

Sets are stored as integer bit masks (bit ``i`` set iff ``i`` is a member), so
a sumset costs one shift-or per element of the left operand and exhaustive
sweeps over the power-set lattice of a small ground set stay cheap.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

DEFAULT_MAX_ELEMENT = 63
DEFAULT_GROUND_CAP = 5

ZERO_MASK = 1  # bit mask of the set {0}


class EnumerationInfeasible(ValueError):
    """An exhaustive operation would exceed its configured cap."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def sumset_mask(a: int, b: int) -> int:
    """Sumset of two bit masks: OR of ``b`` shifted by every element of ``a``."""
    out = 0
    while a:
        low = a & -a
        out |= b << (low.bit_length() - 1)
        a ^= low
    return out


def subset_sort_key(mask: int) -> tuple:
    """Canonical subset order: ascending cardinality, then element order."""
    return (mask.bit_count(), tuple(bits_of(mask)))


def _mask_of(elements: Iterable[int], max_element: int) -> int:
    mask = 0
    for x in elements:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValueError(f"set elements must be integers, got {x!r}")
        if x < 0:
            raise ValueError(f"set elements must be non-negative, got {x}")
        if x > max_element:
            raise ValueError(f"element {x} exceeds the maximum {max_element}")
        mask |= 1 << x
    return mask


class IntSet:
    """Immutable set of distinct non-negative integers, kept in sorted order."""

    __slots__ = ("mask",)

    def __init__(self, elements: Iterable[int] = (), *,
                 max_element: int = DEFAULT_MAX_ELEMENT):
        self.mask: int = _mask_of(elements, max_element)

    @classmethod
    def from_mask(cls, mask: int) -> "IntSet":
        """Wrap an already-validated bit mask (fast path, no range checks)."""
        obj = object.__new__(cls)
        obj.mask = mask
        return obj

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        """Parse a set literal: ``{0,1,3}``, bare ``0,1,3``, ``{}`` or ``∅``."""
        body = text.strip()
        if body == "∅":
            return cls.from_mask(0)
        if body.startswith("{"):
            if not body.endswith("}"):
                raise ValueError(f"unbalanced braces in set literal {text!r}")
            inner = body[1:-1].strip()
            if inner == "":
                return cls.from_mask(0)
        else:
            if body == "":
                raise ValueError("empty set literal")
            inner = body
        try:
            elems = [int(part) for part in inner.split(",")]
        except ValueError:
            raise ValueError(f"bad set literal {text!r}") from None
        return cls(elems)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits_of(self.mask))

    def max(self) -> int:
        if not self.mask:
            raise ValueError("empty set has no maximal element")
        return self.mask.bit_length() - 1

    def issubset(self, other: "IntSet") -> bool:
        return not self.mask & ~other.mask

    def sort_key(self) -> tuple:
        return subset_sort_key(self.mask)

    def __add__(self, other: "IntSet") -> "IntSet":
        return sumset(self, other)

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_mask(self.mask | other.mask)

    def __and__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_mask(self.mask & other.mask)

    def __contains__(self, x: int) -> bool:
        return x >= 0 and bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntSet) and self.mask == other.mask

    def __lt__(self, other: "IntSet") -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash(self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in bits_of(self.mask)) + "}"

    def __repr__(self) -> str:
        return f"IntSet({self})"


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """The set of all pairwise sums of ``a`` and ``b``.

    Both operands must be non-empty: the empty set is never a vertex or edge
    label, so asking for its sumset signals misuse upstream.
    """
    if not a.mask or not b.mask:
        raise ValueError("sumset operands must be non-empty")
    return IntSet.from_mask(sumset_mask(a.mask, b.mask))


class GroundSet:
    """The label universe X: a small set of non-negative integers containing 0.

    The size cap (default 5) keeps ``P(X)`` small enough for the exhaustive
    sweeps everything downstream relies on.
    """

    __slots__ = ("base", "cap", "_subsets")

    def __init__(self, elements, *, cap: int = DEFAULT_GROUND_CAP):
        base = elements if isinstance(elements, IntSet) else IntSet(elements)
        if not base.mask:
            raise ValueError("ground set must be non-empty")
        if not base.mask & 1:
            raise ValueError("ground set must contain 0")
        if base.mask.bit_count() > cap:
            raise EnumerationInfeasible(
                f"ground set has {base.mask.bit_count()} elements, cap is {cap}")
        self.base = base
        self.cap = cap
        self._subsets: Optional[tuple[int, ...]] = None

    @classmethod
    def parse(cls, text: str, *, cap: int = DEFAULT_GROUND_CAP) -> "GroundSet":
        return cls(IntSet.parse(text), cap=cap)

    @property
    def mask(self) -> int:
        return self.base.mask

    @property
    def size(self) -> int:
        return self.base.mask.bit_count()

    @property
    def elements(self) -> tuple[int, ...]:
        return self.base.elements

    @property
    def max_element(self) -> int:
        return self.base.max()

    def subset_masks(self) -> tuple[int, ...]:
        """All non-empty subset masks of X in canonical order."""
        if self._subsets is None:
            full = self.base.mask
            subs = []
            sub = full
            while sub:
                subs.append(sub)
                sub = (sub - 1) & full
            subs.sort(key=subset_sort_key)
            self._subsets = tuple(subs)
        return self._subsets

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(("GroundSet", self.mask))

    def __str__(self) -> str:
        return str(self.base)

    def __repr__(self) -> str:
        return f"GroundSet({self.base})"


def all_nonempty_subsets(x: GroundSet) -> list[IntSet]:
    """The ``2^|X| - 1`` non-empty subsets of X in canonical order."""
    return [IntSet.from_mask(m) for m in x.subset_masks()]


def summand_decompositions(c: IntSet, x: GroundSet) -> list[tuple[IntSet, IntSet]]:
    """All unordered pairs (A, B) of non-empty subsets of X with A + B = c.

    Trivial pairs (one side ``{0}``) are included; callers filter. Pairs come
    out in canonical order, with A <= B.
    """
    if not c.mask:
        raise ValueError("cannot decompose the empty set")
    if c.mask & ~x.mask:
        raise ValueError(f"{c} is not a subset of the ground set {x}")
    subs = x.subset_masks()
    out = []
    for i, a in enumerate(subs):
        for b in subs[i:]:
            if sumset_mask(a, b) == c.mask:
                out.append((IntSet.from_mask(a), IntSet.from_mask(b)))
    return out


@dataclass(frozen=True)
class SubsetClass:
    """Sumset/summand flags for one non-empty subset of the ground set."""

    is_nontrivial_sumset: bool
    is_nontrivial_summand: bool
    witness: Optional[tuple[IntSet, IntSet]]


@dataclass(frozen=True)
class SumsetClassification:
    """Per-subset sumset structure of P(X) and the derived counts.

    ``rho`` counts non-empty subsets expressible as A + B with neither summand
    equal to ``{0}``; ``rho_prime`` counts non-empty subsets other than
    ``{0}`` that are neither non-trivial sumsets nor non-trivial summands.
    ``rho_double_prime`` is the same count under the alternate wording of the
    existence theorem's condition (b); with the non-triviality convention used
    here the two wordings coincide, so the fields always agree.
    """

    ground: GroundSet
    per_subset: dict
    rho: int
    rho_prime: int
    rho_double_prime: int
    x_is_sumset: bool

    def class_of(self, s: IntSet) -> SubsetClass:
        return self.per_subset[s]

    def nontrivial_sumsets(self) -> list[IntSet]:
        return [s for s, c in self.per_subset.items() if c.is_nontrivial_sumset]

    def nontrivial_summands(self) -> list[IntSet]:
        return [s for s, c in self.per_subset.items() if c.is_nontrivial_summand]

    def neither(self) -> list[IntSet]:
        """Subsets other than {0} that are neither sumsets nor summands."""
        return [s for s, c in self.per_subset.items()
                if s.mask != ZERO_MASK
                and not c.is_nontrivial_sumset and not c.is_nontrivial_summand]


def classify(x: GroundSet) -> SumsetClassification:
    """Exhaust all non-trivial decompositions A + B over subsets of X.

    A decomposition C = A + B counts as non-trivial iff A != {0} != B; since
    {0} is the sumset identity, admitting it would make every subset a sumset
    and collapse rho.
    """
    subs = x.subset_masks()
    xmask = x.mask
    witness: dict[int, tuple[int, int]] = {}
    summands: set[int] = set()
    nonzero = [m for m in subs if m != ZERO_MASK]
    for i, a in enumerate(nonzero):
        for b in nonzero[i:]:
            s = sumset_mask(a, b)
            if s & ~xmask:
                continue
            if s not in witness:
                witness[s] = (a, b)
            summands.add(a)
            summands.add(b)
    per: dict[IntSet, SubsetClass] = {}
    rho = 0
    neither = 0
    for m in subs:
        is_sum = m in witness
        is_summand = m in summands
        wit = witness.get(m)
        per[IntSet.from_mask(m)] = SubsetClass(
            is_sum, is_summand,
            None if wit is None else (IntSet.from_mask(wit[0]), IntSet.from_mask(wit[1])))
        rho += is_sum
        if m != ZERO_MASK and not is_sum and not is_summand:
            neither += 1
    return SumsetClassification(
        ground=x,
        per_subset=per,
        rho=rho,
        rho_prime=neither,
        rho_double_prime=neither,
        x_is_sumset=xmask in witness,
    )
