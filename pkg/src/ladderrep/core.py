"""Exact arithmetic and the symbolic vocabulary shared by every module.

Half-integers are stored as doubled integers, cuspidal labels are formal
symbols carrying a block size and a parity class, and representations never
appear as anything richer than the symbols below: segments, Steinberg
factors with their degeneracy conventions, tempered parameters, standard
modules, and integer combinations of standard modules.

All values are immutable and hashable, and every operation is a pure
function.  The zero representation is the absorbing sentinel ``ZERO_REP``,
threaded through assembly rather than raised as an error.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, Union


class LadderError(Exception):
    """Base class for domain errors raised by the engine."""


class InvalidSegmentError(LadderError):
    pass


class NotStandardModuleError(LadderError):
    pass


class RankMismatchError(LadderError):
    pass


# ---------------------------------------------------------------------------
# half-integers


@functools.total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z, stored exactly as twice its value.

    No floating point is involved anywhere: addition, negation and
    comparison are plain integer operations on ``twice``.
    """

    twice: int

    @staticmethod
    def whole(value: int) -> "HalfInt":
        return HalfInt(2 * value)

    @staticmethod
    def parse(text: str) -> "HalfInt":
        s = text.strip().replace("−", "-")
        if s.endswith("/2"):
            return HalfInt(int(s[:-2]))
        return HalfInt(2 * int(s))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def _coerce(self, other: Union["HalfInt", int]) -> "HalfInt":
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int):
            return HalfInt.whole(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["HalfInt", int]) -> "HalfInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented  # type: ignore[return-value]
        return HalfInt(self.twice + o.twice)

    __radd__ = __add__

    def __sub__(self, other: Union["HalfInt", int]) -> "HalfInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented  # type: ignore[return-value]
        return HalfInt(self.twice - o.twice)

    def __rsub__(self, other: Union["HalfInt", int]) -> "HalfInt":
        o = self._coerce(other)
        return HalfInt(o.twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __lt__(self, other: "HalfInt") -> bool:
        if not isinstance(other, HalfInt):
            return NotImplemented  # type: ignore[return-value]
        return self.twice < other.twice

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def hi(text: str) -> HalfInt:
    """Shorthand parser, convenient in tests and table transcriptions."""
    return HalfInt.parse(text)


# ---------------------------------------------------------------------------
# labels and groups


class Parity(Enum):
    """Parity class of the good exponents attached to a cuspidal label."""

    INTEGRAL = "integral"
    HALF_INTEGRAL = "half-integral"

    def matches(self, x: HalfInt) -> bool:
        return x.is_integer == (self is Parity.INTEGRAL)


class GroupKind(Enum):
    SO_ODD = "SOodd"
    SP = "Sp"

    @property
    def dimension_parity(self) -> int:
        """Total parameter dimension is 2n (SOodd) or 2n+1 (Sp)."""
        return 0 if self is GroupKind.SO_ODD else 1


@dataclass(frozen=True)
class CuspidalLabel:
    """A formal self-dual cuspidal symbol: opaque id, GL-block size, parity.

    Labels carry no analytic content; equality is by ``id`` alone, with
    ``d`` and ``parity`` required to be consistent wherever two labels meet.
    """

    id: str
    d: int
    parity: Parity

    def __post_init__(self) -> None:
        if self.d < 1:
            raise LadderError(f"label {self.id!r}: d must be a positive integer")


#: Default label used by the unipotent shorthand: the trivial character of GL(1).
TRIVIAL_INTEGRAL = CuspidalLabel("1", 1, Parity.INTEGRAL)
TRIVIAL_HALF = CuspidalLabel("1", 1, Parity.HALF_INTEGRAL)


# ---------------------------------------------------------------------------
# segments and Steinberg factors


@dataclass(frozen=True)
class Segment:
    """The exponent interval [x, x-1, ..., y] attached to a label.

    Degenerate inputs with y = x+1 or y > x+1 are allowed; they normalize to
    the unit and zero Steinberg factors respectively.
    """

    rho: CuspidalLabel
    x: HalfInt
    y: HalfInt

    def __post_init__(self) -> None:
        if not (self.rho.parity.matches(self.x) and self.rho.parity.matches(self.y)):
            raise InvalidSegmentError(
                f"segment [{self.x},{self.y}] does not match the parity of label {self.rho.id!r}"
            )

    @property
    def length(self) -> int:
        """Number of exponents, x - y + 1 (can be <= 0 for degenerate input)."""
        return (self.x.twice - self.y.twice) // 2 + 1

    def exponents(self) -> Iterator[HalfInt]:
        v = self.x
        while not v < self.y:
            yield v
            v = v - 1

    def sort_key(self) -> tuple:
        return (self.x.twice + self.y.twice, self.x.twice, self.rho.id, self.y.twice)


class SteinbergKind(Enum):
    PROPER = "proper"
    UNIT = "unit"
    ZERO = "zero"


@dataclass(frozen=True)
class SteinbergFactor:
    kind: SteinbergKind
    segment: Segment | None = None


def normalize_steinberg(seg: Segment) -> SteinbergFactor:
    """Classify a segment under the degeneracy conventions.

    Proper when x >= y, the unit factor when y = x+1, and zero when y > x+1.
    """
    if not seg.x < seg.y:
        return SteinbergFactor(SteinbergKind.PROPER, seg)
    if seg.y.twice == seg.x.twice + 2:
        return SteinbergFactor(SteinbergKind.UNIT)
    return SteinbergFactor(SteinbergKind.ZERO)


# ---------------------------------------------------------------------------
# tempered parameters


@dataclass(frozen=True)
class TemperedPiece:
    """One summand of a tempered parameter: label, SL(2) size a, sign.

    The attached exponent is (a-1)/2 and must lie in the label's parity
    class; a = 0 is the formal convention piece, only possible for
    half-integral labels.
    """

    rho: CuspidalLabel
    a: int
    sign: int

    def __post_init__(self) -> None:
        if self.a < 0:
            raise LadderError("tempered piece with negative SL(2) size")
        if self.sign not in (1, -1):
            raise LadderError("tempered piece sign must be +1 or -1")
        if not self.rho.parity.matches(HalfInt(self.a - 1)):
            raise LadderError(
                f"piece of size {self.a} does not match the parity of label {self.rho.id!r}"
            )

    @property
    def exponent(self) -> HalfInt:
        return HalfInt(self.a - 1)

    def sort_key(self) -> tuple:
        return (self.rho.id, self.a, -self.sign)


@dataclass(frozen=True)
class TemperedParam:
    """A good-parity tempered parameter: signed multiset of pieces.

    Pieces are kept in canonical sorted order.  Construction enforces the
    structural conditions: equal (label, size) pieces carry equal signs, and
    the total dimension has the parity demanded by the group.  The global
    sign-product condition is *not* enforced here (normalization may be
    pending); see :func:`sign_condition_holds`.
    """

    group: GroupKind
    pieces: tuple[TemperedPiece, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(sorted(self.pieces, key=TemperedPiece.sort_key)))
        seen: dict[tuple[str, int], int] = {}
        for p in self.pieces:
            key = (p.rho.id, p.a)
            if seen.setdefault(key, p.sign) != p.sign:
                raise LadderError(f"pieces with equal (label, size) {key} carry opposite signs")
        if self.dimension % 2 != self.group.dimension_parity:
            raise LadderError(
                f"parameter dimension {self.dimension} has the wrong parity for {self.group.value}"
            )

    @property
    def dimension(self) -> int:
        return sum(p.rho.d * p.a for p in self.pieces)

    @property
    def rank(self) -> int:
        return (self.dimension - self.group.dimension_parity) // 2

    def sort_key(self) -> tuple:
        return tuple(p.sort_key() for p in self.pieces)


class ZeroRep:
    """Absorbing sentinel for the zero representation."""

    _instance: "ZeroRep | None" = None

    def __new__(cls) -> "ZeroRep":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZeroRep"


ZERO_REP = ZeroRep()


def is_zero(value: object) -> bool:
    return isinstance(value, ZeroRep)


def sign_condition_holds(t: TemperedParam) -> bool:
    """Product of signs over the pieces of positive size equals +1."""
    prod = 1
    for p in t.pieces:
        if p.a >= 1:
            prod *= p.sign
    return prod == 1


def normalize_tempered(t: TemperedParam) -> TemperedParam | ZeroRep:
    """Resolve the size-0 convention pieces.

    A size-0 piece with sign -1 annihilates the parameter; size-0 pieces
    with sign +1 are dropped.
    """
    if any(p.a == 0 and p.sign == -1 for p in t.pieces):
        return ZERO_REP
    kept = tuple(p for p in t.pieces if p.a > 0)
    if len(kept) == len(t.pieces):
        return t
    return TemperedParam(t.group, kept)


# ---------------------------------------------------------------------------
# standard modules


@dataclass(frozen=True)
class StandardModule:
    """Canonical Langlands-data symbol: sorted segments against a tempered part.

    Values are built through :func:`make_standard_module`, which applies the
    degeneracy conventions and fixes the canonical segment order, so
    dataclass equality is equality of canonical keys.
    """

    segments: tuple[Segment, ...]
    tempered: TemperedParam

    @property
    def group(self) -> GroupKind:
        return self.tempered.group

    @property
    def rank(self) -> int:
        return sum(s.rho.d * s.length for s in self.segments) + self.tempered.rank

    def sort_key(self) -> tuple:
        return (tuple(s.sort_key() for s in self.segments), self.tempered.sort_key())


def make_standard_module(
    segments: Iterable[Segment], tempered: TemperedParam
) -> StandardModule | ZeroRep:
    """Assemble a standard module, normalizing all degeneracies.

    Zero factors (either a zero Steinberg factor or an annihilating size-0
    tempered piece) absorb the whole module; unit factors are dropped.  Every
    retained segment must have x + y < 0, and the normalized tempered part
    must satisfy the sign-product condition; violations signal an assembly
    bug upstream and raise.
    """
    temp = normalize_tempered(tempered)
    if is_zero(temp):
        return ZERO_REP
    assert isinstance(temp, TemperedParam)
    kept: list[Segment] = []
    for seg in segments:
        factor = normalize_steinberg(seg)
        if factor.kind is SteinbergKind.ZERO:
            return ZERO_REP
        if factor.kind is SteinbergKind.UNIT:
            continue
        assert factor.segment is not None
        if factor.segment.x.twice + factor.segment.y.twice >= 0:
            raise NotStandardModuleError(
                f"segment [{seg.x},{seg.y}] has non-negative exponent sum"
            )
        kept.append(factor.segment)
    if not sign_condition_holds(temp):
        raise NotStandardModuleError("tempered part violates the sign-product condition")
    kept.sort(key=Segment.sort_key)
    return StandardModule(tuple(kept), temp)


# ---------------------------------------------------------------------------
# integer combinations of standard modules


@dataclass(frozen=True)
class GrothendieckElement:
    """Formal integer combination of standard modules of one fixed rank.

    Terms are stored sorted by canonical key with zero coefficients pruned.
    """

    rank: int
    terms: tuple[tuple[StandardModule, int], ...]

    @staticmethod
    def zero(rank: int) -> "GrothendieckElement":
        return GrothendieckElement(rank, ())

    @staticmethod
    def from_items(
        rank: int, items: Iterable[tuple[StandardModule, int]]
    ) -> "GrothendieckElement":
        acc: dict[StandardModule, int] = {}
        for module, coeff in items:
            if module.rank != rank:
                raise RankMismatchError(
                    f"term of rank {module.rank} in an element of rank {rank}"
                )
            acc[module] = acc.get(module, 0) + coeff
        terms = tuple(
            sorted(((m, c) for m, c in acc.items() if c != 0), key=lambda mc: mc[0].sort_key())
        )
        return GrothendieckElement(rank, terms)

    @staticmethod
    def of_module(module: StandardModule, coeff: int = 1) -> "GrothendieckElement":
        return GrothendieckElement.from_items(module.rank, [(module, coeff)])

    def coefficient(self, module: StandardModule) -> int:
        for m, c in self.terms:
            if m == module:
                return c
        return 0

    def modules(self) -> list[StandardModule]:
        return [m for m, _ in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "GrothendieckElement") -> "GrothendieckElement":
        return gr_combine([(1, self), (1, other)])

    def __rmul__(self, coeff: int) -> "GrothendieckElement":
        return GrothendieckElement.from_items(
            self.rank, [(m, coeff * c) for m, c in self.terms]
        )


def gr_combine(
    elems: Sequence[tuple[int, GrothendieckElement]], rank: int | None = None
) -> GrothendieckElement:
    """Integer combination of elements sharing one rank."""
    if rank is None:
        if not elems:
            raise LadderError("cannot combine an empty list without an explicit rank")
        rank = elems[0][1].rank
    items: list[tuple[StandardModule, int]] = []
    for coeff, elem in elems:
        if elem.rank != rank:
            raise RankMismatchError(f"rank {elem.rank} element combined at rank {rank}")
        items.extend((m, coeff * c) for m, c in elem.terms)
    return GrothendieckElement.from_items(rank, items)
