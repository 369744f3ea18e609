"""Sparse (quantum) torus elements and their canonical text form."""

import re
from collections.abc import Iterator, Mapping
from operator import add, mul
from typing import Union

from cluster_bases.errors import FormatError, InvalidArgumentError

from .base import Exponent, Frame, FrameMismatchError, NormalizationError
from .scalar import ONE, ScalarLike, ScalarPoly

ElementLike = Union["TorusElement", ScalarPoly, int]


class TorusElement:
    """Finitely supported map from exponent vectors to scalars, living in a fixed frame."""

    __slots__ = ("_hash", "_terms", "frame")

    def __init__(self, frame: Frame, terms: Mapping[Exponent, ScalarLike] | None = None) -> None:
        clean: dict[Exponent, ScalarPoly] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(int(x) for x in exponent)
            if len(exponent) != frame.rank:
                raise ValueError(f"exponent {list(exponent)} has length {len(exponent)}, frame rank is {frame.rank}")
            coeff = ScalarPoly.coerce(coeff)
            if coeff:
                clean[exponent] = clean[exponent] + coeff if exponent in clean else coeff
        self.frame = frame
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash: int | None = None

    @classmethod
    def _build(cls, frame: Frame, terms: dict[Exponent, ScalarPoly]) -> "TorusElement":
        element = cls.__new__(cls)
        element.frame = frame
        element._terms = {m: c for m, c in terms.items() if c}
        element._hash = None
        return element

    @classmethod
    def zero(cls, frame: Frame) -> "TorusElement":
        return cls._build(frame, {})

    @classmethod
    def one(cls, frame: Frame) -> "TorusElement":
        return cls._build(frame, {(0,) * frame.rank: ONE})

    @classmethod
    def monomial(cls, frame: Frame, exponent: Exponent, coeff: ScalarLike = 1) -> "TorusElement":
        return cls(frame, {tuple(exponent): coeff})

    @classmethod
    def variable(cls, frame: Frame, index: int) -> "TorusElement":
        return cls._build(frame, {tuple(1 if i == index else 0 for i in range(frame.rank)): ONE})

    def items(self) -> Iterator[tuple[Exponent, ScalarPoly]]:
        """Terms in descending lexicographic order."""
        return iter(sorted(self._terms.items(), reverse=True))

    def support(self) -> list[Exponent]:
        return sorted(self._terms, reverse=True)

    def coefficient(self, exponent: Exponent) -> ScalarPoly:
        return self._terms.get(tuple(exponent), ScalarPoly())

    def leading_exponent(self) -> Exponent:
        if not self._terms:
            raise InvalidArgumentError("the zero element has no leading term")
        return max(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | ScalarPoly):
            other = TorusElement.one(self.frame).scale(other)
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.frame == other.frame and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.frame, frozenset(self._terms.items())))
        return self._hash

    def __getstate__(self) -> tuple[Frame, dict[Exponent, ScalarPoly]]:
        return self.frame, self._terms

    def __setstate__(self, state: tuple[Frame, dict[Exponent, ScalarPoly]]) -> None:
        # the cached hash depends on the interpreter's string hashing
        self.frame, self._terms = state
        self._hash = None

    def _coerce(self, other: ElementLike) -> "TorusElement":
        if isinstance(other, TorusElement):
            _check_frames(self, other)
            return other
        return TorusElement.one(self.frame).scale(other)

    def __add__(self, other: ElementLike) -> "TorusElement":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return TorusElement._build(self.frame, out)

    __radd__ = __add__

    def __neg__(self) -> "TorusElement":
        return TorusElement._build(self.frame, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: ElementLike) -> "TorusElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: ElementLike) -> "TorusElement":
        return self._coerce(other) - self

    def __mul__(self, other: ElementLike) -> "TorusElement":
        if isinstance(other, TorusElement):
            return twisted_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> "TorusElement":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "TorusElement":
        if exponent < 0:
            raise InvalidArgumentError("negative powers are only defined for monomials; use exact_divide")
        result = TorusElement.one(self.frame)
        for _ in range(exponent):
            result = twisted_mul(result, self)
        return result

    def scale(self, c: ScalarLike) -> "TorusElement":
        c = ScalarPoly.coerce(c)
        return TorusElement._build(self.frame, {m: coeff * c for m, coeff in self._terms.items()})

    def shift(self, k: int) -> "TorusElement":
        """Multiply by v^k."""
        return TorusElement._build(self.frame, {m: c.shift(k) for m, c in self._terms.items()})

    @property
    def is_bar_invariant(self) -> bool:
        return all(c.is_bar_invariant for c in self._terms.values())

    def render(self) -> str:
        return render_element(self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TorusElement({self.render()!r})"


def _check_frames(a: TorusElement, b: TorusElement) -> None:
    if a.frame != b.frame:
        raise FrameMismatchError(f"frame mismatch: {list(a.frame.vertices)} vs {list(b.frame.vertices)}")


def _lambda_image(frame: Frame, m: Exponent) -> Exponent | None:
    if frame.lam is None:
        return None
    return tuple(sum(map(mul, row, m)) for row in frame.lam)


def twisted_mul(a: TorusElement, b: TorusElement) -> TorusElement:
    """Bilinear extension of X^m * X^m' = v^Λ(m,m') X^(m+m')."""
    _check_frames(a, b)
    frame = a.frame
    right = [(m2, c2, _lambda_image(frame, m2)) for m2, c2 in b._terms.items()]
    out: dict[Exponent, ScalarPoly] = {}
    for m1, c1 in a._terms.items():
        for m2, c2, image in right:
            exponent = tuple(map(add, m1, m2))
            term = c1 * c2
            if image is not None:
                term = term.shift(sum(map(mul, m1, image)))
            out[exponent] = out[exponent] + term if exponent in out else term
    return TorusElement._build(frame, out)


def bar(a: TorusElement) -> TorusElement:
    return TorusElement._build(a.frame, {m: c.bar() for m, c in a._terms.items()})


def specialize_classical(a: TorusElement) -> TorusElement:
    frame = a.frame.classical()
    return TorusElement(frame, {m: c.at_one() for m, c in a._terms.items()})


def pointed_normalize(a: TorusElement, leading: Exponent) -> TorusElement:
    """Rescale ``a`` by a power of v so that its coefficient at ``leading`` is exactly 1."""
    leading = tuple(leading)
    coeff = a.coefficient(leading)
    if not coeff:
        raise NormalizationError(f"exponent {list(leading)} is not in the support")
    unit = coeff.unit()
    if unit is None or unit[0] != 1:
        raise NormalizationError(f"coefficient {coeff.render()} at {list(leading)} is not a power of v")
    return a.shift(-unit[1])


def render_element(a: TorusElement) -> str:
    if not a:
        return "0"
    pieces = []
    for m, c in a.items():
        monomial = "X[" + ",".join(str(x) for x in m) + "]"
        if c.is_integer:
            value = c.coefficient(0)
            body = monomial if value == 1 else f"-{monomial}" if value == -1 else f"{value}*{monomial}"
        else:
            body = f"({c.render()})*{monomial}"
        pieces.append(body)
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\*|\(([^()]*)\)\*)?X\[([-\d,\s]*)\]\s*")
_SCALAR_TERM = re.compile(r"([+-]?)(?:(\d+)\*)?v(?:\^(-?\d+))?|([+-]?)(\d+)")


def parse_scalar(text: str) -> ScalarPoly:
    text = text.replace(" ", "")
    pos, result = 0, ScalarPoly()
    while pos < len(text):
        match = _SCALAR_TERM.match(text, pos)
        if match is None or match.end() == pos:
            raise FormatError(f"cannot parse scalar {text!r} at column {pos}")
        if match.group(5) is not None:
            value = int(match.group(5)) * (-1 if match.group(4) == "-" else 1)
            result += value
        else:
            value = int(match.group(2) or 1) * (-1 if match.group(1) == "-" else 1)
            result += ScalarPoly.v(int(match.group(3) or 1), value)
        pos = match.end()
    return result


def parse_element(text: str, frame: Frame) -> TorusElement:
    """Inverse of the canonical rendering."""
    if text.strip() == "0":
        return TorusElement.zero(frame)
    pos, terms = 0, {}
    while pos < len(text):
        match = _TERM.match(text, pos)
        if match is None or match.end() == pos:
            raise FormatError(f"cannot parse element {text!r} at column {pos}")
        sign, integer, scalar, exponent = match.groups()
        if pos and sign is None:
            raise FormatError(f"missing operator before column {pos} in {text!r}")
        coeff = parse_scalar(scalar) if scalar is not None else ScalarPoly.coerce(int(integer or 1))
        if sign == "-":
            coeff = -coeff
        m = tuple(int(x) for x in exponent.split(",") if x.strip())
        if len(m) != frame.rank:
            raise FormatError(f"exponent {list(m)} in {text!r} does not have length {frame.rank}")
        terms[m] = terms[m] + coeff if m in terms else coeff
        pos = match.end()
    return TorusElement(frame, terms)
