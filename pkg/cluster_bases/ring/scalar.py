"""Integer Laurent polynomials in the quantum parameter v."""

from collections.abc import Iterator, Mapping
from typing import Union

ScalarLike = Union["ScalarPoly", int]


class ScalarPoly:
    """Immutable element of Z[v, v^-1], stored as exponent -> nonzero coefficient."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        self._coeffs: dict[int, int] = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self._hash: int | None = None

    @classmethod
    def v(cls, exponent: int = 1, coeff: int = 1) -> "ScalarPoly":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value: ScalarLike) -> "ScalarPoly":
        if isinstance(value, ScalarPoly):
            return value
        return cls({0: value})

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = ScalarPoly({0: other})
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other: ScalarLike) -> "ScalarPoly":
        other = ScalarPoly.coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return ScalarPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "ScalarPoly":
        return ScalarPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: ScalarLike) -> "ScalarPoly":
        return self + (-ScalarPoly.coerce(other))

    def __rsub__(self, other: ScalarLike) -> "ScalarPoly":
        return ScalarPoly.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "ScalarPoly":
        other = ScalarPoly.coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return ScalarPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "ScalarPoly":
        """Multiply by v^k."""
        if not k:
            return self
        return ScalarPoly({e + k: c for e, c in self._coeffs.items()})

    def bar(self) -> "ScalarPoly":
        return ScalarPoly({-e: c for e, c in self._coeffs.items()})

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def unit(self) -> tuple[int, int] | None:
        """Return (sign, exponent) when this is ±v^exponent, else None."""
        if len(self._coeffs) != 1:
            return None
        ((e, c),) = self._coeffs.items()
        if c not in (1, -1):
            return None
        return c, e

    @property
    def is_integer(self) -> bool:
        return all(e == 0 for e in self._coeffs)

    @property
    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    @property
    def is_strictly_negative(self) -> bool:
        """True on v^-1 Z[v^-1]; the zero polynomial counts."""
        return all(e < 0 for e in self._coeffs)

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items()):
            if e == 0:
                body = str(c)
            else:
                power = "v" if e == 1 else f"v^{e}"
                body = power if c == 1 else f"-{power}" if c == -1 else f"{c}*{power}"
            parts.append(body)
        text = parts[0]
        for part in parts[1:]:
            text += part if part.startswith("-") else f"+{part}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ScalarPoly({self.render()!r})"


ONE = ScalarPoly({0: 1})
ZERO = ScalarPoly()
