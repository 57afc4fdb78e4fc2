"""Exact rational substrate: comparisons, ternary streams and affine maps.

Every coordinate in the package is a :class:`fractions.Fraction`.  Nothing
here touches floating point.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple, Union

from .errors import PreconditionError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle rounding into an exact engine.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(r: Fraction) -> str:
    """Serialize as ``"p/q"`` in lowest terms, always with a denominator."""
    return f"{r.numerator}/{r.denominator}"


def rational_cmp(p: Fraction, q: Fraction) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return (p > q) - (p < q)


def is_triadic(x: Fraction) -> bool:
    d = x.denominator
    while d % 3 == 0:
        d //= 3
    return d == 1


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational strictly inside ``(lo, hi)``.

    Continued-fraction descent of the Stern-Brocot tree; requires 0 <= lo < hi.
    """
    if not ZERO <= lo < hi:
        raise PreconditionError(f"need 0 <= lo < hi, got ({lo}, {hi})")
    fl = lo.numerator // lo.denominator
    if fl + 1 < hi:
        return Fraction(fl + 1)
    frac_lo = lo - fl
    frac_hi = hi - fl
    if frac_lo == 0:
        inner = Fraction(int(1 / frac_hi) + 1)
    else:
        inner = simplest_between(1 / frac_hi, 1 / frac_lo)
    return fl + 1 / inner


# -- ternary streams ---------------------------------------------------------

TAILS = ("zeros", "twos")


def _digits_value(digits: Tuple[int, ...]) -> int:
    n = 0
    for d in digits:
        n = 3 * n + d
    return n


def _canonical(preperiod: Tuple[int, ...], period: Tuple[int, ...]):
    # shortest repeating unit of the period
    L = len(period)
    for k in range(1, L + 1):
        if L % k == 0 and period == period[:k] * (L // k):
            period = period[:k]
            break
    # absorb preperiod digits that merely continue the cycle
    while preperiod and preperiod[-1] == period[-1]:
        period = (preperiod[-1],) + period[:-1]
        preperiod = preperiod[:-1]
    return preperiod, period


@dataclass(frozen=True)
class TernaryStream:
    """Eventually periodic base-3 digit stream ``0.pre(period)(period)...``.

    Instances are always canonical (shortest preperiod, shortest period), so
    two streams are equal exactly when their digit sequences coincide.
    """

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        pre = tuple(int(d) for d in self.preperiod)
        per = tuple(int(d) for d in self.period)
        if not per:
            raise PreconditionError("period must be nonempty")
        if any(d not in (0, 1, 2) for d in pre + per):
            raise PreconditionError("ternary digits must lie in {0, 1, 2}")
        pre, per = _canonical(pre, per)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def value(self) -> Fraction:
        L = len(self.period)
        cycle = 3 ** L - 1
        num = _digits_value(self.preperiod) * cycle + _digits_value(self.period)
        return Fraction(num, 3 ** len(self.preperiod) * cycle)

    def digit(self, k: int) -> int:
        """Digit at 1-based position ``k`` (weight ``3**-k``)."""
        if k < 1:
            raise IndexError(k)
        if k <= len(self.preperiod):
            return self.preperiod[k - 1]
        return self.period[(k - len(self.preperiod) - 1) % len(self.period)]

    def digits(self, n: int) -> Tuple[int, ...]:
        return tuple(self.digit(k) for k in range(1, n + 1))

    def __iter__(self) -> Iterator[int]:
        yield from self.preperiod
        while True:
            yield from self.period


def _long_division(x: Fraction) -> TernaryStream:
    # x in [0, 1); remainders repeat after at most `denominator` steps
    num, den = x.numerator, x.denominator
    seen = {}
    digits = []
    r = num
    while r not in seen:
        seen[r] = len(digits)
        r *= 3
        digits.append(r // den)
        r %= den
    start = seen[r]
    return TernaryStream(tuple(digits[:start]), tuple(digits[start:]))


def ternary_stream(x: RationalLike, tail: str = "zeros") -> TernaryStream:
    """Base-3 expansion of ``x`` in [0, 1].

    Triadic rationals ``p/3**m`` have two expansions; ``tail`` selects the one
    ending in zeros (approach from the right) or in twos (from the left).
    Other rationals have a single expansion and ignore ``tail``.
    """
    x = as_rational(x)
    if tail not in TAILS:
        raise PreconditionError(f"unknown tail {tail!r}")
    if not ZERO <= x <= ONE:
        raise PreconditionError(f"{x} outside [0, 1]")
    if tail == "twos" and x == 0:
        raise PreconditionError("0 has no twos-tail expansion")
    if tail == "zeros" and x == 1:
        raise PreconditionError("1 has no zeros-tail expansion")
    if x == 1:
        return TernaryStream((), (2,))
    stream = _long_division(x)
    if tail == "zeros" or stream.period != (0,):
        return stream
    pre = stream.preperiod
    return TernaryStream(pre[:-1] + (pre[-1] - 1,), (2,))


# -- increasing affine maps ---------------------------------------------------

@dataclass(frozen=True)
class AffineMap:
    """``x -> slope * x + offset`` mapping [0, 1] increasingly into [0, 1]."""

    slope: Fraction
    offset: Fraction = ZERO

    def __post_init__(self):
        slope = as_rational(self.slope)
        offset = as_rational(self.offset)
        if slope <= 0:
            raise PreconditionError("affine maps must be strictly increasing")
        if offset < 0 or slope + offset > 1:
            raise PreconditionError(f"map {slope}*x+{offset} leaves [0, 1]")
        object.__setattr__(self, "slope", slope)
        object.__setattr__(self, "offset", offset)

    @classmethod
    def ifs_branch(cls, i: int, n: int) -> "AffineMap":
        """The branch ``x -> (x + i) / n``."""
        return cls(Fraction(1, n), Fraction(i, n))

    @property
    def image_range(self) -> Tuple[Fraction, Fraction]:
        return self.offset, self.offset + self.slope

    def __call__(self, x: Fraction) -> Fraction:
        # one gcd instead of the two that `slope * x + offset` costs
        s, o = self.slope, self.offset
        den = s.denominator * o.denominator * x.denominator
        num = s.numerator * x.numerator * o.denominator + o.numerator * s.denominator * x.denominator
        return Fraction(num, den)

    def raw_inverse(self, y: Fraction) -> Fraction:
        """Inverse formula extended to all of Q, with no range check."""
        return (y - self.offset) / self.slope

    def inverse(self, y: Fraction) -> Fraction:
        lo, hi = self.image_range
        if not lo <= y <= hi:
            raise PreconditionError(f"{y} outside the range [{lo}, {hi}]")
        return self.raw_inverse(y)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """``self o inner``."""
        return AffineMap(self.slope * inner.slope, self.slope * inner.offset + self.offset)


IDENTITY = AffineMap(ONE, ZERO)


def apply_map(g: AffineMap, x: RationalLike) -> Fraction:
    x = as_rational(x)
    if not ZERO <= x <= ONE:
        raise PreconditionError(f"{x} outside [0, 1]")
    return g(x)


def invert_map(g: AffineMap, y: RationalLike) -> Fraction:
    return g.inverse(as_rational(y))
