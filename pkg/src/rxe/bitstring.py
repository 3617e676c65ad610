"""Fixed-length bit strings with positional semantics.

A BitString of length L has positions 1..L read left to right, and
position 1 is the most significant bit: the value interpretation is
sum over set positions p of 2**(L - p).  All arithmetic is modulo 2**L.
Shifting right moves a bit at position p to position p + k; vacated
positions fill with zeros and bits pushed past either end are discarded.
"""

from __future__ import annotations

# Width of a native machine word.  Multiplication is only supported for
# operands that fit a single word; everything else works at any length.
WORD_BITS = 64


class BitString:
    __slots__ = ("length", "value")

    def __init__(self, length: int, value: int):
        if length < 1:
            raise ValueError("BitString length must be >= 1")
        if value < 0 or value >> length:
            raise ValueError("value does not fit in %d bits" % length)
        self.length = length
        self.value = value

    @classmethod
    def zeros(cls, length: int) -> "BitString":
        return cls(length, 0)

    @classmethod
    def from01(cls, bits: str) -> "BitString":
        if not bits or bits.strip("01"):
            raise ValueError("expected a nonempty string of 0s and 1s")
        return cls(len(bits), int(bits, 2))

    @classmethod
    def from_positions(cls, length: int, positions) -> "BitString":
        value = 0
        for p in positions:
            if not 1 <= p <= length:
                raise ValueError("position %d out of range 1..%d" % (p, length))
            value |= 1 << (length - p)
        return cls(length, value)

    def to01(self) -> str:
        return format(self.value, "0%db" % self.length)

    def bit(self, p: int) -> int:
        if not 1 <= p <= self.length:
            raise ValueError("position %d out of range 1..%d" % (p, self.length))
        return (self.value >> (self.length - p)) & 1

    def set_bit(self, p: int) -> "BitString":
        if not 1 <= p <= self.length:
            raise ValueError("position %d out of range 1..%d" % (p, self.length))
        return BitString(self.length, self.value | (1 << (self.length - p)))

    def positions(self):
        """Yield the set positions in increasing order."""
        v, n = self.value, self.length
        while v:
            low = v & -v
            yield n - low.bit_length() + 1
            v ^= low
        return

    def shift(self, k: int) -> "BitString":
        """Shift by a signed count: k >= 0 moves bits toward position L."""
        if abs(k) > self.length:
            raise ValueError("shift count %d exceeds length %d" % (k, self.length))
        if k >= 0:
            return BitString(self.length, self.value >> k)
        mask = (1 << self.length) - 1
        return BitString(self.length, (self.value << -k) & mask)

    def __rshift__(self, k: int) -> "BitString":
        return self.shift(k)

    def __lshift__(self, k: int) -> "BitString":
        return self.shift(-k)

    def _check_same_length(self, other: "BitString"):
        if self.length != other.length:
            raise ValueError(
                "length mismatch: %d vs %d" % (self.length, other.length)
            )

    def __and__(self, other: "BitString") -> "BitString":
        self._check_same_length(other)
        return BitString(self.length, self.value & other.value)

    def __or__(self, other: "BitString") -> "BitString":
        self._check_same_length(other)
        return BitString(self.length, self.value | other.value)

    def __xor__(self, other: "BitString") -> "BitString":
        self._check_same_length(other)
        return BitString(self.length, self.value ^ other.value)

    def __invert__(self) -> "BitString":
        return BitString(self.length, self.value ^ ((1 << self.length) - 1))

    def __sub__(self, other: "BitString") -> "BitString":
        """Subtraction modulo 2**L; borrows propagate across any length."""
        self._check_same_length(other)
        return BitString(
            self.length, (self.value - other.value) % (1 << self.length)
        )

    def __mul__(self, other: "BitString") -> "BitString":
        """Integer product, returned at length len(a) + len(b) (exact)."""
        if self.length > WORD_BITS or other.length > WORD_BITS:
            raise ValueError(
                "mul operands must fit a %d-bit word" % WORD_BITS
            )
        return BitString(self.length + other.length, self.value * other.value)

    def resize(self, length: int) -> "BitString":
        """Reinterpret at a new length, keeping the low (rightmost) bits."""
        if length < 1:
            raise ValueError("BitString length must be >= 1")
        return BitString(length, self.value & ((1 << length) - 1))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitString)
            and self.length == other.length
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.length, self.value))

    def __repr__(self):
        return "BitString(%r)" % self.to01()
