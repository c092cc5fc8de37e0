"""Arithmetic in prime fields GF(q) for small prime q.

Field elements are plain ints kept in canonical residue form 0 <= a < q.
A ``GF`` instance is the arithmetic table for one modulus; everything is
table-free modular arithmetic (the bit-packed fast path for q = 2 lives
in the weights module, not here).
"""

from __future__ import annotations

from .errors import DomainError

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for i in range(2, int(n**0.5) + 1):
        if n % i == 0:
            return False
    return True


class GF:
    """The field GF(q), q prime, 2 <= q <= 13.

    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("q", "_inv")

    def __init__(self, q: int) -> None:
        if not isinstance(q, int) or not is_prime(q):
            raise DomainError(f"q={q!r} is not prime")
        if q not in SUPPORTED_PRIMES:
            raise DomainError(f"q={q} unsupported; expected one of {SUPPORTED_PRIMES}")
        object.__setattr__(self, "q", q)
        # q <= 13, so a full inverse table is 12 entries at most
        object.__setattr__(
            self, "_inv", tuple(pow(a, q - 2, q) for a in range(1, q))
        )

    def __setattr__(self, name, value):
        raise AttributeError("GF instances are immutable")

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise DomainError(f"0 has no inverse in GF({self.q})")
        return self._inv[a - 1]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.q)
        return pow(a % self.q, e, self.q)

    def elements(self) -> range:
        """All residues 0 .. q-1."""
        return range(self.q)

    def units(self) -> range:
        """Nonzero residues 1 .. q-1."""
        return range(1, self.q)
