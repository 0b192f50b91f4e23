"""Prime-field arithmetic with per-context operation counting.

Every multiplication (M), squaring (S), inversion (I) and addition/
subtraction (A) performed through :class:`FieldElement` operators is
tallied on the owning field's active :class:`OpCounter`, so the exact
cost of a formula can be asserted rather than estimated.  Character and
square-root queries (`chi`, `sqrt`) are classification utilities and are
deliberately uncounted.
"""

from __future__ import annotations

import random
from contextlib import contextmanager

from .errors import DivisionByZero, FieldMismatch, NotASquare

# Below this bound the fixed witness set is a proven deterministic test.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_prime(n: int, rounds: int = 64) -> bool:
    """Miller-Rabin primality test.

    Uses the deterministic witness set below its proven bound, otherwise
    `rounds` bases drawn from an RNG seeded by n itself (so results are
    reproducible without sacrificing independence across candidates).
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1

    def witness(a: int) -> bool:
        # True if a proves n composite.
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return False
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    if n < _MR_DETERMINISTIC_BOUND:
        bases = _MR_WITNESSES
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(rounds)]
    return not any(witness(a) for a in bases)


class OpCounter:
    """Monotone tallies of field operations.

    `m`, `s`, `i`, `a` count base-field multiplications, squarings,
    inversions and additions/subtractions.  The `ext_*` fields count the
    same kinds at the quadratic-extension level; extension operations
    additionally contribute their base-field work to `m`/`s`/`i`/`a`.
    """

    __slots__ = ("m", "s", "i", "a", "ext_m", "ext_s", "ext_i", "ext_a")

    def __init__(self):
        self.m = self.s = self.i = self.a = 0
        self.ext_m = self.ext_s = self.ext_i = self.ext_a = 0

    def reset(self) -> None:
        self.__init__()

    def as_dict(self) -> dict:
        return {"M": self.m, "S": self.s, "I": self.i, "A": self.a}

    def ext_as_dict(self) -> dict:
        return {"M": self.ext_m, "S": self.ext_s, "I": self.ext_i, "A": self.ext_a}

    def snapshot(self) -> tuple:
        return (self.m, self.s, self.i, self.a,
                self.ext_m, self.ext_s, self.ext_i, self.ext_a)

    def delta(self, since: tuple) -> dict:
        now = self.snapshot()
        d = [x - y for x, y in zip(now, since)]
        return {"M": d[0], "S": d[1], "I": d[2], "A": d[3],
                "ext_M": d[4], "ext_S": d[5], "ext_I": d[6], "ext_A": d[7]}

    def __repr__(self):
        return (f"OpCounter(M={self.m}, S={self.s}, I={self.i}, A={self.a}, "
                f"ext={self.ext_m}M+{self.ext_s}S+{self.ext_i}I+{self.ext_a}A)")


class PrimeField:
    """The field F_p for an odd prime p > 3.

    Calling the field coerces integers (of either sign) or elements to
    canonical residues in [0, p).  The field owns the active OpCounter;
    swap it per task with `counting()` when isolated tallies are needed.
    """

    def __init__(self, p: int, check_prime: bool = True):
        if p <= 3:
            raise ValueError(f"modulus must exceed 3, got {p}")
        if check_prime and not is_probable_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.counter = OpCounter()

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self and value.field.p != self.p:
                raise FieldMismatch(f"element of F_{value.field.p} used in F_{self.p}")
            return value
        return FieldElement(int(value) % self.p, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    @property
    def size(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return 1

    @contextmanager
    def counting(self, ctx: OpCounter):
        """Temporarily route all arithmetic in this field through `ctx`."""
        saved = self.counter
        self.counter = ctx
        try:
            yield ctx
        finally:
            self.counter = saved

    def elements(self):
        for v in range(self.p):
            yield FieldElement(v, self)

    def random_element(self, rng: random.Random) -> FieldElement:
        return FieldElement(rng.randrange(self.p), self)

    def chi(self, x) -> int:
        """Quadratic character: 0 for zero, +1 for squares, -1 otherwise."""
        v = x.value if isinstance(x, FieldElement) else int(x) % self.p
        if v == 0:
            return 0
        return 1 if pow(v, (self.p - 1) // 2, self.p) == 1 else -1

    def sqrt(self, x) -> FieldElement:
        """Canonical square root (the smaller of the two), or NotASquare."""
        v = x.value if isinstance(x, FieldElement) else int(x) % self.p
        if v == 0:
            return self.zero
        if self.chi(v) != 1:
            raise NotASquare(f"{v} is not a square mod {self.p}")
        p = self.p
        if p % 4 == 3:
            r = pow(v, (p + 1) // 4, p)
        else:
            r = _tonelli_shanks(v, p)
        return FieldElement(min(r, p - r), self)

    def from_hex(self, text: str) -> FieldElement:
        return self(int(text, 16))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def _tonelli_shanks(v: int, p: int) -> int:
    """Square root mod p for p ≡ 1 (mod 4); v must be a nonzero square."""
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(v, (q + 1) // 2, p)
    t = pow(v, q, p)
    m = s
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


class FieldElement:
    """An immutable residue in [0, p).  Arithmetic counts on the field's
    active OpCounter: * -> M, square() -> S, inverse() -> I, +/- -> A;
    ** decomposes into its square-and-multiply M/S uses."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value
        self.field = field

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field.p != self.field.p:
                raise FieldMismatch(
                    f"mixed moduli {self.field.p} and {other.field.p}")
            return other
        if isinstance(other, int):
            return FieldElement(other % self.field.p, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        self.field.counter.a += 1
        return FieldElement((self.value + o.value) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        self.field.counter.a += 1
        return FieldElement((self.value - o.value) % self.field.p, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        self.field.counter.a += 1
        return FieldElement(-self.value % self.field.p, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        self.field.counter.m += 1
        return FieldElement(self.value * o.value % self.field.p, self.field)

    __rmul__ = __mul__

    def square(self) -> "FieldElement":
        self.field.counter.s += 1
        return FieldElement(self.value * self.value % self.field.p, self.field)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 mod {self.field.p}")
        self.field.counter.i += 1
        return FieldElement(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "FieldElement":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return self.field.one
        acc = self
        for bit in bin(k)[3:]:
            acc = acc.square()
            if bit == "1":
                acc = acc * self
        return acc

    def is_zero(self) -> bool:
        return self.value == 0

    def chi(self) -> int:
        return self.field.chi(self)

    def sqrt(self) -> "FieldElement":
        return self.field.sqrt(self)

    def signed(self) -> int:
        """Representative of least magnitude (negative when > p/2)."""
        return self.value if self.value <= self.field.p // 2 else self.value - self.field.p

    def to_hex(self) -> str:
        return format(self.value, "x")

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __repr__(self):
        return f"{self.signed()}"
