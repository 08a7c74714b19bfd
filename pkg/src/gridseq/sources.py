"""Lazy, total, 1-based integer sequences used as transformation inputs.

Built-in kinds: the naturals, the primes, Euler's totient, fixed-base
powers ``n -> m**n``, explicit lists, and file-backed lists (one integer
per line, index = line number).  Values are plain Python ints, so they are
arbitrary precision; what is bounded instead is the work a source will
agree to do, via a bit budget on power values and an index cap on the
prime sieve.

The prime and totient caches are shared, append-only memos.  They are not
locked: warm them from a single thread, or accept that concurrent first
hits may duplicate work.
"""

from math import isqrt, log
from pathlib import Path

DEFAULT_BIT_BUDGET = 1_000_000
PRIME_INDEX_CAP = 1_000_000


def brief_int(n: int) -> str:
    """Render n for error messages; huge values by bit length, not digits."""
    if abs(n) < 10**18:
        return str(n)
    return f"a {n.bit_length()}-bit integer"


class SourceError(Exception):
    """Base for source evaluation failures; carries the offending index."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SourceExhaustedError(SourceError):
    """A finite source was asked past its last term."""


class BudgetExceededError(SourceError):
    """Producing the term would blow the configured size budget."""


class NonPositiveTermError(SourceError):
    """A term that must be a positive index turned out not to be."""


class SequenceSource:
    """A total map from positive index to integer value."""

    def __init__(self, name: str, fn):
        self.name = name
        self._fn = fn

    def value(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"sequence index must be >= 1, got {n}")
        return self._fn(n)

    def prefix(self, count: int) -> list[int]:
        return [self.value(n) for n in range(1, count + 1)]

    def __repr__(self):
        return f"SequenceSource({self.name!r})"


class _PrimeCache:
    """Sieve of Eratosthenes regrown with a doubling bound."""

    def __init__(self):
        self._primes = [2, 3, 5, 7, 11, 13]
        self._sieved_to = 13

    def _resieve(self, bound: int) -> None:
        sieve = bytearray([1]) * (bound + 1)
        sieve[0] = sieve[1] = 0
        for p in range(2, isqrt(bound) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        self._primes = [k for k in range(2, bound + 1) if sieve[k]]
        self._sieved_to = bound

    def _grow_count(self, n: int) -> None:
        while len(self._primes) < n:
            if n >= 6:
                # p_n < n (ln n + ln ln n) for n >= 6
                bound = int(n * (log(n) + log(log(n)))) + 10
            else:
                bound = 15
            self._resieve(max(bound, 2 * self._sieved_to))

    def prime(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"prime index must be >= 1, got {n}")
        if n > PRIME_INDEX_CAP:
            raise BudgetExceededError(
                f"prime index {brief_int(n)} exceeds the sieve cap {PRIME_INDEX_CAP}",
                index=n,
            )
        self._grow_count(n)
        return self._primes[n - 1]

    def primes_through(self, bound: int) -> list[int]:
        if bound > self._sieved_to:
            self._resieve(max(bound, 2 * self._sieved_to))
        return self._primes


_prime_cache = _PrimeCache()
_phi_memo: dict[int, int] = {}


def nth_prime(n: int) -> int:
    """The n-th prime (2 is the first)."""
    return _prime_cache.prime(n)


def totient(n: int) -> int:
    """Euler's totient, by trial-division factorisation, memoised."""
    if n < 1:
        raise ValueError(f"totient wants a positive argument, got {n}")
    cached = _phi_memo.get(n)
    if cached is not None:
        return cached
    result = n
    m = n
    for p in _prime_cache.primes_through(isqrt(n) + 1):
        if p * p > m:
            break
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
    if m > 1:
        result -= result // m
    _phi_memo[n] = result
    return result


def identity() -> SequenceSource:
    return SequenceSource("id", lambda n: n)


def primes() -> SequenceSource:
    return SequenceSource("primes", nth_prime)


def euler_phi() -> SequenceSource:
    return SequenceSource("phi", totient)


def power_base(m: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> SequenceSource:
    """The powers m**1, m**2, ... of a fixed base m > 1."""
    if m <= 1:
        raise ValueError(f"power base must be > 1, got {m}")

    def fn(n, _bits=m.bit_length() - 1):
        # m**n has at least n*(bit_length(m)-1) bits; refuse before computing
        if n * _bits > bit_budget:
            raise BudgetExceededError(
                f"{m}**{brief_int(n)} would exceed the {bit_budget}-bit value budget",
                index=n,
            )
        return m**n

    return SequenceSource(f"pow:{m}", fn)


def geometric(p: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> SequenceSource:
    """Same values as power_base; the conventional name when p is prime."""
    src = power_base(p, bit_budget)
    src.name = f"geo:{p}"
    return src


def from_list(values) -> SequenceSource:
    values = [int(v) for v in values]

    def fn(n):
        if n > len(values):
            raise SourceExhaustedError(
                f"list source has {len(values)} terms, index {brief_int(n)} requested",
                index=n,
            )
        return values[n - 1]

    return SequenceSource(f"list:{','.join(map(str, values))}", fn)


def from_file(path) -> SequenceSource:
    """One integer per line; the index of a term is its line number."""
    path = Path(path)
    lines = path.read_text().splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    values = []
    for lineno, raw in enumerate(lines, 1):
        try:
            values.append(int(raw.strip()))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not an integer: {raw!r}") from None
    src = from_list(values)
    src.name = f"file:{path}"
    return src


def custom(fn, name: str = "custom") -> SequenceSource:
    return SequenceSource(name, fn)


def parse_source(text: str) -> SequenceSource:
    """Parse ``id``, ``primes``, ``phi``, ``pow:<m>``, ``geo:<p>``, ``list:<v,...>``, ``file:<path>``."""
    if text == "id":
        return identity()
    if text == "primes":
        return primes()
    if text == "phi":
        return euler_phi()
    kind, sep, body = text.partition(":")
    if sep:
        if kind == "pow":
            return power_base(int(body))
        if kind == "geo":
            return geometric(int(body))
        if kind == "list":
            return from_list(v for v in body.split(","))
        if kind == "file":
            return from_file(body)
    raise ValueError(f"unknown source spec {text!r}")
