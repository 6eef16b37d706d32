"""Integer factorization under an explicit budget.

Trial division up to a configurable bound, then Brent's variant of Pollard's
rho with deterministic seeds and an iteration cap.  Whatever cannot be split
within the budget is returned as an unfactored cofactor, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt

from .errors import NotPrime

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> tuple:
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i, v in enumerate(sieve) if v)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic below 3.3 * 10**24; beyond that a strong probable prime test.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p) -> int:
    p = int(p)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _brent(n: int, c: int, max_iter: int):
    """One Pollard-Brent run; returns a nontrivial factor or None."""
    y, m, g, r, q = 2, 128, 1, 1, 1
    x = ys = y
    it = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        it += r
        if it > max_iter:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


@dataclass
class Factorization:
    """Prime factorization of ``n`` (up to sign), possibly incomplete."""

    n: int
    primes: dict = field(default_factory=dict)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def square_primes(self):
        """Primes p with p^2 | n among the factored part."""
        return sorted(p for p, e in self.primes.items() if e >= 2)


def factor_integer(n: int, trial_bound: int = 10**6, rho_iterations: int = 200_000) -> Factorization:
    n = abs(int(n))
    res = Factorization(n)
    if n < 2:
        return res
    primes = res.primes
    for p in primes_up_to(trial_bound):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            primes[p] = e
        if p * p > n:
            break
    if n == 1:
        return res
    if n <= trial_bound**2 or is_prime(n):
        primes[n] = primes.get(n, 0) + 1
        return res
    stack = [n]
    left = []
    while stack:
        m = stack.pop()
        if is_prime(m):
            primes[m] = primes.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        for c in range(1, 6):
            d = _brent(m, c, rho_iterations)
            if d:
                stack.extend((d, m // d))
                break
        else:
            left.append(m)
    cof = 1
    for m in left:
        cof *= m
    res.cofactor = cof
    return res
