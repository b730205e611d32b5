"""Closed gcd formulas for seaweeds with few parts, and Frobenius predicates.

Every formula raises :class:`FormulaDomainError` outside its domain instead
of quietly falling back to a meander count; see :func:`formula_index` for
the dispatcher the CLI uses.
"""

from __future__ import annotations

from math import gcd

from .compositions import SeaweedSpec, odd_part_count
from .panyushev import index_parabolic_c

__all__ = [
    "FormulaDomainError",
    "index_elashvili",
    "index_a_small",
    "index_c_singletons",
    "index_c_ab_c",
    "is_frobenius_c_ab_c",
    "index_c_n_ab",
    "is_frobenius_c_n_ab",
    "necessary_frobenius",
    "formula_index",
]


class FormulaDomainError(ValueError):
    """Arguments lie outside the range where a closed formula is known."""


def _positive(*xs: int) -> None:
    if any(x < 1 for x in xs):
        raise FormulaDomainError(f"parts must be positive, got {xs}")


def index_elashvili(a: int, b: int) -> int:
    """Index of the maximal parabolic ``p^A((a,b) | (a+b))``."""
    _positive(a, b)
    return gcd(a, b) - 1


def index_a_small(shape: str, parts: tuple[int, ...]) -> int:
    """``gcd(a+b, b+c) - 1`` for ``(a,b,c)|(n)`` (``shape="3|1"``) or
    ``(a,b)|(c,d)`` (``shape="2|2"``).

    For ``"3|1"`` pass ``(a, b, c, n)``; for ``"2|2"`` pass ``(a, b, c, d)``.
    """
    if len(parts) != 4:
        raise FormulaDomainError("expected four integers")
    _positive(*parts)
    if shape == "3|1":
        a, b, c, n = parts
        if a + b + c != n:
            raise FormulaDomainError(f"a+b+c = {a + b + c} != n = {n}")
    elif shape == "2|2":
        a, b, c, d = parts
        if a + b != c + d:
            raise FormulaDomainError(f"a+b = {a + b} != c+d = {c + d}")
    else:
        raise FormulaDomainError(f"unknown shape {shape!r}")
    return gcd(a + b, b + c) - 1


def index_c_singletons(n: int, a: int, b: int) -> int:
    """Index of ``p_n^C((a) | (b))``.

    ``n`` when ``a == b``. Otherwise, with ``a > b``, strip to ``p_a^C`` and
    use the parity of ``a``: ``n - a + (a - b) // 2`` for even ``a`` and
    ``n - a + (a - b - 1) // 2`` for odd ``a``.
    """
    _positive(n, a, b)
    if a > n or b > n:
        raise FormulaDomainError("parts cannot exceed n")
    if a == b:
        return n
    if a < b:
        a, b = b, a
    if a % 2 == 0:
        return n - a + (a - b) // 2
    return n - a + (a - b - 1) // 2


def index_c_ab_c(n: int, a: int, b: int, c: int) -> int:
    """``gcd(a+b, b+c) - 1`` for ``p_n^C((a,b) | (c))`` with ``a+b=n``, ``c in {n-1, n-2}``."""
    _positive(n, a, b, c)
    if a + b != n:
        raise FormulaDomainError("need a + b = n")
    if c not in (n - 1, n - 2):
        raise FormulaDomainError("need c = n-1 or c = n-2")
    return gcd(a + b, b + c) - 1


def is_frobenius_c_ab_c(n: int, a: int, b: int, c: int) -> bool:
    """Frobenius test for ``p_n^C((a,b) | (c))`` with ``a+b=n``, ``1 <= c <= n``.

    For ``c <= n-4`` the answer is always no: at most three odd parts exist
    but the odd-part condition would need ``n - c >= 4`` of them.
    """
    _positive(n, a, b, c)
    if a + b != n or c > n:
        raise FormulaDomainError("need a + b = n and c <= n")
    g = gcd(a + b, b + c)
    if c in (n - 1, n - 2):
        return g == 1
    if c == n - 3:
        return bool(a % 2 and b % 2 and c % 2) and g == 2
    return False


def index_c_n_ab(n: int, a: int, b: int) -> int:
    """Index of ``p_n^C((n) | (a,b))`` for ``a+b in {n-1, n-2}``."""
    _positive(n, a, b)
    s = a + b
    if s == n - 1:
        return gcd(s, b + 1) - 1
    if s == n - 2:
        return gcd(s, b + 2) - 1
    raise FormulaDomainError("need a + b = n-1 or a + b = n-2")


def is_frobenius_c_n_ab(n: int, a: int, b: int) -> bool:
    _positive(n, a, b)
    s = a + b
    if s > n:
        raise FormulaDomainError("need a + b <= n")
    if s == n - 1:
        return gcd(s, b + 1) == 1
    if s == n - 2:
        return gcd(s, b + 2) == 1
    if s == n - 3:
        return bool(n % 2 and a % 2 and b % 2) and gcd(s, b + 3) == 2
    return False


def necessary_frobenius(spec: SeaweedSpec) -> bool:
    """Necessary (not sufficient) condition for index zero.

    Type A: exactly two odd parts. Type C, ordered so ``sum(b) <= sum(a)``:
    ``sum(a) == n`` and the number of odd parts equals ``n - sum(b)``.
    """
    a, b = spec.a, spec.b
    if spec.algebra == "A":
        return odd_part_count(a, b) == 2
    if b.total > a.total:
        a, b = b, a
    return a.total == spec.n and odd_part_count(a, b) == spec.n - b.total


def formula_index(spec: SeaweedSpec) -> tuple[str, int | None]:
    """Pick the closed formula covering ``spec``.

    Returns ``(name, value)``; ``value`` is ``None`` when only a Frobenius
    characterization applies and it says the index is positive. Raises
    :class:`FormulaDomainError` when no formula covers the spec.
    """
    n = spec.n
    for a, b in ((spec.a, spec.b), (spec.b, spec.a)):
        la, lb = len(a), len(b)
        if spec.algebra == "A":
            if la == 2 and lb == 1:
                return "elashvili", index_elashvili(*a)
            if la == 3 and lb == 1:
                return "a-three-one", index_a_small("3|1", (*a, n))
            if la == 2 and lb == 2:
                return "a-two-two", index_a_small("2|2", (*a, *b))
            if la == 1 and lb == 1:
                return "full", n - 1
            continue
        if lb == 0:
            return "c-parabolic", index_parabolic_c(n, a)
        if la == 1 and lb == 1:
            return "c-singletons", index_c_singletons(n, a[0], b[0])
        if la == 2 and lb == 1 and a.total == n:
            c = b[0]
            if c in (n - 1, n - 2):
                return "c-ab-c", index_c_ab_c(n, a[0], a[1], c)
            return "c-ab-c-frobenius", 0 if is_frobenius_c_ab_c(n, a[0], a[1], c) else None
        if la == 1 and lb == 2 and a[0] == n:
            x, y = b
            if x + y in (n - 1, n - 2):
                return "c-n-ab", index_c_n_ab(n, x, y)
            return "c-n-ab-frobenius", 0 if is_frobenius_c_n_ab(n, x, y) else None
    raise FormulaDomainError(f"no closed formula covers {spec.render()}")
