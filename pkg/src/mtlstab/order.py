"""Filters, lattice ideals, generation, primality, the idempotent center,
and subalgebra testing.

A filter is a nonempty, mul-closed, upward-closed subset; a lattice ideal is
nonempty, join-closed and downward closed.  The improper filter (the full
carrier) counts as a filter; properness is a predicate, not a type.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .core import FiniteMtlAlgebra, InternalConsistencyError, require_validated
from .subsets import Subset, require_nonempty


class NotAProperFilterError(ValueError):
    pass


class NotALatticeIdealError(ValueError):
    pass


def _upward_closure(A: FiniteMtlAlgebra, bits: int) -> int:
    out = 0
    for x in range(A.n):
        if bits >> x & 1:
            out |= A.upset_mask(x)
    return out


def _downward_closure(A: FiniteMtlAlgebra, bits: int) -> int:
    out = 0
    for x in range(A.n):
        if bits >> x & 1:
            out |= A.downset_mask(x)
    return out


def is_filter(A: FiniteMtlAlgebra, F: Subset) -> bool:
    require_validated(A)
    if F.is_empty():
        return False
    members = F.members()
    for x, y in combinations_with_replacement(members, 2):
        if A.mul[x][y] not in F:
            return False
    return _upward_closure(A, F.bits) == F.bits


def is_proper_filter(A: FiniteMtlAlgebra, F: Subset) -> bool:
    return is_filter(A, F) and F.bits != (1 << A.n) - 1


def generated_filter(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    """Least filter containing X, by product/upward closure to a fixed point."""
    require_validated(A)
    require_nonempty(X)
    bits = _upward_closure(A, X.bits)
    while True:
        new = bits
        members = [x for x in range(A.n) if bits >> x & 1]
        for x, y in combinations_with_replacement(members, 2):
            new |= 1 << A.mul[x][y]
        new = _upward_closure(A, new)
        if new == bits:
            return Subset(A, bits)
        bits = new


def is_prime_filter(A: FiniteMtlAlgebra, F: Subset) -> bool:
    """Primality of a proper filter: join(x, y) in F forces x or y in F."""
    if not is_proper_filter(A, F):
        raise NotAProperFilterError("primality is defined for proper filters only")
    for x in range(A.n):
        for y in range(x, A.n):
            if A.join[x][y] in F and x not in F and y not in F:
                return False
    return True


def all_filters(A: FiniteMtlAlgebra) -> list[Subset]:
    """Every filter, in ascending bit-pattern order.

    In a finite algebra each filter is the upset of its least element, which
    is idempotent, so closing each singleton and deduplicating finds all of
    them.  The improper filter appears as the closure of bot.
    """
    require_validated(A)
    found = {generated_filter(A, Subset(A, 1 << x)).bits for x in range(A.n)}
    return [Subset(A, bits) for bits in sorted(found)]


def is_lattice_ideal(A: FiniteMtlAlgebra, I: Subset) -> bool:
    require_validated(A)
    if I.is_empty():
        return False
    members = I.members()
    for x, y in combinations_with_replacement(members, 2):
        if A.join[x][y] not in I:
            return False
    return _downward_closure(A, I.bits) == I.bits


def principal_ideal(A: FiniteMtlAlgebra, t: int) -> Subset:
    """The downset of t."""
    require_validated(A)
    return Subset(A, A.downset_mask(t))


def principal_filter(A: FiniteMtlAlgebra, t: int) -> Subset:
    """The upset of t."""
    require_validated(A)
    return Subset(A, A.upset_mask(t))


def generated_lattice_ideal(A: FiniteMtlAlgebra, H: Subset) -> Subset:
    """Least join-closed downset containing H."""
    require_validated(A)
    require_nonempty(H)
    bits = _downward_closure(A, H.bits)
    while True:
        new = bits
        members = [x for x in range(A.n) if bits >> x & 1]
        for x, y in combinations_with_replacement(members, 2):
            new |= 1 << A.join[x][y]
        new = _downward_closure(A, new)
        if new == bits:
            return Subset(A, bits)
        bits = new


def is_prime_lattice_ideal(A: FiniteMtlAlgebra, I: Subset) -> bool:
    """Primality of a lattice ideal: meet(x, y) in I forces x or y in I."""
    if not is_lattice_ideal(A, I):
        raise NotALatticeIdealError("argument is not a lattice ideal")
    for x in range(A.n):
        for y in range(x, A.n):
            if A.meet[x][y] in I and x not in I and y not in I:
                return False
    return True


def godel_center(A: FiniteMtlAlgebra) -> Subset:
    """The idempotent elements of mul.

    Each member e must also satisfy
    ``e * (x -> y) == e * ((e * x) -> (e * y))`` for all x, y; that identity
    is a consequence of the axioms, so a failure means the algebra value was
    corrupted after validation.
    """
    require_validated(A)
    bits = 0
    for e in range(A.n):
        if A.mul[e][e] == e:
            bits |= 1 << e
    for e in range(A.n):
        if not bits >> e & 1:
            continue
        for x in range(A.n):
            for y in range(A.n):
                lhs = A.mul[e][A.imp[x][y]]
                rhs = A.mul[e][A.imp[A.mul[e][x]][A.mul[e][y]]]
                if lhs != rhs:
                    raise InternalConsistencyError(
                        f"center identity fails at e={A.labels[e]},"
                        f" x={A.labels[x]}, y={A.labels[y]}"
                    )
    return Subset(A, bits)


_SUBALG_OPS = ("mul", "imp", "meet", "join")


def subalgebra_violation(A: FiniteMtlAlgebra, S: Subset):
    """First reason S is not a subalgebra, or None.

    Returns ("missing", element) when bot or top is absent, otherwise
    (op-name, x, y, result) for the first non-closed pair in lexicographic
    scan order with operations tried as mul, imp, meet, join.
    """
    require_validated(A)
    if A.bot not in S:
        return ("missing", A.bot)
    if A.top not in S:
        return ("missing", A.top)
    tables = {name: getattr(A, name) for name in _SUBALG_OPS}
    members = S.members()
    for x in members:
        for y in members:
            for name in _SUBALG_OPS:
                r = tables[name][x][y]
                if r not in S:
                    return (name, x, y, r)
    return None


def is_subalgebra(A: FiniteMtlAlgebra, S: Subset) -> bool:
    """True iff S contains bot and top and is closed under all four tables."""
    return subalgebra_violation(A, S) is None
