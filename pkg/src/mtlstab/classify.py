"""Algebra subclasses, decided both directly and through stabilizers.

The direct predicates test the defining identity on the tables.  classify()
also evaluates the stabilizer-based characterizations of the same classes
and cross-checks the two routes; a disagreement would refute the theorem
backing the characterization and is reported as a failure record.
"""

from __future__ import annotations

from itertools import product

from .core import FiniteMtlAlgebra, require_validated
from .order import is_prime_filter, is_prime_lattice_ideal, is_proper_filter
from .report import Report
from .stabilizers import impl_left, impl_stab, mult_left, mult_right, ortho
from .subsets import Subset, full, singleton


def is_bl(A: FiniteMtlAlgebra) -> bool:
    """Divisibility: meet(x, y) == mul(x, imp(x, y)) for all pairs."""
    require_validated(A)
    return all(
        A.meet[x][y] == A.mul[x][A.imp[x][y]]
        for x, y in product(range(A.n), repeat=2)
    )


def is_mv(A: FiniteMtlAlgebra) -> bool:
    """imp(imp(x, y), y) == imp(imp(y, x), x) for all pairs."""
    require_validated(A)
    return all(
        A.imp[A.imp[x][y]][y] == A.imp[A.imp[y][x]][x]
        for x, y in product(range(A.n), repeat=2)
    )


def is_godel(A: FiniteMtlAlgebra) -> bool:
    """mul coincides with meet."""
    require_validated(A)
    return A.mul == A.meet


def is_imtl(A: FiniteMtlAlgebra) -> bool:
    """Involutive negation: neg(neg(x)) == x for every element."""
    require_validated(A)
    b = A.bot
    return all(A.imp[A.imp[x][b]][b] == x for x in range(A.n))


def is_integral_mtl(A: FiniteMtlAlgebra) -> bool:
    """No zero divisors: mul(x, y) == bot only when x or y is bot."""
    require_validated(A)
    return all(
        A.mul[x][y] != A.bot
        for x, y in product(range(A.n), repeat=2)
        if x != A.bot and y != A.bot
    )


def is_chain(A: FiniteMtlAlgebra) -> bool:
    """The lattice order is total."""
    require_validated(A)
    return all(
        A.meet[x][y] in (x, y)
        for x, y in product(range(A.n), repeat=2)
    )


def imtl_by_stabilizers(A: FiniteMtlAlgebra) -> bool:
    """Stabilizer route: left, two-sided and join stabilizers of bot agree."""
    zero = singleton(A, A.bot)
    l0 = impl_left(A, zero)
    return l0 == impl_stab(A, zero) == ortho(A, zero)


def integral_by_stabilizers(A: FiniteMtlAlgebra) -> bool:
    """Stabilizer route: left stabilizer of bot is everything except bot."""
    zero = singleton(A, A.bot)
    rest = full(A).bits & ~(1 << A.bot)
    return impl_left(A, zero) == Subset(A, rest)


def godel_by_left_stabilizers(A: FiniteMtlAlgebra) -> bool:
    """For every x the left mul stabilizer of {x} is the upset of x."""
    return all(
        mult_left(A, singleton(A, x)).bits == A.upset_mask(x)
        for x in range(A.n)
    )


def godel_by_right_stabilizers(A: FiniteMtlAlgebra) -> bool:
    """For every x the right mul stabilizer of {x} is the downset of x."""
    return all(
        mult_right(A, singleton(A, x)).bits == A.downset_mask(x)
        for x in range(A.n)
    )


def godel_chain_by_stabilizers(A: FiniteMtlAlgebra) -> bool:
    """Upset/downset equalities plus primality of every one-point stabilizer."""
    if not (godel_by_left_stabilizers(A) and godel_by_right_stabilizers(A)):
        return False
    for x in range(A.n):
        lx = mult_left(A, singleton(A, x))
        if is_proper_filter(A, lx) and not is_prime_filter(A, lx):
            return False
        rx = mult_right(A, singleton(A, x))
        if not is_prime_lattice_ideal(A, rx):
            return False
    return True


_CROSS_CHECKS = (
    # key, direct predicate, stabilizer characterization, claim refuted on split
    ("imtl", is_imtl, imtl_by_stabilizers, "T3.10-imtl"),
    ("integral", is_integral_mtl, integral_by_stabilizers, "T3.11-integral"),
    ("godel", is_godel, godel_by_left_stabilizers, "T4.9-godel"),
    ("godel", is_godel, godel_by_right_stabilizers, "T4.9-godel"),
)


def classify(A: FiniteMtlAlgebra) -> Report:
    require_validated(A)
    report = Report()
    report.add("class", "mtl", "true")
    for key, pred in (
        ("bl", is_bl), ("mv", is_mv), ("godel", is_godel),
        ("imtl", is_imtl), ("integral", is_integral_mtl), ("chain", is_chain),
    ):
        report.add("class", key, str(pred(A)).lower())

    stab_routes = {
        "imtl-stabilizer": imtl_by_stabilizers(A),
        "integral-stabilizer": integral_by_stabilizers(A),
        "godel-left-stabilizer": godel_by_left_stabilizers(A),
        "godel-right-stabilizer": godel_by_right_stabilizers(A),
        "godel-chain-stabilizer": godel_chain_by_stabilizers(A),
    }
    for key, value in stab_routes.items():
        report.add("class", key, str(value).lower())
    report.add("class", "left-stab-of-bot",
               impl_left(A, singleton(A, A.bot)).render())

    for key, direct, stab, claim in _CROSS_CHECKS:
        if direct(A) != stab(A):
            report.add_failure(
                "refutation", claim,
                f"direct {key} predicate disagrees with {stab.__name__}",
            )
    direct_chain_godel = is_godel(A) and is_chain(A)
    if direct_chain_godel != stab_routes["godel-chain-stabilizer"]:
        report.add_failure(
            "refutation", "T4.10-godel-chain",
            "direct chain+godel predicate disagrees with stabilizer route",
        )
    return report
