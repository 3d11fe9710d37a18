"""The six stabilizer operators and the join co-annihilator.

For a nonempty subset X:

    impl_left(X)   = {a | imp(a, x) == x for all x in X}
    impl_right(X)  = {a | imp(x, a) == a for all x in X}
    impl_stab(X)   = impl_left(X) & impl_right(X)
    mult_left(X)   = {a | mul(a, x) == x for all x in X}
    mult_right(X)  = {a | mul(x, a) == a for all x in X}
    mult_stab(X)   = mult_left(X) & mult_right(X)
    ortho(X)       = {a | join(a, x) == top for all x in X}

The universal quantifier is applied verbatim (intersection over the members
of X).  Empty X is rejected everywhere: empty results are legal, empty
inputs are not.
"""

from __future__ import annotations

from .core import FiniteMtlAlgebra, require_validated
from .subsets import Subset, require_nonempty


def _fixed_mask(A: FiniteMtlAlgebra, key: str, fixed) -> tuple[int, ...]:
    cache = A._mask_cache()
    masks = cache.get(key)
    if masks is None:
        n = A.n
        masks = tuple(
            sum(1 << a for a in range(n) if fixed(a, x)) for x in range(n)
        )
        cache[key] = masks
    return masks


def _intersect(A: FiniteMtlAlgebra, X: Subset, masks: tuple[int, ...]) -> Subset:
    require_validated(A)
    require_nonempty(X)
    if X.algebra is not A:
        raise ValueError("subset belongs to a different algebra")
    bits = (1 << A.n) - 1
    for x in X.members():
        bits &= masks[x]
    return Subset(A, bits)


def impl_left(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    masks = _fixed_mask(A, "impl_left", lambda a, x: A.imp[a][x] == x)
    return _intersect(A, X, masks)


def impl_right(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    masks = _fixed_mask(A, "impl_right", lambda a, x: A.imp[x][a] == a)
    return _intersect(A, X, masks)


def impl_stab(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    return impl_left(A, X) & impl_right(A, X)


def ortho(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    masks = _fixed_mask(A, "ortho", lambda a, x: A.join[a][x] == A.top)
    return _intersect(A, X, masks)


def mult_left(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    masks = _fixed_mask(A, "mult_left", lambda a, x: A.mul[a][x] == x)
    return _intersect(A, X, masks)


def mult_right(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    masks = _fixed_mask(A, "mult_right", lambda a, x: A.mul[x][a] == a)
    return _intersect(A, X, masks)


def mult_stab(A: FiniteMtlAlgebra, X: Subset) -> Subset:
    return mult_left(A, X) & mult_right(A, X)


SUITE_ORDER = (
    ("impl_left", impl_left),
    ("impl_right", impl_right),
    ("impl_stab", impl_stab),
    ("ortho", ortho),
    ("mult_left", mult_left),
    ("mult_right", mult_right),
    ("mult_stab", mult_stab),
)


def stabilizer_suite(A: FiniteMtlAlgebra, X: Subset):
    """All seven sets for one X, as labelled report records."""
    from .report import Report

    require_nonempty(X)
    report = Report()
    report.add("stab", "set", X.render())
    for name, op in SUITE_ORDER:
        report.add("stab", name, op(A, X).render())
    return report
