"""Algebras induced on one-point multiplicative stabilizers, the order
isomorphism between right stabilizers, and isomorphism testing.

For an idempotent x the left stabilizer carrier gets bot = x and top = 1
with all operations restricted; the right stabilizer carrier gets bot = 0,
top = x, restricted mul/meet/join and the implication
``a ~> b = mul(x, imp(a, b))``.  One-element carriers are reported as
trivial rather than validated; closure or axiom failures are reported on
the result, not raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    FiniteMtlAlgebra,
    InternalConsistencyError,
    ValidationReport,
    construct,
    require_validated,
    validate,
)
from .subsets import Subset, singleton
from .stabilizers import impl_left, impl_right, mult_left, mult_right


class NotIdempotentError(ValueError):
    pass


class NotMvError(ValueError):
    pass


def _require_idempotent(A: FiniteMtlAlgebra, x: int, permissive: bool) -> None:
    if not permissive and A.mul[x][x] != x:
        raise NotIdempotentError(
            f"element {A.labels[x]} is not idempotent; "
            "pass permissive=True to explore anyway"
        )


@dataclass
class InducedAlgebra:
    parent: FiniteMtlAlgebra
    carrier: Subset
    embed: tuple[int, ...]          # induced index -> parent element
    algebra: FiniteMtlAlgebra | None
    trivial: bool = False
    closure_violations: list[tuple[str, int, int, int]] = field(default_factory=list)
    report: ValidationReport | None = None

    @property
    def ok(self) -> bool:
        return (self.algebra is not None and self.report is not None
                and self.report.valid)


def _restrict(A: FiniteMtlAlgebra, members: tuple[int, ...], table, name: str,
              violations: list) -> list[list[int]] | None:
    pos = {e: i for i, e in enumerate(members)}
    rows = []
    for a in members:
        row = []
        for b in members:
            r = table[a][b]
            if r not in pos:
                violations.append((name, a, b, r))
                return None
            row.append(pos[r])
        rows.append(row)
    return rows


def _build(A: FiniteMtlAlgebra, carrier: Subset, bot_elt: int, top_elt: int,
           imp_formula) -> InducedAlgebra:
    members = carrier.members()
    result = InducedAlgebra(parent=A, carrier=carrier, embed=members, algebra=None)
    if len(members) < 2:
        result.trivial = True
        return result
    pos = {e: i for i, e in enumerate(members)}
    # Non-idempotent x (permissive mode) can leave a designated constant
    # outside its own stabilizer.
    for kind, elt in (("bot", bot_elt), ("top", top_elt)):
        if elt not in pos:
            result.closure_violations.append((kind, elt, elt, elt))
    if result.closure_violations:
        return result
    violations = result.closure_violations
    mul = _restrict(A, members, A.mul, "mul", violations)
    meet = _restrict(A, members, A.meet, "meet", violations)
    join = _restrict(A, members, A.join, "join", violations)
    imp_rows = None
    if not violations:
        imp_rows = []
        for a in members:
            row = []
            for b in members:
                r = imp_formula(a, b)
                if r not in pos:
                    violations.append(("imp", a, b, r))
                    break
                row.append(pos[r])
            else:
                imp_rows.append(row)
                continue
            break
    if violations:
        return result
    result.algebra = construct(
        len(members), mul, imp_rows, meet, join,
        bot=pos[bot_elt], top=pos[top_elt],
        labels=tuple(A.labels[e] for e in members),
        name=f"{A.name or 'algebra'}|{A.labels[bot_elt]}..{A.labels[top_elt]}",
    )
    result.report = validate(result.algebra)
    return result


def left_mult_algebra(A: FiniteMtlAlgebra, x: int,
                      permissive: bool = False) -> InducedAlgebra:
    """The algebra on mult_left({x}) with bot = x, top = 1."""
    require_validated(A)
    _require_idempotent(A, x, permissive)
    carrier = mult_left(A, singleton(A, x))
    return _build(A, carrier, x, A.top, lambda a, b: A.imp[a][b])


def right_mult_algebra(A: FiniteMtlAlgebra, x: int,
                       permissive: bool = False) -> InducedAlgebra:
    """The algebra on mult_right({x}) with bot = 0, top = x and the
    implication a ~> b = mul(x, imp(a, b))."""
    require_validated(A)
    _require_idempotent(A, x, permissive)
    carrier = mult_right(A, singleton(A, x))
    return _build(A, carrier, A.bot, x, lambda a, b: A.mul[x][A.imp[a][b]])


def order_iso_right(A: FiniteMtlAlgebra, x: int) -> dict[int, int]:
    """The order isomorphism mult_right({x}) -> impl_right({x}).

    Maps a to imp(x, a); the inverse is a to mul(x, a).  Totality,
    bijectivity, order preservation both ways, and the two round trips are
    all asserted; x must be idempotent.
    """
    require_validated(A)
    _require_idempotent(A, x, permissive=False)
    source = mult_right(A, singleton(A, x))
    target = impl_right(A, singleton(A, x))
    g = {a: A.imp[x][a] for a in source.members()}

    def fail(reason: str):
        raise InternalConsistencyError(
            f"order isomorphism fails at x={A.labels[x]}: {reason}"
        )

    if any(v not in target for v in g.values()):
        fail("image leaves the right implicative stabilizer")
    if len(set(g.values())) != len(g) or len(g) != len(target):
        fail("map is not a bijection")
    for a in source.members():
        if A.mul[x][g[a]] != a:
            fail("inverse round trip g then mul-by-x is not the identity")
    for u in target.members():
        if A.imp[x][A.mul[x][u]] != u:
            fail("round trip mul-by-x then g is not the identity")
    for a in source.members():
        for b in source.members():
            if A.meet[a][b] == a and A.meet[g[a]][g[b]] != g[a]:
                fail("map does not preserve order")
    for u in target.members():
        for v in target.members():
            if A.meet[u][v] == u and A.meet[A.mul[x][u]][A.mul[x][v]] != A.mul[x][u]:
                fail("inverse does not preserve order")
    return g


def mv_left_iso(A: FiniteMtlAlgebra, x: int) -> dict[int, int]:
    """Order isomorphism impl_left({x}) -> mult_right({x}) on MV algebras.

    Composes the left/right stabilizer equality available on MV algebras
    with the inverse of order_iso_right; maps a to mul(x, a).
    """
    from .classify import is_mv

    require_validated(A)
    if not is_mv(A):
        raise NotMvError("left-to-right stabilizer isomorphism needs an MV algebra")
    _require_idempotent(A, x, permissive=False)
    left = impl_left(A, singleton(A, x))
    right = impl_right(A, singleton(A, x))
    if left != right:
        raise InternalConsistencyError(
            f"left and right implicative stabilizers differ at x={A.labels[x]}"
        )
    order_iso_right(A, x)
    h = {a: A.mul[x][a] for a in left.members()}
    target = mult_right(A, singleton(A, x))
    if sorted(h.values()) != list(target.members()):
        raise InternalConsistencyError(
            f"composed map is not a bijection at x={A.labels[x]}"
        )
    for a in left.members():
        for b in left.members():
            if A.meet[a][b] == a and A.meet[h[a]][h[b]] != h[a]:
                raise InternalConsistencyError(
                    f"composed map does not preserve order at x={A.labels[x]}"
                )
    return h


def _order_profile(A: FiniteMtlAlgebra, x: int) -> tuple[int, int, bool]:
    below = sum(1 for y in range(A.n) if A.meet[y][x] == y)
    above = sum(1 for y in range(A.n) if A.meet[x][y] == x)
    return (below, above, A.mul[x][x] == x)


def check_mtl_iso(A: FiniteMtlAlgebra, B: FiniteMtlAlgebra) -> dict[int, int] | None:
    """An isomorphism A -> B preserving all four tables and the constants,
    or None.  Backtracking over order-profile-compatible bijections."""
    require_validated(A)
    require_validated(B)
    if A.n != B.n:
        return None
    pa = [_order_profile(A, x) for x in range(A.n)]
    pb = [_order_profile(B, x) for x in range(B.n)]
    if sorted(pa) != sorted(pb):
        return None

    mapping: dict[int, int] = {A.bot: B.bot, A.top: B.top}
    if pa[A.bot] != pb[B.bot] or pa[A.top] != pb[B.top]:
        return None
    used = {B.bot, B.top}
    rest = [x for x in range(A.n) if x not in (A.bot, A.top)]

    def consistent(x: int, y: int) -> bool:
        for name in ("mul", "imp", "meet", "join"):
            ta, tb = getattr(A, name), getattr(B, name)
            for u, v in mapping.items():
                for (p, q), (r, s) in (((x, u), (y, v)), ((u, x), (v, y))):
                    img = mapping.get(ta[p][q])
                    if img is not None and img != tb[r][s]:
                        return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(rest):
            return True
        x = rest[i]
        for y in range(B.n):
            if y in used or pb[y] != pa[x]:
                continue
            if not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if backtrack(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    if not backtrack(0):
        return None
    # Full re-check: the incremental test only sees pairs inside the map.
    for name in ("mul", "imp", "meet", "join"):
        ta, tb = getattr(A, name), getattr(B, name)
        for x in range(A.n):
            for y in range(A.n):
                if mapping[ta[x][y]] != tb[mapping[x]][mapping[y]]:
                    return None
    return dict(sorted(mapping.items()))
