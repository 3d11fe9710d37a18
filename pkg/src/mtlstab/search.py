"""Standard chain families, enumeration of small algebras up to isomorphism,
canonical forms, and the three open-problem scans.

Enumeration facts used here: on a finite chain any commutative, associative,
monotone table with unit top has a residuum automatically, so chains are
enumerated by table search alone.  On non-chain lattices the residuum
max{z | mul(x, z) <= y} must additionally exist, which is checked directly;
prelinearity is filtered afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .core import FiniteMtlAlgebra, construct, validate
from .classify import is_mv
from .induced import check_mtl_iso, left_mult_algebra, right_mult_algebra
from .order import all_filters
from .stabilizers import impl_left, impl_right
from .subsets import all_nonempty_subsets, singleton
from ._pool import pmap

FAMILIES = ("lukasiewicz", "godel", "nilpotent_minimum")

CHAIN_MAX = 7
FULL_MAX = 5
FULL_MAX_OPTIN = 6


class UnknownFamilyError(ValueError):
    pass


class SizeRangeError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    size: int
    chains_only: bool = False
    dedup: bool = True
    limit: int | None = None


@dataclass(frozen=True)
class SearchFinding:
    problem: str                      # open1 | open2 | open3
    algebra: FiniteMtlAlgebra
    witness: dict[str, str]


def _chain_labels(n: int) -> tuple[str, ...]:
    interior = [chr(ord("a") + i) for i in range(n - 2)]
    return tuple(["0"] + interior + ["1"])


def _residuum_on_chain(n: int, mul) -> list[list[int]]:
    imp = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            z = n - 1
            while mul[x][z] > y:
                z -= 1
            imp[x][y] = z
    return imp


def gen_family(family: str, n: int, name: str | None = None) -> FiniteMtlAlgebra:
    """The n-element chain of a named family; always validates.

    lukasiewicz: mul(i, j) = max(0, i + j - (n-1)).
    godel: mul = min.
    nilpotent_minimum: mul(i, j) = 0 when i <= (n-1) - j, else min(i, j).
    """
    if n < 2:
        raise SizeRangeError("family chains need at least 2 elements")
    if n > 26:
        raise SizeRangeError("chain labels run out beyond 26 elements")
    if family == "lukasiewicz":
        mul = [[max(0, i + j - (n - 1)) for j in range(n)] for i in range(n)]
    elif family == "godel":
        mul = [[min(i, j) for j in range(n)] for i in range(n)]
    elif family == "nilpotent_minimum":
        mul = [[0 if i <= (n - 1) - j else min(i, j) for j in range(n)]
               for i in range(n)]
    else:
        raise UnknownFamilyError(f"unknown family {family!r}; "
                                 f"have {', '.join(FAMILIES)}")
    imp = _residuum_on_chain(n, mul)
    A = construct(n, mul, imp, labels=_chain_labels(n),
                  name=name or f"{family}{n}")
    report = validate(A)
    if not report.valid:
        raise AssertionError(f"family table failed validation: {report.violations[0]}")
    return A


# ---------------------------------------------------------------------------
# Chain enumeration.  Free entries are the pairs (i, j), 1 <= i <= j <= n-2;
# the bot row is absorbing and the top row is the unit.  The search tree is
# partitioned by the value of the first free entry so a worker pool can split
# it without coordination.

def _chain_free_entries(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n - 1) for j in range(i, n - 1)]


def _chain_tables(n: int, first_value: int | None = None) -> list[tuple]:
    entries = _chain_free_entries(n)
    mul = [[0] * n for _ in range(n)]
    for j in range(n):
        mul[n - 1][j] = mul[j][n - 1] = j
    out: list[tuple] = []

    def lower_ok(i: int, j: int, v: int) -> bool:
        # monotone against the left and upper neighbours, which row-major
        # filling (plus symmetry) has already decided
        if v < mul[i][j - 1]:
            return False
        if v < mul[i - 1][j]:
            return False
        return True

    def assoc_ok() -> bool:
        rng = range(1, n - 1)
        for x in rng:
            for y in rng:
                for z in rng:
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        return False
        return True

    def fill(k: int) -> None:
        if k == len(entries):
            if assoc_ok():
                out.append(tuple(tuple(row) for row in mul))
            return
        i, j = entries[k]
        values = range(0, i + 1)
        if k == 0 and first_value is not None:
            values = (first_value,) if first_value <= i else ()
        for v in values:
            if not lower_ok(i, j, v):
                continue
            mul[i][j] = mul[j][i] = v
            fill(k + 1)
        mul[i][j] = mul[j][i] = 0

    fill(0)
    return out


def enumerate_chains(n: int, jobs: int = 1) -> list[FiniteMtlAlgebra]:
    """All algebras on the n-chain, in ascending table order.

    Chain order is rigid, so distinct tables are distinct algebras and no
    isomorphism dedup is needed.
    """
    if not 2 <= n <= CHAIN_MAX:
        raise SizeRangeError(f"chain enumeration supports sizes 2..{CHAIN_MAX}")
    if n == 2:
        tables = _chain_tables(n)
    else:
        first_range = list(range(0, 2))  # first free entry is (1, 1): value in {0, 1}
        chunks = pmap(_ChainTask(n), first_range, jobs)
        tables = [t for chunk in chunks for t in chunk]
    tables.sort()
    out = []
    for idx, mul in enumerate(tables):
        imp = _residuum_on_chain(n, mul)
        A = construct(n, mul, imp, labels=_chain_labels(n),
                      name=f"chain{n}_{idx}")
        report = validate(A)
        if not report.valid:
            raise AssertionError(f"enumerated chain failed validation:"
                                 f" {report.violations[0]}")
        out.append(A)
    return out


class _ChainTask:
    def __init__(self, n: int):
        self.n = n

    def __call__(self, first_value: int) -> list[tuple]:
        return _chain_tables(self.n, first_value)


def enumerate_chains_via_residuum(n: int) -> list[tuple]:
    """Independent route: enumerate implication tables first, derive mul.

    Candidate tables fix imp(x, y) = top for x <= y and the top row to the
    identity; free entries (x > y) range over values >= y, antitone in x and
    monotone in y.  Candidates must satisfy the exchange law; mul is then
    recovered as min{z | x <= imp(y, z)} and kept when it is commutative,
    associative, unital, monotone and adjoint to the original table.
    Returns sorted (mul, imp) pairs for cross-checking the direct route.
    """
    if not 2 <= n <= 5:
        raise SizeRangeError("the residuum-first route is for sizes 2..5")
    top = n - 1
    entries = [(x, y) for x in range(1, n) for y in range(x) if x != top]
    imp = [[top if x <= y else 0 for y in range(n)] for x in range(n)]
    for y in range(n):
        imp[top][y] = y
    results = []

    def ok_partial(x: int, y: int, v: int) -> bool:
        if v < y:
            return False
        if y > 0 and imp[x][y - 1] > v:
            return False
        if x - 1 > y and imp[x - 1][y] < v:
            return False
        if x == top and v != y:
            return False
        return True

    def exchange_ok() -> bool:
        for x, y, z in product(range(n), repeat=3):
            if imp[x][imp[y][z]] != imp[y][imp[x][z]]:
                return False
        return True

    def derive() -> None:
        mul = [[0] * n for _ in range(n)]
        for x, y in product(range(n), repeat=2):
            zs = [z for z in range(n) if imp[y][z] >= x]
            if not zs:
                return
            z = min(zs)
            # the candidate set must be upward closed for min to be the value
            if any(w >= z and imp[y][w] < x for w in range(n)):
                return
            mul[x][y] = z
        for x, y in product(range(n), repeat=2):
            if mul[x][y] != mul[y][x] or mul[top][y] != y:
                return
        for x, y, z in product(range(n), repeat=3):
            if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                return
            if (mul[x][y] <= z) != (x <= imp[y][z]):
                return
        for x in range(n - 1):
            for y in range(n):
                if mul[x][y] > mul[x + 1][y]:
                    return
        results.append((tuple(map(tuple, mul)), tuple(map(tuple, imp))))

    def fill(k: int) -> None:
        if k == len(entries):
            if exchange_ok():
                derive()
            return
        x, y = entries[k]
        for v in range(n):
            if not ok_partial(x, y, v):
                continue
            imp[x][y] = v
            fill(k + 1)
        imp[x][y] = 0

    fill(0)
    return sorted(results)


# ---------------------------------------------------------------------------
# Full enumeration: bounded lattices first, then table search on each.

def _bounded_lattices(n: int) -> list[tuple]:
    """Order matrices of bounded lattices on 0..n-1 with 0 bottom, n-1 top,
    in natural labelling (the order refines the integer order), so every
    isomorphism class appears at least once."""
    interior = range(1, n - 1)
    pairs = [(i, j) for i in interior for j in interior if i < j]
    lattices = []
    for bitmask in range(1 << len(pairs)):
        leq = [[False] * n for _ in range(n)]
        for i in range(n):
            leq[i][i] = True
            leq[0][i] = True
            leq[i][n - 1] = True
        for k, (i, j) in enumerate(pairs):
            if bitmask >> k & 1:
                leq[i][j] = True
        if not all(
            leq[x][z] or not (leq[x][y] and leq[y][z])
            for x, y, z in product(range(n), repeat=3)
        ):
            continue
        meet = [[None] * n for _ in range(n)]
        join = [[None] * n for _ in range(n)]
        good = True
        for x in range(n):
            for y in range(n):
                lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
                best = [m for m in lower if all(leq[z][m] for z in lower)]
                if len(best) != 1:
                    good = False
                    break
                meet[x][y] = best[0]
                upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
                best = [m for m in upper if all(leq[m][z] for z in upper)]
                if len(best) != 1:
                    good = False
                    break
                join[x][y] = best[0]
            if not good:
                break
        if good:
            lattices.append((tuple(map(tuple, meet)), tuple(map(tuple, join))))
    return lattices


def _tables_on_lattice(n: int, meet, join) -> list[tuple]:
    """Commutative associative monotone tables with unit top on a lattice,
    already filtered for residuum existence and prelinearity."""
    top = n - 1

    def leq(x, y):
        return meet[x][y] == x

    downsets = [
        tuple(z for z in range(n) if leq(z, x)) for x in range(n)
    ]
    entries = [(i, j) for i in range(1, n - 1) for j in range(i, n - 1)]
    mul = [[0] * n for _ in range(n)]
    for j in range(n):
        mul[top][j] = mul[j][top] = j
    out = []
    assigned: list[tuple[int, int]] = []

    def monotone_ok(i: int, j: int, v: int) -> bool:
        # compare against every decided free entry, both orientations; the
        # border rows are covered because v <= meet(i, j) already
        for a, b in assigned:
            for p, q in ((a, b), (b, a)):
                if leq(p, i) and leq(q, j) and not leq(mul[p][q], v):
                    return False
                if leq(i, p) and leq(j, q) and not leq(v, mul[p][q]):
                    return False
        return True

    def finish() -> None:
        for x, y, z in product(range(1, n - 1), repeat=3):
            if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                return
        imp = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                zs = [z for z in range(n) if leq(mul[x][z], y)]
                j = 0
                for z in zs:
                    j = join[j][z]
                if not leq(mul[x][j], y):
                    return
                imp[x][y] = j
        for x, y in product(range(n), repeat=2):
            if join[imp[x][y]][imp[y][x]] != top:
                return
        out.append((tuple(map(tuple, mul)), tuple(map(tuple, imp))))

    def fill(k: int) -> None:
        if k == len(entries):
            finish()
            return
        i, j = entries[k]
        for v in downsets[meet[i][j]]:
            if not monotone_ok(i, j, v):
                continue
            mul[i][j] = mul[j][i] = v
            assigned.append((i, j))
            fill(k + 1)
            assigned.pop()
        mul[i][j] = mul[j][i] = 0

    fill(0)
    return out


def canonical_form(A: FiniteMtlAlgebra) -> bytes:
    """Lexicographically minimal (mul, imp) serialization over carrier
    permutations fixing bot and top; equal exactly for isomorphic algebras."""
    if not A.validated:
        raise ValueError("canonical form needs a validated algebra")
    if A.n > 10:
        raise SizeRangeError("canonical form is for enumeration-scale carriers")
    rest = [x for x in range(A.n) if x not in (A.bot, A.top)]
    best: bytes | None = None
    for perm in permutations(range(1, A.n - 1)):
        image = {A.bot: 0, A.top: A.n - 1}
        for src, dst in zip(rest, perm):
            image[src] = dst
        buf = bytearray()
        for table in (A.mul, A.imp):
            rows = [[0] * A.n for _ in range(A.n)]
            for x in range(A.n):
                for y in range(A.n):
                    rows[image[x]][image[y]] = image[table[x][y]]
            for row in rows:
                buf.extend(row)
        cand = bytes(buf)
        if best is None or cand < best:
            best = cand
    return best


def enumerate_all(n: int, jobs: int = 1, allow_large: bool = False,
                  dedup: bool = True, limit: int | None = None
                  ) -> list[FiniteMtlAlgebra]:
    """Every algebra on n elements up to isomorphism, canonical order."""
    cap = FULL_MAX_OPTIN if allow_large else FULL_MAX
    if not 2 <= n <= cap:
        raise SizeRangeError(
            f"full enumeration supports sizes 2..{FULL_MAX}"
            f" ({FULL_MAX_OPTIN} with allow_large)")
    lattices = _bounded_lattices(n)
    chunks = pmap(_LatticeTask(n), lattices, jobs)
    seen: dict[bytes, FiniteMtlAlgebra] = {}
    plain: list[FiniteMtlAlgebra] = []
    for chunk in chunks:
        for mul, imp in chunk:
            A = construct(n, mul, imp, labels=_chain_labels(n))
            report = validate(A)
            if not report.valid:
                raise AssertionError(f"enumerated algebra failed validation:"
                                     f" {report.violations[0]}")
            if dedup:
                seen.setdefault(canonical_form(A), A)
            else:
                plain.append(A)
    if dedup:
        ordered = [seen[key] for key in sorted(seen)]
    else:
        ordered = plain
    out = []
    for idx, A in enumerate(ordered):
        named = construct(n, A.mul, A.imp, A.meet, A.join, bot=A.bot,
                          top=A.top, labels=A.labels, name=f"alg{n}_{idx}")
        validate(named)
        out.append(named)
        if limit is not None and len(out) >= limit:
            break
    return out


class _LatticeTask:
    def __init__(self, n: int):
        self.n = n

    def __call__(self, lattice: tuple) -> list[tuple]:
        meet, join = lattice
        return _tables_on_lattice(self.n, meet, join)


def enumerate_models(spec: EnumerationSpec, jobs: int = 1) -> list[FiniteMtlAlgebra]:
    if spec.chains_only:
        out = enumerate_chains(spec.size, jobs)
        if not spec.dedup:
            pass  # chains never contain isomorphic duplicates
        return out[: spec.limit] if spec.limit is not None else out
    return enumerate_all(spec.size, jobs, dedup=spec.dedup, limit=spec.limit)


# ---------------------------------------------------------------------------
# Open-problem scans.

def open1_scan(A: FiniteMtlAlgebra) -> list[SearchFinding]:
    """Filters that are not the left stabilizer of any nonempty subset."""
    achievable = {impl_left(A, X).bits for X in all_nonempty_subsets(A)}
    findings = []
    for F in all_filters(A):
        if F.bits not in achievable:
            findings.append(SearchFinding(
                "open1", A, {"filter": F.render(),
                             "reason": "no X has this left stabilizer"}))
    return findings


def open2_premise(A: FiniteMtlAlgebra, full_subsets: bool = False) -> bool:
    """Left equals right stabilizer everywhere.

    Singleton agreement suffices because both sides of the general case are
    intersections of the singleton stabilizers; the full sweep stays
    available for paranoia runs.
    """
    if full_subsets:
        return all(impl_left(A, X) == impl_right(A, X)
                   for X in all_nonempty_subsets(A))
    return all(
        impl_left(A, singleton(A, x)) == impl_right(A, singleton(A, x))
        for x in range(A.n)
    )


def open2_scan(corpus, full_subsets: bool = False) -> list[SearchFinding]:
    """Algebras whose stabilizers are symmetric yet are not MV."""
    findings = []
    for A in corpus:
        if open2_premise(A, full_subsets) and not is_mv(A):
            findings.append(SearchFinding(
                "open2", A, {"premise": "left equals right stabilizer",
                             "mv": "false"}))
    return findings


def open3_scan(A: FiniteMtlAlgebra) -> list[SearchFinding]:
    """Idempotents whose two induced stabilizer algebras are not isomorphic."""
    findings = []
    for x in A.idempotents():
        left = left_mult_algebra(A, x)
        right = right_mult_algebra(A, x)
        if left.trivial or right.trivial:
            continue
        if not (left.ok and right.ok):
            continue  # a failed construction is a T4.7/T4.8 refutation instead
        if left.algebra.n != right.algebra.n \
                or check_mtl_iso(left.algebra, right.algebra) is None:
            findings.append(SearchFinding(
                "open3", A, {
                    "x": A.labels[x],
                    "left-size": str(left.algebra.n),
                    "right-size": str(right.algebra.n),
                }))
    return findings
