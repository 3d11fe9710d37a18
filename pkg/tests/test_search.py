from itertools import product

import pytest

from mtlstab import (all_nonempty_subsets, from_labels, impl_left,
                     impl_right, singleton)
from mtlstab.classify import is_chain, is_godel, is_imtl, is_mv
from mtlstab.induced import check_mtl_iso
from mtlstab.search import (
    EnumerationSpec,
    SizeRangeError,
    UnknownFamilyError,
    canonical_form,
    enumerate_all,
    enumerate_chains,
    enumerate_chains_via_residuum,
    enumerate_models,
    gen_family,
    open1_scan,
    open2_premise,
    open2_scan,
    open3_scan,
)

EXPECTED_CHAIN_COUNTS = {2: 1, 3: 2, 4: 6, 5: 22, 6: 94, 7: 451}


def test_family_classes():
    for n in range(2, 8):
        assert is_mv(gen_family("lukasiewicz", n))
        assert is_godel(gen_family("godel", n))
        assert is_imtl(gen_family("nilpotent_minimum", n))


def test_family_rejects_unknown():
    with pytest.raises(UnknownFamilyError):
        gen_family("product", 4)
    with pytest.raises(SizeRangeError):
        gen_family("godel", 1)


def test_nilpotent_minimum_right_stabilizer_band():
    # one-point right stabilizers of interior elements are half-open bands
    # around the fixed point of the negation, plus top
    nm7 = gen_family("nilpotent_minimum", 7)
    got = impl_right(nm7, singleton(nm7, 4)).members()
    assert got == (2, 3, 6)
    left = impl_left(nm7, singleton(nm7, 4)).members()
    assert left == (5, 6)


def test_chain_counts():
    for n, expect in EXPECTED_CHAIN_COUNTS.items():
        chains = enumerate_chains(n)
        assert len(chains) == expect
        assert len({A.mul for A in chains}) == expect
        tables = [A.mul for A in chains]
        assert tables == sorted(tables)
        for A in chains:
            assert A.validated and is_chain(A)


def brute_chains_3():
    """All 3x3 tables checked against the raw monoid/monotone axioms."""
    found = []
    for cells in product(range(3), repeat=9):
        t = [list(cells[i * 3:(i + 1) * 3]) for i in range(3)]
        if any(t[2][j] != j or t[j][2] != j for j in range(3)):
            continue
        if any(t[x][y] != t[y][x] for x in range(3) for y in range(3)):
            continue
        if any(t[t[x][y]][z] != t[x][t[y][z]]
               for x in range(3) for y in range(3) for z in range(3)):
            continue
        good = all(t[x][y] <= t[x][y + 1] for x in range(3) for y in range(2))
        if good:
            found.append(tuple(map(tuple, t)))
    return sorted(found)


def test_chain_enumeration_against_independent_bruteforce():
    assert [A.mul for A in enumerate_chains(3)] == brute_chains_3()


def test_dual_path_agreement():
    for n in (2, 3, 4):
        via_imp = enumerate_chains_via_residuum(n)
        direct = sorted((A.mul, A.imp) for A in enumerate_chains(n))
        assert via_imp == direct


def test_enumerate_all_small_sizes(diamond):
    assert len(enumerate_all(2)) == 1
    assert len(enumerate_all(3)) == 2
    algs4 = enumerate_all(4)
    assert len(algs4) == 7
    chains = [A for A in algs4 if is_chain(A)]
    assert len(chains) == 6
    (non_chain,) = [A for A in algs4 if not is_chain(A)]
    assert canonical_form(non_chain) == canonical_form(diamond)
    forms = [canonical_form(A) for A in algs4]
    assert forms == sorted(forms)
    for A in algs4:
        assert A.validated


def test_enumerate_all_5_contains_the_diamond_fixture(fixtures):
    algs5 = enumerate_all(5)
    assert len(algs5) == 23
    forms = {canonical_form(A) for A in algs5}
    assert canonical_form(fixtures["a5"]) in forms
    assert canonical_form(fixtures["n5"]) in forms


def test_enumeration_size_limits():
    with pytest.raises(SizeRangeError):
        enumerate_chains(8)
    with pytest.raises(SizeRangeError):
        enumerate_all(6)
    assert len(enumerate_all(2, allow_large=False)) == 1


def test_enumeration_spec_limit_and_dedup():
    got = enumerate_models(EnumerationSpec(size=4, chains_only=True, limit=3))
    assert len(got) == 3
    raw = enumerate_models(EnumerationSpec(size=4, dedup=False))
    deduped = enumerate_models(EnumerationSpec(size=4))
    assert len(raw) >= len(deduped)


def test_canonical_form_properties(fixtures, diamond):
    a4, b4 = fixtures["a4"], fixtures["b4"]
    assert canonical_form(a4) != canonical_form(b4)
    assert canonical_form(fixtures["a5"]) == canonical_form(fixtures["n5"])
    # canonical forms agree exactly when an isomorphism exists
    algs = enumerate_all(4)
    for A in algs:
        for B in algs:
            same = canonical_form(A) == canonical_form(B)
            assert same == (check_mtl_iso(A, B) is not None)


def test_open1(fixtures, boolean2):
    assert open1_scan(boolean2) == []
    a4 = fixtures["a4"]
    findings = open1_scan(a4)
    for f in findings:
        F = from_labels(a4, f.witness["filter"])
        assert all(impl_left(a4, X) != F for X in all_nonempty_subsets(a4))


def test_open2(fixtures):
    luk3 = gen_family("lukasiewicz", 3)
    assert open2_scan([luk3]) == []
    assert open2_scan([fixtures["a4"]]) == []
    findings = open2_scan(enumerate_all(4))
    assert findings, "the size-4 sweep finds a symmetric non-MV algebra"
    for f in findings:
        assert open2_premise(f.algebra)
        assert open2_premise(f.algebra, full_subsets=True)
        assert not is_mv(f.algebra)
    assert open2_scan(enumerate_all(4), full_subsets=True) == findings


def test_open3(fixtures, boolean2):
    a4 = fixtures["a4"]
    assert open3_scan(a4) == []  # both induced algebras at b are 2-chains
    assert open3_scan(boolean2) == []
    godel4 = gen_family("godel", 4)
    findings = open3_scan(godel4)
    assert [(f.witness["x"], f.witness["left-size"], f.witness["right-size"])
            for f in findings] == [("a", "3", "2"), ("b", "2", "3")]


def test_parallel_enumeration_matches_serial():
    serial = [(A.mul, A.imp) for A in enumerate_chains(5, jobs=1)]
    parallel = [(A.mul, A.imp) for A in enumerate_chains(5, jobs=4)]
    assert serial == parallel
    assert [A.mul for A in enumerate_all(4, jobs=1)] \
        == [A.mul for A in enumerate_all(4, jobs=4)]
