import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matrixavoid.patterns import (
    CLASSES,
    HARD_MAX_CELLS,
    SYMBOLS,
    AvoidanceSpec,
    BitMatrix,
    Pattern2x2,
    SizeLimitExceeded,
    avoids,
    class_orbit,
    complement,
    complement_image,
    contains_class,
    contains_pattern,
    count_avoiders,
    count_avoiders_naive,
    oracle_max_cells,
    transpose,
    transpose_image,
)

ALL_SINGLES = [AvoidanceSpec((s,)) for s in SYMBOLS]

# counts frozen from the flat reference enumerator
KNOWN_COUNTS = {
    (2, 2, "I"): 14,
    (1, 1, "I"): 2,
    (2, 2, "GAMMA"): 12,
    (3, 3, "GAMMA"): 128,
    (2, 2, "GAMMA,C"): 8,
    (2, 2, "T"): 14,
    (2, 3, "T"): 44,
    (3, 3, "T"): 200,
    (2, 2, "T,L"): 12,
    (3, 2, "T,L"): 26,
    (3, 3, "T,L"): 68,
    (3, 3, "J,O"): 156,
    (3, 4, "J,O"): 408,
    (3, 3, "J"): 334,
    (3, 3, "O"): 334,
}


def test_orbit_sizes():
    sizes = {s: len(class_orbit(s)) for s in SYMBOLS}
    assert sizes == {"I": 2, "GAMMA": 4, "C": 4, "T": 2, "L": 2, "J": 1, "O": 1}


def test_orbits_partition_all_sixteen():
    seen = set()
    for s in SYMBOLS:
        orbit = class_orbit(s)
        assert not (orbit & seen)
        seen |= orbit
    assert seen == {Pattern2x2(*bits) for bits in itertools.product((0, 1), repeat=4)}


def test_orbit_closure():
    for s in SYMBOLS:
        orbit = class_orbit(s)
        for p in orbit:
            assert p.row_swapped() in orbit
            assert p.col_swapped() in orbit


def test_spec_parsing_and_aliases():
    assert AvoidanceSpec.parse("gamma,c").canonical() == "GAMMA,C"
    assert AvoidanceSpec.parse("C,GAMMA") == AvoidanceSpec.parse("gamma,c")
    assert AvoidanceSpec.parse("Γ,c").canonical() == "GAMMA,C"
    assert AvoidanceSpec.parse("t,l,t").symbols == ("T", "L")
    assert str(AvoidanceSpec(("o", "j"))) == "J,O"
    # canonicalization is idempotent
    canon = AvoidanceSpec.parse("l,j,i").canonical()
    assert AvoidanceSpec.parse(canon).canonical() == canon


def test_spec_rejects_junk():
    with pytest.raises(ValueError):
        AvoidanceSpec.parse("gamma,x")
    with pytest.raises(ValueError):
        AvoidanceSpec.parse("")
    with pytest.raises(ValueError):
        AvoidanceSpec(())


def test_bitmatrix_round_trip():
    rows = [[1, 0, 1], [0, 0, 1]]
    m = BitMatrix.from_rows(rows)
    assert (m.rows, m.cols) == (2, 3)
    assert m.to_rows() == rows
    assert m.entry(0, 2) == 1 and m.entry(1, 0) == 0


def test_bitmatrix_validation():
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[1, 0], [1]])
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[2, 0]])
    with pytest.raises(ValueError):
        BitMatrix(1, 2, (4,))  # bit beyond the last column
    with pytest.raises(ValueError):
        BitMatrix(2, 2, (1,))


def test_contains_pattern_is_order_sensitive():
    m = BitMatrix.from_rows([[1, 0, 1], [0, 0, 1], [1, 0, 0]])
    assert contains_pattern(m, Pattern2x2(0, 1, 1, 0))
    assert not contains_pattern(m, Pattern2x2(1, 0, 0, 1))
    # the orbit test closes over both swaps, so it sees I either way
    assert contains_class(m, "I")
    assert contains_class(m, "i")


def test_contains_class_small_cases():
    ones = BitMatrix.from_rows([[1, 1], [1, 1]])
    assert contains_class(ones, "J")
    assert not contains_class(ones, "O")
    assert not avoids(ones, AvoidanceSpec(("J",)))
    assert avoids(ones, AvoidanceSpec(("O", "I", "GAMMA")))


def test_avoids_matches_contains_class():
    # avoidance of a set is exactly "no class of the set is contained"
    for code in range(1 << 9):
        m = BitMatrix(3, 3, tuple((code >> (3 * i)) & 7 for i in range(3)))
        for spec in (AvoidanceSpec(("I", "J")), AvoidanceSpec(("GAMMA", "C")), AvoidanceSpec(("T",))):
            expected = not any(contains_class(m, s) for s in spec)
            assert avoids(m, spec) == expected


def test_known_counts():
    for (k, n, alpha), want in KNOWN_COUNTS.items():
        assert count_avoiders(k, n, AvoidanceSpec.parse(alpha)) == want


def test_fast_oracle_equals_flat_scan():
    specs = [AvoidanceSpec.parse(a) for a in ("I", "GAMMA", "C", "T", "L", "J", "O", "GAMMA,C", "T,L", "J,O")]
    for k, n in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 5), (4, 3)]:
        for spec in specs:
            assert count_avoiders(k, n, spec) == count_avoiders_naive(k, n, spec), (k, n, spec)


def test_count_conventions_and_single_line_matrices():
    spec = AvoidanceSpec.parse("J,O")
    assert count_avoiders(0, 0, spec) == 1
    assert count_avoiders(3, 0, spec) == 0
    assert count_avoiders(0, 2, spec) == 0
    # one row or one column: nothing to forbid
    assert count_avoiders(1, 6, spec) == 64
    assert count_avoiders(5, 1, spec) == 32
    with pytest.raises(ValueError):
        count_avoiders(-1, 2, spec)


def test_guard_default_and_override():
    spec = AvoidanceSpec.parse("I")
    with pytest.raises(SizeLimitExceeded):
        count_avoiders(5, 5, spec)
    assert count_avoiders(5, 5, AvoidanceSpec.parse("J,O"), max_cells=25) == 0
    with pytest.raises(SizeLimitExceeded):
        count_avoiders(5, 5, spec, max_cells=24)
    # explicit max_cells cannot exceed the hard cap
    with pytest.raises(SizeLimitExceeded):
        count_avoiders(8, 4, spec, max_cells=99)


def test_guard_environment_override(monkeypatch):
    monkeypatch.setenv("MATRIXAVOID_ORACLE_MAX_CELLS", "9")
    assert oracle_max_cells() == 9
    with pytest.raises(SizeLimitExceeded):
        count_avoiders(4, 3, AvoidanceSpec.parse("I"))
    monkeypatch.setenv("MATRIXAVOID_ORACLE_MAX_CELLS", "50")
    assert oracle_max_cells() == HARD_MAX_CELLS
    monkeypatch.setenv("MATRIXAVOID_ORACLE_MAX_CELLS", "nonsense")
    assert oracle_max_cells() == 24
    monkeypatch.setenv("MATRIXAVOID_ORACLE_MAX_CELLS", "-3")
    assert oracle_max_cells() == 24
    monkeypatch.delenv("MATRIXAVOID_ORACLE_MAX_CELLS")
    assert oracle_max_cells() == 24


def test_image_maps():
    assert complement_image(AvoidanceSpec.parse("GAMMA,J")).canonical() == "C,O"
    assert transpose_image(AvoidanceSpec.parse("T,L")).canonical() == "T,L"
    assert transpose_image(AvoidanceSpec.parse("T")).canonical() == "L"
    for spec in ALL_SINGLES:
        assert complement_image(complement_image(spec)) == spec
        assert transpose_image(transpose_image(spec)) == spec


@st.composite
def bit_matrices(draw, max_rows=4, max_cols=4):
    k = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    masks = draw(st.tuples(*[st.integers(0, (1 << n) - 1)] * k))
    return BitMatrix(k, n, masks)


@given(bit_matrices())
def test_complement_and_transpose_bijections(m):
    comp = complement(m)
    tr = transpose(m)
    for spec in ALL_SINGLES:
        assert avoids(m, spec) == avoids(comp, complement_image(spec))
        assert avoids(m, spec) == avoids(tr, transpose_image(spec))


@given(bit_matrices(), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_avoidance_is_permutation_invariant(m, rng):
    rows = m.to_rows()
    row_order = list(range(m.rows))
    col_order = list(range(m.cols))
    rng.shuffle(row_order)
    rng.shuffle(col_order)
    shuffled = BitMatrix.from_rows(
        [[rows[i][j] for j in col_order] for i in row_order]
    )
    for spec in ALL_SINGLES:
        assert avoids(m, spec) == avoids(shuffled, spec)


def test_transpose_count_symmetry():
    t = AvoidanceSpec.parse("T")
    l = AvoidanceSpec.parse("L")
    for k in range(1, 4):
        for n in range(1, 5):
            assert count_avoiders(k, n, t) == count_avoiders(n, k, l)
