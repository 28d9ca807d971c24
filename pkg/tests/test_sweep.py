from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from drgwb.params import fD_factors, family2, intersection_array, kD_factors, spectrum
from drgwb.sweep import (
    CHECKPOINT_ENV,
    CellResult,
    _work,
    conjecture_sweep,
    evaluate_cell,
    full_value,
    product_is_integral,
    sweep_cells,
)


def test_single_cell_2_6():
    res = conjecture_sweep(2, 6)
    assert [(c.q, c.D) for c in res.cells] == [(2, 6)]
    cell = res.cells[0]
    assert not cell.kD_integral and not cell.fD_integral
    assert res.counterexamples == [] and res.counterexamples_either == []


def test_kd_factor_37_over_5():
    _, factors = kD_factors(2, 6)
    assert Fraction(*factors[3]) == Fraction(37, 5)
    assert full_value(2, 6, "kD").denominator != 1


def test_factors_match_exact_valency_and_multiplicity():
    for q in (2, 3):
        ia = intersection_array(family2(q, 6))
        assert full_value(q, 6, "kD") == ia.valencies[6]
        assert full_value(q, 6, "fD") == spectrum(ia)[6].multiplicity


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.sampled_from([6, 12, 18, 24]), st.randoms(use_true_random=False))
def test_product_order_independent(q, D, rnd):
    for builder in (kD_factors, fD_factors):
        prefix, factors = builder(q, D)
        shuffled = list(factors)
        rnd.shuffle(shuffled)
        a, b = Fraction(prefix), Fraction(prefix)
        for n, d in factors:
            a *= Fraction(n, d)
        for n, d in shuffled:
            b *= Fraction(n, d)
        assert a == b
        assert product_is_integral(prefix, shuffled).integral == (a.denominator == 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(-50, 50).filter(bool),
       st.lists(st.tuples(st.integers(-400, 400), st.integers(1, 60)), max_size=6))
def test_product_is_integral_matches_fraction(prefix, factors):
    v = Fraction(prefix)
    for n, d in factors:
        v *= Fraction(n, d)
    verdict = product_is_integral(prefix, factors)
    assert verdict.integral == (v.denominator == 1)
    if verdict.method == "valuation":
        assert verdict.den_valuation > verdict.num_valuation
        assert v.denominator % verdict.prime == 0


def test_record_roundtrip():
    cell = evaluate_cell(3, 12)
    back = CellResult.parse(cell.record())
    assert (back.q, back.D, back.kD_integral, back.fD_integral) == (3, 12, cell.kD_integral, cell.fD_integral)


def test_small_grid_has_no_counterexamples():
    res = conjecture_sweep(20, 36)
    assert len(res.cells) == len(sweep_cells(20, 36)) == 19 * 6
    assert res.counterexamples_both == [] and res.counterexamples_either == []


def test_interrupted_then_resumed_is_identical(tmp_path):
    clean, broken = tmp_path / "clean", tmp_path / "broken"
    conjecture_sweep(12, 30, checkpoint_dir=clean)
    # simulate a killed run: part of the grid written, last line torn
    conjecture_sweep(5, 18, checkpoint_dir=broken)
    store = next(broken.glob("cells-*"))
    with open(store / "shard-99999.tsv", "w") as fh:
        fh.write(evaluate_cell(7, 24).record() + "\n")
        fh.write("8\t24\tkD_in")
    res = conjecture_sweep(12, 30, checkpoint_dir=broken)
    assert res.resumed == len(sweep_cells(5, 18)) + 1
    assert (clean / "sweep-12-30.tsv").read_bytes() == (broken / "sweep-12-30.tsv").read_bytes()


def test_checkpoint_env_and_parallel(tmp_path, monkeypatch):
    monkeypatch.setenv(CHECKPOINT_ENV, str(tmp_path))
    serial = conjecture_sweep(8, 24, checkpoint_dir=None)
    assert (tmp_path / "sweep-8-24.tsv").exists()
    monkeypatch.delenv(CHECKPOINT_ENV)
    parallel = conjecture_sweep(8, 24, jobs=2, chunk=4)
    assert [c.record() for c in serial.cells] == [c.record() for c in parallel.cells]


def test_work_chunk_without_store():
    out = _work([(2, 6), (3, 6)], None)
    assert [(c.q, c.D) for c in out] == [(2, 6), (3, 6)]


def test_product_is_integral_zero_factor():
    assert product_is_integral(1, [(0, 2)]).integral
    assert product_is_integral(0, [(1, 4)]).integral
