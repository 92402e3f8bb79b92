from fractions import Fraction

import pytest

from querytree import Distribution, load_distribution, normalized


def test_exact_mode_from_fractions():
    d = Distribution([Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)])
    assert d.is_exact
    assert sum(d.probs) == 1


def test_float_mode():
    d = Distribution([0.1, 0.2, 0.3, 0.4])
    assert not d.is_exact
    assert d[3] == 0.4


def test_single_outcome():
    assert len(Distribution([1.0])) == 1
    assert len(Distribution([Fraction(1)])) == 1


def test_rejects_zero_probability():
    with pytest.raises(ValueError, match="must be > 0"):
        Distribution([0.5, 0.0, 0.5])


def test_rejects_negative_probability():
    with pytest.raises(ValueError):
        Distribution([Fraction(3, 2), Fraction(-1, 2)])


def test_rejects_bad_sum():
    with pytest.raises(ValueError, match="sum"):
        Distribution([0.5, 0.6])
    with pytest.raises(ValueError, match="sum"):
        Distribution([Fraction(1, 2), Fraction(1, 3)])


def test_rejects_empty():
    with pytest.raises(ValueError):
        Distribution([])


def test_float_sum_tolerance():
    # within 1e-9 passes, outside fails
    Distribution([0.5, 0.5 + 5e-10])
    with pytest.raises(ValueError):
        Distribution([0.5, 0.5 + 5e-9])


def test_mass():
    d = Distribution([Fraction(1, 10), Fraction(2, 10), Fraction(3, 10), Fraction(4, 10)])
    assert d.mass([0, 3]) == Fraction(1, 2)


def test_uniform():
    d = Distribution.uniform(6)
    assert d.is_exact
    assert d[0] == Fraction(1, 6)


def test_normalized_weights():
    d = normalized([2.0, 2.0, 4.0])
    assert d.probs == (0.25, 0.25, 0.5)


def test_load_file_decimal_and_rational(tmp_path):
    path = tmp_path / "dist.txt"
    path.write_text("# comment line\n0.1\n2/10\n\n0.3\n4/10\n")
    d = load_distribution(path)
    assert d.is_exact  # decimals parse exactly
    assert d.probs == (Fraction(1, 10), Fraction(1, 5), Fraction(3, 10), Fraction(2, 5))


def test_load_file_reports_line_numbers(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0.5\nnot-a-number\n0.5\n")
    with pytest.raises(ValueError, match=r"bad.txt:2"):
        load_distribution(path)
