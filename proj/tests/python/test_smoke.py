import pytest

import cwl


def test_solutions():
    assert cwl.is_solution(10, [8, 3, 3, 3, 8]) is not None
    assert cwl.is_solution(5, [1, 1, 1]) == -1
    assert cwl.is_solution(5, [1, 2]) is None
    assert cwl.word_matrix(10, [3]) == [[3, 9], [1, 0]]


def test_words():
    assert cwl.oplus(11, [3, 2, 1], [1, 2, 3]) == [6, 2, 2, 2]
    assert cwl.oplus(7, [-2, 0, -1, 1], [3, -2, 2]) == [0, 0, 6, 4, 5]
    assert cwl.canonical_form(5, [3, 1, 2]) == [1, 2, 3]
    assert cwl.equivalent(5, [1, 2, 3], [3, 2, 1])
    assert not cwl.equivalent(5, [1, 1, 2], [1, 2, 2])


def test_monomial():
    assert cwl.minimal_monomial_size(10, 3)[0] == 15
    assert cwl.closed_form_size(30, 6) is None
    assert cwl.closed_form_size(36, 6) == 12
    assert cwl.quadratic_roots(10, 3) == [0, 3, 5, 8]
    reducible, cert = cwl.is_reducible_monomial(10, 3)
    assert reducible
    assert cert["variant"] == "decomposition"
    assert cwl.equivalent(10, cert["right"], [8, 3, 3, 3, 8])
    reports = cwl.classify_monomials(16, threads=2)
    assert sum(r["irreducible"] for r in reports) == 13


def test_families_and_identity():
    assert cwl.family_word("odd_boundary", 3, 3, 1, 1) == (27, [18, 3, 3, 3, 3, 3, 3, 18])
    assert cwl.power_matrix_identity(4, 1) == [[17, 16], [16, 17]]


def test_enumerate_and_oracle():
    census = cwl.enumerate_solutions(5, 3)
    assert census["total"] == 2
    assert census["representatives"] == [[1, 1, 1], [4, 4, 4]]
    reducible, witness = cwl.is_reducible_oracle(10, [3] * 15)
    assert reducible and witness is not None
    left, right, arrangement = witness
    assert cwl.oplus(10, left, right) == arrangement


def test_numtheory():
    assert cwl.factorize(30) == [(2, 1), (3, 1), (5, 1)]
    assert cwl.euler_phi(9) == 6
    assert cwl.binomial_valuation(8, 3, 2) == 3


def test_verify():
    passed, text = cwl.verify(range=(2, 6))
    assert passed
    assert text.startswith("verify N=2..6")


def test_errors():
    with pytest.raises(ValueError):
        cwl.is_solution(1, [0])
    with pytest.raises(cwl.UsageError):
        cwl.enumerate_solutions(10, 3, budget=10)
    with pytest.raises(ValueError):
        cwl.oplus(7, [1], [1, 2])
