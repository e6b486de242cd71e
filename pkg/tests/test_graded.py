import random
from fractions import Fraction

import pytest

from semidual.errors import ParseError
from semidual.exactlin import Matrix
from semidual.graded import (BadLabelsError, CharacterMismatchError,
                             GradedFDAlgebra, act_character,
                             check_module_algebra, dual_monoid_action,
                             format_algebra_element, homogeneous_components,
                             parse_graded, print_graded, ut_graded,
                             verify_grading)
from semidual.reporting import INFO
from semidual.semilattice import characters, validate


def ut2():
    return ut_graded(2, [1, 2])


def sample_element(algebra):
    # the matrix [[1, 2], [0, 3]]
    return algebra.element_from_labels({"E11": 1, "E12": 2, "E22": 3})


def trivial_algebra():
    grading = validate(["e"], {}, "e")
    return GradedFDAlgebra(("u",), {(0, 0): {0: Fraction(1)}}, {0: Fraction(1)},
                           grading, (0,))


def test_ut2_layout():
    a = ut2()
    assert a.basis == ("E11", "E12", "E22")
    degrees = [a.grading.label(d) for d in a.degree]
    assert degrees == ["n2", "n2", "n1"]


def test_ut1_trivial_grading_passes():
    report = verify_grading(ut_graded(1, [1]))
    assert report.passed
    assert not [line for line in report.lines if line.status == INFO]


def test_ut3_product_checks():
    a = ut_graded(3, [1, 2, 3])
    e22 = a.element_from_labels({"E22": 1})
    e33 = a.element_from_labels({"E33": 1})
    e23 = a.element_from_labels({"E23": 1})
    assert (e22 * e33).coords == {}
    assert e23 * e33 == e23
    # E23 sits in the second-from-bottom row: degree n2
    assert a.grading.label(a.degree[a.index("E23")]) == "n2"


def test_verify_grading_ut2_passes_with_info():
    report = verify_grading(ut2())
    assert report.passed
    info = [line for line in report.lines if line.status == INFO]
    assert len(info) == 1 and info[0].name == "unit-degrees"


def test_verify_grading_trivial():
    assert verify_grading(trivial_algebra()).passed


def test_verify_grading_swapped_degrees_fails():
    a = ut2()
    swapped = GradedFDAlgebra(a.basis, a.structure, a.unit, a.grading,
                              tuple({0: 1, 1: 0}.get(d, d) for d in a.degree))
    report = verify_grading(swapped)
    assert not report.passed
    bad = [line for line in report.lines if line.status == "FAIL"]
    assert bad and bad[0].name == "grading-law" and bad[0].witness


def test_homogeneous_components_split_by_row():
    a = ut2()
    parts = homogeneous_components(sample_element(a))
    by_label = {a.grading.label(d): part for d, part in parts.items()}
    assert by_label["n1"].coords == {a.index("E22"): 3}
    assert by_label["n2"].coords == {a.index("E11"): 1, a.index("E12"): 2}
    total = sum(parts.values(), a.element({}))
    assert total == sample_element(a)


def test_homogeneous_components_zero_and_basis():
    a = ut2()
    assert homogeneous_components(a.element({})) == {}
    single = homogeneous_components(a.element_from_labels({"E12": 1}))
    assert list(single.values())[0] == a.element_from_labels({"E12": 1})


def test_act_character_projects_bottom_corner():
    a = ut2()
    f1, f2 = characters(a.grading)
    acted = act_character(f1, sample_element(a))
    assert format_algebra_element(acted) == "E22:3"
    assert act_character(f2, sample_element(a)) == sample_element(a)


def test_act_constant_one_character_is_identity():
    a = ut_graded(3, [2, 5, 9])
    top = characters(a.grading)[-1]
    assert top.values == (1, 1, 1)
    x = a.element_from_labels({"E11": 1, "E13": Fraction(-3, 2), "E22": 7})
    assert act_character(top, x) == x


def test_act_character_mismatch():
    a = ut2()
    other = characters(ut_graded(3, [1, 2, 3]).grading)[0]
    with pytest.raises(CharacterMismatchError):
        act_character(other, sample_element(a))


def test_module_algebra_ut2():
    report = check_module_algebra(ut2())
    assert report.passed
    info = [line for line in report.lines if line.status == INFO]
    assert len(info) == 1


def test_module_algebra_trivial_has_strict_unit_law():
    report = check_module_algebra(trivial_algebra())
    assert report.passed
    assert not [line for line in report.lines if line.status == INFO]
    assert any(line.name.endswith("unit-law") for line in report.lines)


def test_module_algebra_ut4_all_characters():
    report = check_module_algebra(ut_graded(4, [1, 2, 3, 4]))
    assert report.passed
    mult_lines = [line for line in report.lines if line.name.endswith("multiplicative")]
    assert len(mult_lines) == 4


def test_dual_action_ut2_matrices():
    action = dual_monoid_action(ut2())
    assert action.report.passed
    g1 = action.matrices["f1"]
    g2 = action.matrices["f2"]
    assert g2 == Matrix.identity(3)
    assert g1.matmul(g1) == g1           # f1 f1 = f1
    assert g1.matmul(g2) == g1           # f1 f2 = f1
    # gamma_f1 projects onto the bottom-right corner
    assert g1 == Matrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 0, 1]])


def test_dual_action_chain_gradings():
    for m in range(1, 5):
        action = dual_monoid_action(ut_graded(m, list(range(1, m + 1))))
        assert action.report.passed


def test_ut_bad_labels():
    with pytest.raises(BadLabelsError):
        ut_graded(2, [2, 1])
    with pytest.raises(BadLabelsError):
        ut_graded(2, [1])
    with pytest.raises(BadLabelsError):
        ut_graded(0, [])
    with pytest.raises(BadLabelsError):
        ut_graded(2, [1, 1])


def test_verify_grading_ut_family():
    for m in range(1, 6):
        assert verify_grading(ut_graded(m, list(range(1, m + 1)))).passed


def test_action_properties_random_elements():
    rng = random.Random(23)
    a = ut_graded(3, [1, 2, 3])
    chars = characters(a.grading)
    lookup = {ch.values: ch for ch in chars}
    pool = [Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(1), Fraction(3)]
    for _ in range(30):
        def rand_elem():
            support = rng.sample(range(a.dim), rng.randint(1, a.dim))
            return a.element({i: rng.choice(pool) for i in support})
        x, y = rand_elem(), rand_elem()
        for f in chars:
            assert act_character(f, x * y) == act_character(f, x) * act_character(f, y)
            assert act_character(f, act_character(f, x)) == act_character(f, x)
            for g in chars:
                fg = lookup[f.pointwise_mul(g).values]
                assert act_character(fg, x) == act_character(f, act_character(g, x))


def test_components_are_homogeneous():
    rng = random.Random(29)
    a = ut_graded(4, [1, 2, 3, 4])
    for _ in range(10):
        support = rng.sample(range(a.dim), rng.randint(1, a.dim))
        x = a.element({i: Fraction(rng.randint(1, 5)) for i in support})
        parts = homogeneous_components(x)
        assert sum(parts.values(), a.element({})) == x
        for d, part in parts.items():
            assert {a.degree[i] for i in part.coords} == {d}


def test_print_parse_round_trip():
    a = ut2()
    text = print_graded(a, "chain2.slat")
    parsed = parse_graded(text, slat_loader=lambda ref: a.grading)
    assert parsed == a


def test_print_parse_round_trip_with_rationals():
    grading = validate(["e"], {}, "e")
    a = GradedFDAlgebra(("u", "x"),
                        {(0, 0): {0: Fraction(1)}, (0, 1): {1: Fraction(1)},
                         (1, 0): {1: Fraction(1)}, (1, 1): {1: Fraction(1, 2)}},
                        {0: Fraction(1)}, grading, (0, 0))
    assert verify_grading(a).passed
    text = print_graded(a, "point.slat")
    assert "x:1/2" in text
    parsed = parse_graded(text, slat_loader=lambda ref: grading)
    assert parsed == a


def test_parse_graded_errors():
    grading = validate(["e"], {}, "e")
    loader = lambda ref: grading
    with pytest.raises(ParseError):
        parse_graded("unit: u:1\nsemilattice: x\ndegree u e\n", slat_loader=loader)
    with pytest.raises(ParseError):
        parse_graded("basis: u\nunit: u:1\nsemilattice: x\n", slat_loader=loader)
    with pytest.raises(ParseError):
        parse_graded("basis: u\nunit: u:1\nsemilattice: x\ndegree u e\nmul u u = u:1\nmul u u = u:2\n",
                     slat_loader=loader)


def test_parse_graded_file_resolves_sibling(tmp_path):
    from semidual.graded import parse_graded_file
    from semidual.semilattice import print_semilattice
    a = ut2()
    (tmp_path / "chain2.slat").write_text(print_semilattice(a.grading))
    (tmp_path / "ut2.galg").write_text(print_graded(a, "chain2.slat"))
    parsed = parse_graded_file(str(tmp_path / "ut2.galg"))
    assert parsed == a
