import io

from semidual import corpus
from semidual.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def slat(name):
    return corpus.data_path(f"{name}.slat")


def galg(name):
    return corpus.data_path(f"{name}.galg")


def check_golden(argv, expected, exit_code=0):
    code, out, err = invoke(*argv)
    assert err == ""
    assert out == expected
    assert code == exit_code
    # determinism: a second run is byte-identical
    code2, out2, _ = invoke(*argv)
    assert (code2, out2) == (code, out)


def test_slat_check():
    check_golden(["slat", "check", slat("chain2")],
                 "elements: n1 n2\nidentity: n1\nvalid: yes\n")


def test_slat_check_invalid_table(tmp_path):
    bad = tmp_path / "bad.slat"
    bad.write_text("elements: a b\nidentity: a\na * b = a\n")
    code, out, err = invoke("slat", "check", str(bad))
    assert code == 1
    assert out.startswith("valid: no\n")


def test_slat_order():
    check_golden(["slat", "order", slat("chain3")],
                 "n1 <= n2\nn1 <= n3\nn2 <= n3\n")


def test_slat_characters_two_chain():
    check_golden(["slat", "characters", slat("chain2")],
                 "f1: 1 0\nf2: 1 1\n")


def test_slat_characters_tsv():
    check_golden(["slat", "characters", slat("chain2"), "--format", "tsv"],
                 "f1\t1 0\nf2\t1 1\n")


def test_slat_dual_is_reusable_document():
    expected = "elements: f1 f2\nidentity: f2\nf1 * f2 = f1\n"
    check_golden(["slat", "dual", slat("chain2")], expected)
    # the output parses as a semilattice document
    from semidual.semilattice import parse_semilattice
    parse_semilattice(expected)


def test_slat_double_dual():
    check_golden(["slat", "double-dual", slat("chain2")],
                 "n1 -> f2\nn2 -> f1\nisomorphism: OK\n")


def test_dual_output_composes(tmp_path):
    # the dual document round-trips through the other slat commands
    code, out, _ = invoke("slat", "dual", slat("div12"))
    assert code == 0
    dual_file = tmp_path / "dual.slat"
    dual_file.write_text(out)
    code, check_out, _ = invoke("slat", "check", str(dual_file))
    assert code == 0 and check_out.endswith("valid: yes\n")
    code, _, _ = invoke("balg", "axioms", str(dual_file))
    assert code == 0
    code, rank_out, _ = invoke("slat", "ev-rank", str(dual_file))
    assert code == 0 and "full-rank: yes" in rank_out


def test_slat_ev_rank():
    check_golden(["slat", "ev-rank", slat("bool2")],
                 "rank: 4\nsize: 4\nfull-rank: yes\n")


def test_balg_axioms():
    expected = (
        "axiom coassociativity: PASS\n"
        "axiom counit-left: PASS\n"
        "axiom counit-right: PASS\n"
        "axiom comultiplication-multiplicative: PASS\n"
        "axiom counit-multiplicative: PASS\n"
        "axiom comultiplication-unit: PASS\n"
        "axiom counit-unit: PASS\n"
        "axioms: PASS\n"
    )
    check_golden(["balg", "axioms", slat("chain2")], expected)


def test_balg_quotient():
    expected = (
        "class n1: n1\n"
        "class n2+n3: n2 n3\n"
        "grouplike n1: PASS\n"
        "grouplike n2+n3: PASS\n"
        "check linear-independence: PASS [coefficient rank 2 of 2]\n"
        "check completeness: PASS [alpha^2 = alpha forcing over characteristic 0]\n"
        "quotient: PASS\n"
    )
    check_golden(["balg", "quotient", slat("chain3"), "--glue", "n2=n3"], expected)


def test_graded_verify():
    expected = (
        "invariant associativity: PASS\n"
        "invariant unit-law: PASS\n"
        "invariant grading-law: PASS\n"
        "invariant unit-degrees: INFO [unit has components in non-identity-acting"
        " degrees n2; strict module-algebra unit law does not apply]\n"
        "grading: PASS\n"
    )
    check_golden(["graded", "verify", galg("ut2")], expected)


def test_graded_act_projects_bottom_corner():
    check_golden(["graded", "act", galg("ut2"), "--char", "f1",
                  "--element", "E11:1,E12:2,E22:3"],
                 "E22:3\n")
    check_golden(["graded", "act", galg("ut2"), "--char", "f2",
                  "--element", "E11:1,E12:2,E22:3"],
                 "E11:1,E12:2,E22:3\n")


def test_graded_module_algebra():
    expected = (
        "character f1 multiplicative: PASS\n"
        "character f2 multiplicative: PASS\n"
        "check unit-law: INFO [unit not concentrated in identity-acting degrees;"
        " gamma(f,1) is the projection of 1 onto the degrees where f = 1]\n"
        "module-algebra: PASS\n"
    )
    check_golden(["graded", "module-algebra", galg("ut2")], expected)


def test_graded_action_table():
    expected = (
        "gamma f1: E11 -> 0, E12 -> 0, E22 -> E22:1\n"
        "gamma f2: E11 -> E11:1, E12 -> E12:1, E22 -> E22:1\n"
        "endomorphism f1 multiplicative: PASS\n"
        "endomorphism f2 multiplicative: PASS\n"
        "check unital: INFO [unit not concentrated in identity-acting degrees;"
        " gamma(f,1) != 1 for characters vanishing on a unit degree]\n"
        "action composition: PASS\n"
        "action identity-character: PASS\n"
        "action: PASS\n"
    )
    check_golden(["graded", "action-table", galg("ut2")], expected)


def test_graded_ut_prints_document():
    with open(galg("ut2"), encoding="utf-8") as fh:
        expected = fh.read()
    check_golden(["graded", "ut", "--size", "2", "--labels", "1,2"], expected)


def test_graded_ut_custom_labels_compose(tmp_path):
    # the emitted document names a label-derived companion; generating that
    # companion makes the pair fully parseable again
    from semidual.graded import ut_graded
    from semidual.semilattice import print_semilattice
    code, out, _ = invoke("graded", "ut", "--size", "3", "--labels", "2,5,9")
    assert code == 0
    assert "semilattice: chain-2-5-9.slat" in out
    (tmp_path / "alg.galg").write_text(out)
    (tmp_path / "chain-2-5-9.slat").write_text(
        print_semilattice(ut_graded(3, [2, 5, 9]).grading))
    code, verify_out, _ = invoke("graded", "verify", str(tmp_path / "alg.galg"))
    assert code == 0 and "grading: PASS" in verify_out


def test_nbar_is_char():
    check_golden(["nbar", "is-char", "--prefix", "1,1,1", "--tail", "0"],
                 "character: yes\nthreshold: 1\n")
    check_golden(["nbar", "is-char", "--prefix", "1,2", "--tail", "2"],
                 "character: no\n")
    check_golden(["nbar", "is-char", "--tail", "1"],
                 "character: yes\nthreshold: +inf\n")


def test_nbar_decompose():
    check_golden(["nbar", "decompose", "--prefix", "3,3,2", "--tail", "5"],
                 "+inf:5 1:-3 0:1\nverified: OK\n")


def test_nbar_decompose_rationals():
    check_golden(["nbar", "decompose", "--prefix=3/2", "--tail=-1/2"],
                 "+inf:-1/2 -inf:2\nverified: OK\n")


def test_nbar_translate_basis():
    check_golden(["nbar", "translate-basis", "--prefix", "3,2", "--tail", "1"],
                 "breakpoints: -inf 0\ntail-point: 1\ndimension: 3\nverified: OK\n")
    check_golden(["nbar", "translate-basis", "--tail", "4"],
                 "breakpoints:\ntail-point: -inf\ndimension: 1\nverified: OK\n")


def test_nbar_det():
    check_golden(["nbar", "det", "--row", "1,2"],
                 "det: -2\nclosed-form: -2\nagree: yes\npreconditions: met\nnonzero: yes\n")
    check_golden(["nbar", "det", "--row", "2,2"],
                 "det: 0\nclosed-form: 0\nagree: yes\npreconditions: violated\nnonzero: no\n")


def test_lp_mul():
    check_golden(["lp", "mul", "(x1|1)", "(x2|1)", "--odd-letters", "1,2"],
                 "(x1|1)*(x2|1)\n")
    check_golden(["lp", "mul", "(x2|1)", "(x1|1)", "--odd-letters", "1,2"],
                 "-(x1|1)*(x2|1)\n")


def test_lp_weight():
    check_golden(["lp", "weight", "1 + (x1|3)"],
                 "-inf: 1\n3: (x1|3)\n")


def test_lp_act():
    check_golden(["lp", "act", "--z", "2", "(x1|1)*(x2|2) + (x1|3)"],
                 "(x1|1)*(x2|2)\n")
    check_golden(["lp", "act", "--z=-inf", "5 + (x1|1)"], "5\n")


def test_lp_embed():
    check_golden(["lp", "embed", "2", "1"], "(x1|2)*(x2|1)\n")
    check_golden(["lp", "embed", "1", "1", "--odd-letters", "1"],
                 "(x1|1)*(x1|2)\n")


def test_exit_2_on_missing_file():
    code, out, err = invoke("slat", "characters", "does-not-exist.slat")
    assert code == 2 and out == "" and err


def test_exit_2_on_parse_error_with_position(tmp_path):
    bad = tmp_path / "bad.slat"
    bad.write_text("elements: a b\nidentity: a\na * b\n")
    code, out, err = invoke("slat", "characters", str(bad))
    assert code == 2
    assert ":3:" in err


def test_exit_2_on_unknown_flag():
    code, _, err = invoke("slat", "characters", slat("chain2"), "--bogus")
    assert code == 2 and err


def test_exit_1_on_failing_report(tmp_path):
    # swap the two degrees of ut2: the grading law breaks
    text = corpus.render_corpus_files()["ut2.galg"]
    text = text.replace("degree E22 n1", "degree E22 n2").replace(
        "degree E11 n2", "degree E11 n1").replace("degree E12 n2", "degree E12 n1")
    (tmp_path / "chain2.slat").write_text(
        corpus.render_corpus_files()["chain2.slat"])
    bad = tmp_path / "bad.galg"
    bad.write_text(text)
    code, out, err = invoke("graded", "verify", str(bad))
    assert code == 1
    assert "grading-law: FAIL" in out
    assert "grading: FAIL" in out


def test_tsv_mirror_report():
    code, out, err = invoke("graded", "module-algebra", galg("ut2"),
                            "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "character\tf1 multiplicative\tPASS\t"
    assert lines[-1] == "module-algebra\tPASS"
