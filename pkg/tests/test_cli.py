import io
import json

import pytest

from nakaoka.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_eval_norm_in_burnside():
    code, out, _ = call("eval", "--functor", "burnside", "--p", "3", "--op", "nm", "2")
    assert code == 0 and out == "2 + 2*t\n"


def test_eval_transfer_in_free_underlying():
    code, out, _ = call("eval", "--functor", "freeunderlying", "--p", "2", "--op", "tr", "x0^2*x1")
    assert code == 0 and out.strip() == "t[2,1]"


def test_eval_json_is_parseable():
    code, out, _ = call("eval", "--functor", "freefixed", "--p", "2", "--op", "nm", "--format", "json", "x")
    assert code == 0
    json.loads(out)


def test_composite_p_is_a_parse_error():
    code, _, err = call("eval", "--functor", "burnside", "--p", "4", "--op", "nm", "2")
    assert code == 2 and "not prime" in err


def test_wrong_level_is_exit_3():
    code, _, err = call("eval", "--functor", "burnside", "--p", "2", "--op", "res", "--level", "bottom", "1")
    assert code == 3 and "top-level" in err


def test_axioms_require_a_seed():
    code, _, err = call("axioms", "--p", "2", "--trials", "2")
    assert code == 2 and "--seed" in err


def test_negative_seed_is_rejected():
    assert call("axioms", "--p", "2", "--seed", "-1")[0] == 2


def test_axioms_json_is_byte_identical_across_runs():
    argv = ("axioms", "--p", "2", "--functor", "burnside", "--trials", "3", "--seed", "4", "--format", "json")
    first, second = call(*argv), call(*argv)
    assert first[0] == 0 and first[1] == second[1]
    assert json.loads(first[1])["ok"] is True


def test_gb_cap_gives_exit_5(monkeypatch):
    monkeypatch.setenv("NAKAOKA_GB_CAP", "1")
    code, _, err = call(
        "spec", "contains", "--functor", "freeunderlying", "--p", "3",
        "--a", "<type1 a=[x0*x1-1, x0^2-x1]>", "--b", "<type2 b=[2,n]>",
    )
    assert code == 5 and "cap" in err


def test_spec_dim_free_fixed():
    code, out, _ = call("spec", "dim", "--functor", "freefixed", "--p", "2")
    assert code == 0 and out.rstrip().endswith("dim = 4")


def test_spec_dim_json():
    code, out, _ = call("spec", "dim", "--functor", "burnside", "--p", "3", "--q", "2", "--format", "json")
    assert code == 0 and json.loads(out)["dim"] == 2


def test_spec_list_dot():
    code, out, _ = call("spec", "list", "--functor", "burnside", "--p", "2", "--window", "0,2,3,5", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("[label=") == 7
    assert out.count("->") == 8


def test_spec_closure():
    code, out, _ = call("spec", "closure", "--functor", "burnside", "--p", "2", "--window", "0,2,3,5", "--point", "(3;3)")
    assert code == 0 and out.split("\n")[:2] == ["(3;3)", "(3;Z)"]


def test_unknown_closure_label_is_a_parse_error():
    code, _, _ = call("spec", "closure", "--functor", "burnside", "--p", "2", "--window", "0,2", "--point", "(7;7)")
    assert code == 2


def test_spec_contains_coincidence_is_equal():
    code, out, _ = call("spec", "contains", "--functor", "burnside", "--p", "2", "--a", "<type1 a=[2]>", "--b", "<type2 b=[2]>")
    assert code == 0 and out.splitlines()[0] == "EQUAL"


def test_spec_contains_reports_witnesses():
    code, out, _ = call(
        "spec", "contains", "--functor", "freefixed", "--p", "2",
        "--a", "<type2 b=[2,n-x^2,x^2+x+1]>", "--b", "<type2 b=[2,n,x]>", "--format", "json",
    )
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "INCOMPARABLE"
    assert data["a_in_b"]["witness"] is not None


def test_bad_prime_syntax_is_a_parse_error():
    assert call("spec", "contains", "--functor", "burnside", "--p", "2", "--a", "(2;2)", "--b", "(2;Z)")[0] == 2


def test_express_t_with_verification():
    code, out, _ = call("express-t", "--p", "2", "--v", "3,0", "--verify")
    assert code == 0
    assert out.splitlines() == ["t[2,0]*t[1,0] - t[1,0]*n", "verified: true"]


def test_express_t_unsupported_prime():
    assert call("express-t", "--p", "5", "--v", "1,0,0,0,0")[0] == 3


def test_ghost_map_json():
    code, out, _ = call("ghost", "map", "--functor", "burnside", "--p", "2", "t")
    assert code == 0 and json.loads(out) == {"top": {"fix": "2", "phi": "0"}}


@pytest.mark.parametrize("functor,expr,expected", [("modp", "t", "true"), ("burnside", "t", "false")])
def test_ghost_probe(functor, expr, expected):
    code, out, _ = call("ghost", "probe", "--functor", functor, "--p", "3", expr)
    assert code == 0 and out.strip() == expected


def test_ghost_probe_kernel_report():
    code, out, _ = call("ghost", "probe", "--functor", "modp", "--p", "2")
    assert code == 0
    json.loads(out)


def test_fixedpoint_check():
    code, out, _ = call("fixedpoint", "check", "--ring", "swap", "--seed", "1", "--trials", "10", "--primes", "x; x,y")
    assert code == 0
    assert out.count(": ok") == 2


def test_fixedpoint_requires_seed():
    assert call("fixedpoint", "check", "--ring", "swap")[0] == 2


def test_spec_list_ru_dot_keeps_both_factors_over_split_prime():
    # 2 generic + 2 over 2 + 1 over 3 + 3 over 7, since 7 splits in Z[xi]
    code, out, _ = call("spec", "list", "--functor", "ru", "--p", "3", "--window", "0,2,3,7", "--format", "dot")
    assert code == 0
    assert out.count("[label=") == 8
    assert "(7;<7, x + 3>)" in out and "(7;<7, x - 2>)" in out
