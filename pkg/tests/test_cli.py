from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finring.cli import Group, Ring, build, parse, parse_group, to_text
from finring.cli.main import main
from finring.errors import EvalError, ParseError

ints = st.integers(0, 9)
groups = st.recursive(
    st.one_of(st.builds(lambda n: Group("C", (n,)), ints), st.just(Group("D4")), st.just(Group("Q8"))),
    lambda g: st.builds(lambda a, b: Group("prod", (a, b)), g, g),
    max_leaves=3,
)


def _rings(children):
    return st.one_of(
        st.builds(lambda n, r: Ring("M", (n, r)), ints, children),
        st.builds(lambda n, r: Ring("T", (n, r)), ints, children),
        st.builds(lambda rs: Ring("product", tuple(rs)), st.lists(children, min_size=1, max_size=3)),
        st.builds(lambda r: Ring("trivext", (r,)), children),
        st.builds(lambda r, n: Ring("polyq", (r, n)), children, ints),
        st.builds(lambda r, g: Ring("groupring", (r, g)), children, groups),
        st.builds(lambda r, n: Ring("corner", (r, n)), children, ints),
        st.builds(lambda r, gs: Ring("quot", (r, tuple(gs))), children, st.lists(ints, min_size=1, max_size=3)),
        *[st.builds(lambda n, m, r, op=op: Ring(op, (n, m, r)), ints, ints, children) for op in ("A", "B", "S", "Tnm")],
        *[st.builds(lambda n, r, op=op: Ring(op, (n, r)), ints, children) for op in ("C", "U")],
    )


rings = st.recursive(st.builds(lambda n: Ring("Zmod", (n,)), st.integers(2, 99)), _rings, max_leaves=6)


@given(rings)
def test_parse_print_round_trip(tree):
    assert parse(to_text(tree)) == tree


@given(groups)
def test_group_round_trip(tree):
    assert parse_group(to_text(tree)) == tree


def test_f2_is_zmod2():
    assert parse("F2") == parse("Zmod(2)") and to_text(parse("Zmod(2)")) == "F2"
    assert to_text(parse("groupring( F2 ,prod(C(2),C(3)) )")) == "groupring(F2, prod(C(2), C(3)))"


@pytest.mark.parametrize("text, pos", [("M(2, Zmod(2)", 12), ("Zmod(2))", 7), ("Foo(2)", 0), ("T(3; F2)", 3), ("quot(F2, 3)", 9), ("", 0)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.position == pos


@pytest.mark.parametrize("text, size", [("T(3, Zmod(2))", 64), ("groupring(F2, C(3))", 8), ("corner(M(2, F2), 1)", 2),
                                        ("quot(Zmod(8), ideal(4))", 4), ("S(2, 3, F2)", 64)])
def test_build_examples(text, size):
    R = build(text)
    assert R.size == size and R.label == to_text(parse(text))


@pytest.mark.parametrize("text", ["corner(M(2, F2), 2)", "corner(F2, 5)", "quot(Zmod(8), ideal(9))", "Zmod(1)", "T(3, Zmod(6))", "M(0, F2)"])
def test_eval_errors(text):
    with pytest.raises(EvalError):
        build(text)


def test_raw_ring_import(tmp_path):
    f = tmp_path / "z3.json"
    f.write_text(json.dumps({"size": 3, "add": [[(a + b) % 3 for b in range(3)] for a in range(3)],
                             "mul": [[(a * b) % 3 for b in range(3)] for a in range(3)], "zero": 0, "one": 1}))
    R = build(f"@{f}")
    assert R.size == 3 and R.mul(2, 2) == 1
    f.write_text(json.dumps({"size": 3, "add": [[0]]}))
    with pytest.raises(EvalError):
        build(f"@{f}")


def run(capsys, *argv, env=None):
    code = main(list(argv), env or {})
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "Zmod(8)", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["flags"]["is_uq"] is True and data["subsets"]["QN"]["size"] == 4
    code, out, _ = run(capsys, "--format", "json", "analyze", "M(2, F2)")
    data = json.loads(out)
    assert data["flags"]["is_uq"] is False and data["subsets"]["U"]["size"] == 6


def test_analyze_elides_large_subsets(capsys):
    _, out, _ = run(capsys, "analyze", "T(3, Zmod(4))", "--format", "json")
    data = json.loads(out)
    assert data["subsets"]["Z"]["members"] and data["subsets"]["U"] == {"size": 512, "elided": True}
    assert data["subsets"]["N*"] is None and data["flags"]["is_2primal"] is None


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "Zmod(12)")
    assert code == 0 and "is_uq = false" in out


def test_claims_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "claims", "--only", "C15", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["summary"]["fail"] == 0 and data["summary"]["pass"] == 17
    code, out, _ = run(capsys, "claims", "--only", "C31", "--rings", "A(2,2,F2)")
    assert code == 0 and "pass=1" in out
    out_file = tmp_path / "r.json"
    code, _, _ = run(capsys, "claims", "--only", "C02", "--literal", "--rings", "Zmod(8)", "--out", str(out_file))
    assert code == 0 and json.loads(out_file.read_text())["cells"][0]["status"] == "flagged"
    code, _, _ = run(capsys, "claims", "--only", "C02", "--literal", "--rings", "Zmod(8)", "--strict")
    assert code == 1


def test_iso_commands(capsys):
    code, out, _ = run(capsys, "iso", "trivext(F2)", "polyq(F2,2)", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["isomorphic"] and data["method"] == "search" and len(data["map"]["pairs"]) == 4
    _, out, _ = run(capsys, "iso", "A(2,2,F2)", "Tnm(2,2,F2)", "--format", "json")
    data = json.loads(out)
    assert data["isomorphic"] and data["method"] == "explicit" and data["verification"]["mode"] == "exhaustive"
    _, out, _ = run(capsys, "iso", "B(2,3,F2)", "S(3,2,F2)", "--format", "json")
    assert json.loads(out)["method"] == "explicit"
    _, out, _ = run(capsys, "iso", "Zmod(4)", "product(F2,F2)")
    assert out.startswith("not isomorphic")


def test_iso_search_cap(capsys):
    code, _, err = run(capsys, "iso", "polyq(F2, 5)", "polyq(F2, 5)")
    assert code == 2 and json.loads(err)["error"] == "SizeCapExceeded"


def test_errors_are_single_json_lines(capsys):
    for argv in (["analyze", "M(2, Zmod(2)"], ["explain", "C00"], ["analyze", "corner(F2, 0)"], ["nope"], ["analyze"]):
        code, out, err = run(capsys, *argv)
        assert code != 0 and out == ""
        assert err.count("\n") == 1 and "error" in json.loads(err)
    _, _, err = run(capsys, "analyze", "M(2, Zmod(2)")
    assert json.loads(err)["position"] == 12


def test_env_overrides(capsys):
    code, _, err = run(capsys, "analyze", "T(2, Zmod(4))", env={"FINRING_TABLE_CAP": "10"})
    assert code == 2 and "table cap 10" in err
    code, out, _ = run(capsys, "analyze", "Zmod(4)", env={"FINRING_FORMAT": "json"})
    assert json.loads(out)["size"] == 4
    # command-line flags win over the environment
    code, out, _ = run(capsys, "analyze", "Zmod(4)", "--format", "text", env={"FINRING_FORMAT": "json"})
    assert out.startswith("Zmod(4): 4 elements")
    code, _, err = run(capsys, "analyze", "Zmod(4)", env={"FINRING_SEED": "x"})
    assert code == 2


def test_corpus_list(capsys):
    code, out, _ = run(capsys, "corpus", "--list", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["rings"]) >= 40
    assert {"label": "groupring(Zmod(4), Q8)", "size": 65536} in data["excluded"]


def test_explain_command(capsys):
    code, out, _ = run(capsys, "explain", "C15")
    assert code == 0 and "Corollary 3.14" in out
