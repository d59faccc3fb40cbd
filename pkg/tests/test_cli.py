import json
import subprocess
import sys
from pathlib import Path

import pytest

from lawvere import cli

FIX = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, data, name="spec.json"):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return p


def test_hom_maybe(capsys):
    code, out, _ = run(capsys, "hom", "--spec", FIX / "maybe.json", "--m", 1, "--n", 1)
    assert code == 0
    assert out.splitlines() == ["[0]", "[1]", "count: 2"]


def test_hom_out_of_zero_is_a_singleton(capsys):
    for spec in ("monoid.json", "identity.json", "free_monoid.json"):
        code, out, _ = run(capsys, "hom", "--spec", FIX / spec, "--m", 0, "--n", 2)
        assert code == 0 and out.splitlines()[-1] == "count: 1"


def test_hom_monoid_lists_normal_forms(capsys):
    _, out, _ = run(capsys, "hom", "--spec", FIX / "monoid.json", "--m", 1, "--n", 1)
    assert {'["x0"]', '["e"]', '["(mul x0 x0)"]'} <= set(out.splitlines())


@pytest.mark.parametrize("spec,term,subs,expected", [
    ("monoid.json", "(mul x0 e)", ["(mul x1 x0)"], "(mul x1 x0)"),
    ("monoid.json", "x0", ["(mul x0 x1)"], "(mul x0 x1)"),
    ("free_terms.json", "(mul x0 (mul x1 x0))", ["e", "x0"], "(mul e (mul x0 e))"),
])
def test_subst_examples(capsys, spec, term, subs, expected):
    code, out, _ = run(capsys, "subst", "--spec", FIX / spec, "--term", term, "--with", *subs)
    assert code == 0 and out.strip() == expected


def test_subst_scope_errors_name_the_variable(capsys):
    code, _, err = run(capsys, "subst", "--spec", FIX / "monoid.json", "--term", "(mul x0 x1)",
                       "--with", "e")
    assert code == 2 and "x1" in err
    code, _, err = run(capsys, "subst", "--spec", FIX / "monoid.json", "--term", "x0",
                       "--with", "x3", "--n", 2)
    assert code == 2 and "x3" in err


def test_subst_needs_terms(capsys):
    code, _, err = run(capsys, "subst", "--spec", FIX / "maybe.json", "--term", "x0", "--with", "x0")
    assert code == 2


def test_laws_exit_codes(capsys):
    assert run(capsys, "laws", "--spec", FIX / "maybe.json")[0] == 0
    code, out, _ = run(capsys, "laws", "--spec", FIX / "nonconfluent.json", "--nmax", 1)
    assert code == 1 and "FAIL" in out and "witness:" in out
    code, _, err = run(capsys, "laws", "--spec", FIX / "malformed.json")
    assert code == 2 and "line 4, column 3" in err


@pytest.mark.parametrize("data,where", [
    ({"kind": "category"}, "kind"),
    ({"kind": "monad", "builtin": "term"}, "builtin"),
    ({"kind": "monad", "builtin": "list"}, "builtin"),
    ({"kind": "monad"}, "builtin"),
    ({"kind": "monad", "builtin": "maybe", "rules": [{"lhs": "e", "rhs": "e"}]}, "rules"),
    ({"kind": "monad", "builtin": "maybe", "bounds": {"nmax": -1}}, "bounds.nmax"),
    ({"kind": "monad", "builtin": "maybe", "color": 1}, "color"),
    ({"kind": "theory", "builtin": "term", "signature": [{"op": "f", "arity": 1}],
      "rules": [{"lhs": "(f x0)", "rhs": "x0"}, {"lhs": "(f (f x0)", "rhs": "x0"}]},
     "rules[1].lhs"),
    ({"kind": "theory", "builtin": "term", "signature": [{"op": "f", "arity": 1}],
      "rules": [{"lhs": "(f x0)", "rhs": "(g x0)"}]}, "rules[0].rhs"),
    ({"kind": "theory", "signature": [{"op": "x1", "arity": 0}]}, "signature"),
])
def test_validation_errors_say_where(capsys, tmp_path, data, where):
    code, _, err = run(capsys, "laws", "--spec", write(tmp_path, data))
    assert code == 2
    assert f": {where}:" in err


def test_missing_file_is_an_input_error(capsys, tmp_path):
    assert run(capsys, "laws", "--spec", tmp_path / "nope.json")[0] == 2


def test_roundtrip_commands(capsys):
    code, out, _ = run(capsys, "roundtrip", "--spec", FIX / "identity.json", "--nmax", 2)
    assert code == 0 and "components are bijections" in out
    code, out, _ = run(capsys, "roundtrip", "--spec", FIX / "unsound_monoid.json", "--nmax", 2)
    assert code == 1
    assert "FAIL  eval[term(unsound_monoid)]: commutes with extension" in out


def test_roundtrip_free_monoid(capsys):
    assert run(capsys, "roundtrip", "--spec", FIX / "free_monoid.json")[0] == 0


def test_json_report_rerenders_byte_identically(capsys, tmp_path):
    for cmd, spec in (("laws", "nonconfluent.json"), ("roundtrip", "maybe.json")):
        target = tmp_path / f"{cmd}.json"
        code, out, _ = run(capsys, cmd, "--spec", FIX / spec, "--nmax", 1, "--json", target)
        code2, again, _ = run(capsys, "render", target)
        assert again == out and code2 == code


def test_runs_are_deterministic(capsys):
    args = ("laws", "--spec", FIX / "free_terms.json", "--nmax", 2, "--table-cap", 50, "--seed", 7)
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_flags_override_spec_bounds(capsys):
    _, out, _ = run(capsys, "hom", "--spec", FIX / "monoid.json", "--m", 1, "--n", 1, "--bound", 1)
    assert out.splitlines() == ['["x0"]', '["e"]', "count: 2"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lawvere", "hom", "--spec",
                           str(FIX / "maybe.json"), "--m", "1", "--n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.endswith("count: 2\n")
