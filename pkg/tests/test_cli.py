import subprocess
import sys

import pytest

from ydlab.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, ModelFileError, main, parse_model_text
from ydlab.suites import SUITES, run

Z3 = """\
group Z3
elements e a b     # identity first
table
e a b
a b e
b e a
end
"""

Z2_SWAP = """\
group Z2
elements e g
table
e g
g e
end
set 2
action
e: 0 1
g: 1 0
end
"""

BROKEN_ANTIPODE = """\
group Z3
elements e a b
table
e a b
a b e
b e a
end
antipode function
e a b
end
"""

LOOP = """\
group loop
elements e a b c d
table
e a b c d
a e c d b
b d e a c
c b d e a
d c a b e
end
"""

NON_ACTION = """\
group Z3
elements e a b
table
e a b
a b e
b e a
end
set 3
action
e: 0 1 2
a: 1 2 0
b: 1 0 2
end
"""


def write(tmp_path, text, name="model.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run_cli(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_group_and_action():
    m = parse_model_text(Z2_SWAP)
    assert m.group.n == 2 and m.group.labels == ["e", "g"]
    assert m.action.perm == [(0, 1), (1, 0)]


@pytest.mark.parametrize("text, line, message", [
    (LOOP, 3, "invalid group table: not associative"),
    (NON_ACTION, 9, "not an action: not compatible with the group law"),
    (Z3.replace("a b e", "a b"), 5, "row needs 3 entries"),
    (Z3.replace("b e a", "b e x"), 6, "unknown element 'x'"),
    (Z3.replace("end\n", ""), 3, "table block has no 'end'"),
    (Z3 + "colour red\n", 8, "unknown keyword 'colour'"),
    (Z3 + "set 0\n", 8, "expected 'set <positive size>'"),
    (Z3.replace("elements e a b", "elements e a a"), 2, "repeated element label"),
])
def test_parse_errors_name_the_line(text, line, message):
    with pytest.raises(ModelFileError) as info:
        parse_model_text(text, "m.txt")
    assert info.value.line == line
    assert str(info.value).startswith("m.txt:%d: %s" % (line, message))


def test_missing_table():
    with pytest.raises(ModelFileError, match="missing 'table'"):
        parse_model_text("group G\nelements e\n")


def test_file_suite_passes(tmp_path, capsys):
    code, out, _ = run_cli(["check", "--suite", "hopf", "--file", write(tmp_path, Z3)], capsys)
    assert code == EXIT_OK
    assert out.rstrip().endswith("result: pass")


def test_broken_antipode_file_fails(tmp_path, capsys):
    code, out, _ = run_cli(["check", "--suite", "hopf", "--file", write(tmp_path, BROKEN_ANTIPODE)], capsys)
    assert code == EXIT_FAIL
    assert "FAIL  antipode: law" in out
    assert out.rstrip().endswith("result: FAIL")


def test_invalid_file_exit_code(tmp_path, capsys):
    code, _, err = run_cli(["check", "--suite", "hopf", "--file", write(tmp_path, LOOP)], capsys)
    assert code == EXIT_USAGE
    assert ":3: invalid group table: not associative" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run_cli(["check", "--suite", "hopf", "--file", str(tmp_path / "nope.txt")], capsys)
    assert code == EXIT_USAGE
    assert "nope.txt" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check", "--suite", "bogus", "--catalog", "z2"])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["check", "--suite", "hopf"])
    assert info.value.code == EXIT_USAGE
    capsys.readouterr()


def test_catalog_yd_s3(capsys):
    code, out, _ = run_cli(["check", "--suite", "yd", "--catalog", "s3-on-3points"], capsys)
    assert code == EXIT_OK
    assert "summary:" in out and "0 failed" in out


def test_catalog_all_z2(capsys):
    code, out, _ = run_cli(["check", "--suite", "all", "--catalog", "z2"], capsys)
    assert code == EXIT_OK
    for suite in SUITES:
        assert "## suite %s" % suite in out


def test_max_order_gate(capsys):
    code, _, err = run_cli(["check", "--suite", "hopf", "--catalog", "d4"], capsys)
    assert code == EXIT_USAGE and "exceeds --max-order" in err
    code, _, _ = run_cli(["check", "--suite", "hopf", "--catalog", "d4", "--max-order", "8"], capsys)
    assert code == EXIT_OK


def test_heisenberg_double_gate(capsys):
    code, _, err = run_cli(["check", "--suite", "heisenberg-double", "--catalog", "z4"], capsys)
    assert code == EXIT_USAGE and "--max-order 4" in err
    code, out, _ = run_cli(["check", "--suite", "heisenberg-double", "--catalog", "z2"], capsys)
    assert code == EXIT_OK


def test_all_skips_large_heisenberg_double(capsys):
    code, out, _ = run_cli(["check", "--suite", "all", "--catalog", "klein4"], capsys)
    assert code == EXIT_OK
    assert "1 skipped" in out


def test_structured_output(capsys):
    code, out, _ = run_cli(["check", "--suite", "pairing", "--catalog", "z3", "--format", "structured"], capsys)
    assert code == EXIT_OK
    blocks = [b.split("\n") for b in out.strip().split("\n\n")]
    for b in blocks[:-1]:
        assert [l.split(":", 1)[0] for l in b] == ["suite", "section", "check", "status", "detail"]
        assert b[3] in ("status: pass", "status: fail", "status: skip")
    summary = dict(l.split(": ", 1) for l in blocks[-1])
    assert summary["instance"] == "z3"
    assert summary["failed"] == "0" and summary["result"] == "pass"
    assert int(summary["passed"]) == len(blocks) - 1


def test_output_is_deterministic(capsys):
    argv = ["check", "--suite", "constructions", "--catalog", "z3-on-z3", "--format", "structured"]
    first = run_cli(argv, capsys)[1]
    second = run_cli(argv, capsys)[1]
    assert first == second


def test_run_rejects_unknown_suite():
    from ydlab.cli import catalog_model
    with pytest.raises(KeyError):
        run("bogus", catalog_model("z2"))


def test_console_script(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "ydlab.cli", "check", "--suite", "hopf", "--file",
                           write(tmp_path, BROKEN_ANTIPODE)], capture_output=True, text=True)
    assert proc.returncode == EXIT_FAIL
    assert "antipode: law" in proc.stdout
