import json
import os
import stat

import pytest

from gitfan.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, EXIT_VERIFY, main, write_atomic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, line", [
    (["fan", "so", "--n", "3", "--m", "3"], "classes: total 43 (dim 3: 12, dim 2: 21, dim 1: 10)"),
    (["fan", "--group", "sl", "--n", "2", "--m1", "1", "--m2", "1"], "classes: total 1 (dim 1: 1)"),
    (["fan", "so", "--n", "3", "--m", "2"], "classes: total 5 (dim 2: 2, dim 1: 3)"),
])
def test_fan_text(capsys, argv, line):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK and out.strip() == line


def test_fan_json_to_file(capsys, tmp_path):
    path = tmp_path / "fan.json"
    code, out, _ = run(capsys, "fan", "so", "--n", "3", "--m", "3", "--format", "json", "--out", str(path))
    assert code == EXIT_OK and out == ""
    assert json.loads(path.read_text())["histogram"]["total"] == 43


def test_fan_json_independent_of_threads(capsys):
    outs = []
    for t in ("1", "4"):
        code, out, _ = run(capsys, "fan", "sl", "--n", "3", "--m1", "2", "--m2", "2",
                           "--format", "json", "--threads", t)
        assert code == EXIT_OK
        outs.append(out)
    assert outs[0] == outs[1]


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "so", "--n", "3", "--m", "3")
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith("verified: 43/43 faces pass")
    code, out, _ = run(capsys, "verify", "sl", "--n", "3", "--m1", "2", "--m2", "2")
    assert code == EXIT_OK


def test_verify_without_witnesses(capsys):
    code, out, _ = run(capsys, "verify", "so", "--n", "3", "--m", "3", "--witnesses", "none")
    assert code == EXIT_VERIFY
    assert all(line.startswith("insufficient") for line in out.splitlines()[:-1])


def test_verify_json_with_random(capsys):
    code, out, _ = run(capsys, "verify", "so", "--n", "3", "--m", "3", "--format", "json",
                       "--random-witnesses", "20", "--seed", "5")
    data = json.loads(out)
    assert code == EXIT_OK and data["passed"] and data["seed"] == 5 and data["random_witnesses"] == 20
    assert len(data["faces"]) == 43


def test_plot(capsys, tmp_path):
    path = tmp_path / "so3.svg"
    code, out, _ = run(capsys, "plot", "so", "--n", "3", "--m", "3", "--out", str(path))
    assert code == EXIT_OK and out.strip() == "regions: 12, edges: 21, vertices: 10"
    assert path.read_text().startswith("<?xml")


@pytest.mark.parametrize("argv", [
    ["plot", "so", "--n", "3", "--m", "2"],
    ["fan", "so", "--n", "1", "--m", "3"],
    ["fan", "sl", "--n", "2"],
    ["fan", "xx", "--n", "3", "--m", "3"],
    ["fan", "so", "--n", "3", "--m", "3", "--threads", "0"],
    ["verify", "so", "--n", "3", "--m", "3", "--random-witnesses", "-1"],
    ["bogus"],
])
def test_invalid_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INVALID and err


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "fan", "so", "--n", "3", "--m", "2", "--out", str(tmp_path / "no" / "x.txt"))
    assert code == EXIT_IO and err


def test_write_atomic_leaves_no_partial_file(tmp_path):
    target = tmp_path / "out.txt"
    write_atomic(str(target), "first\n")
    write_atomic(str(target), "second\n")
    assert target.read_text() == "second\n"
    assert os.listdir(tmp_path) == ["out.txt"]


@pytest.mark.skipif(os.geteuid() == 0, reason="permissions are not enforced for root")
def test_write_atomic_readonly_dir(tmp_path):
    tmp_path.chmod(stat.S_IRUSR | stat.S_IXUSR)
    try:
        with pytest.raises(OSError):
            write_atomic(str(tmp_path / "x"), "data")
    finally:
        tmp_path.chmod(stat.S_IRWXU)
