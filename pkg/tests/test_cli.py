"""CLI behaviour: golden outputs, determinism, exit codes."""

import subprocess
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

GOLDEN_COMMANDS = {
    "arf_g1a0": ["arf", "--form", "data/form_g1a0.txt"],
    "arf_g1a1": ["arf", "--form", "data/form_g1a1.txt"],
    "psi_swap": ["psi", "--form", "data/form_g1a0.txt", "--matrix", "data/swap2.txt"],
    "q_a4": ["q", "--surface", "data/surf_g1a0.txt", "--word", "data/a4.word"],
    "q_identity": ["q", "--surface", "data/surf_g1a0.txt", "--word", "data/empty.word"],
    "q_genus0_flip": ["q", "--surface", "data/surf_g0.txt", "--word", "data/flip.word"],
    "q_umap_matrix": ["q", "--surface", "data/surf_g2a0.txt",
                      "--matrix", "data/u0.txt", "--epsilon", "0"],
    "decompose_swap": ["decompose", "--form", "data/form_g1a0.txt",
                       "--matrix", "data/swap2.txt"],
    "decompose_u0": ["decompose", "--form", "data/form_g2a0.txt",
                     "--matrix", "data/u0.txt"],
    "verify_swap": ["verify", "--form", "data/form_g1a0.txt",
                    "--matrix", "data/swap2.txt",
                    "--decomposition", "data/dec_swap.txt"],
    "check_rh": ["check-rh", "--surface", "data/surf_g1a0.txt",
                 "--surface", "data/surf_g1a1.txt"],
    "check_rh_same": ["check-rh", "--surface", "data/surf_g1a1.txt",
                      "--surface", "data/surf_g1a1.txt"],
    "enumerate_g1a1": ["enumerate", "--form", "data/form_g1a1.txt"],
    "enumerate_g2a0": ["enumerate", "--form", "data/form_g2a0.txt"],
    "catalog_arf0": ["catalog", "--genus", "1", "--arf", "0"],
    "catalog_arf1": ["catalog", "--genus", "1", "--arf", "1"],
}


def run_cli(argv, cwd=HERE):
    return subprocess.run(
        [sys.executable, "-m", "quadpoint", *argv],
        capture_output=True, text=True, cwd=cwd)


@pytest.mark.parametrize("name", sorted(GOLDEN_COMMANDS))
def test_golden(name):
    argv = GOLDEN_COMMANDS[name]
    first = run_cli(argv)
    second = run_cli(argv)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout  # byte-identical across runs
    assert first.stdout == (GOLDEN / f"{name}.txt").read_text()
    assert first.stderr == ""


def test_inline_matrix_argument():
    res = run_cli(["psi", "--form", "data/form_g1a0.txt", "--matrix", "01/10"])
    assert res.returncode == 0
    assert res.stdout == "psi 1\n"


class TestErrors:
    def test_membership_failure(self):
        res = run_cli(["q", "--surface", "data/surf_g1a0.txt",
                       "--word", "data/bad.word"])
        assert res.returncode == 2
        assert res.stdout == ""
        assert res.stderr.startswith("error membership:")

    def test_not_orthogonal_matrix(self):
        # invertible, but sends l to m+l which has the wrong g-value
        res = run_cli(["psi", "--form", "data/form_g1a0.txt", "--matrix", "11/01"])
        assert res.returncode == 2
        assert res.stderr.startswith("error precondition:")

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("not a form\n")
        res = run_cli(["arf", "--form", str(bad)])
        assert res.returncode == 1
        assert res.stderr.startswith("error parse:")

    def test_missing_file(self):
        res = run_cli(["arf", "--form", "data/never_written.txt"])
        assert res.returncode == 1
        assert res.stderr.startswith("error parse:")

    def test_usage_error(self):
        res = run_cli(["arf"])
        assert res.returncode == 1
        assert res.stderr.startswith("error usage:")

    def test_catalog_wrong_genus(self):
        res = run_cli(["catalog", "--genus", "2", "--arf", "0"])
        assert res.returncode == 2
        assert res.stderr.startswith("error precondition:")

    def test_genus_mismatch(self):
        res = run_cli(["check-rh", "--surface", "data/surf_g1a0.txt",
                       "--surface", "data/surf_g2a0.txt"])
        assert res.returncode == 2
        assert res.stderr.startswith("error precondition:")

    def test_verify_fail(self, tmp_path):
        wrong = tmp_path / "wrong.txt"
        wrong.write_text("u 0\n")
        res = run_cli(["verify", "--form", "data/form_g1a0.txt",
                       "--matrix", "data/swap2.txt",
                       "--decomposition", str(wrong)])
        assert res.returncode == 2
        assert res.stdout == "verify fail\n"

    def test_enumerate_guard(self, tmp_path):
        from quadpoint.formats import dump_form
        from quadpoint.quadform import standard_form

        big = tmp_path / "big.txt"
        big.write_text(dump_form(standard_form(5, 0)))
        res = run_cli(["enumerate", "--form", str(big)])
        assert res.returncode == 2
        assert res.stderr.startswith("error guard:")


def test_decompose_verify_round_trip(tmp_path):
    dec = tmp_path / "dec.txt"
    res = run_cli(["decompose", "--form", "data/form_g2a0.txt", "--matrix", "data/u0.txt"])
    assert res.returncode == 0
    dec.write_text(res.stdout)
    check = run_cli(["verify", "--form", "data/form_g2a0.txt",
                     "--matrix", "data/u0.txt", "--decomposition", str(dec)])
    assert check.returncode == 0
    assert check.stdout == "verify ok\n"


@pytest.mark.parametrize("genus,arf_value,seed", [(1, 1, 3), (2, 0, 4), (3, 1, 5)])
def test_decompose_verify_random(tmp_path, genus, arf_value, seed):
    from quadpoint.formats import dump_form, dump_matrix
    from quadpoint.oracle import random_orthogonal
    from quadpoint.quadform import standard_form

    f = standard_form(genus, arf_value)
    form_file = tmp_path / "form.txt"
    form_file.write_text(dump_form(f))
    matrix_file = tmp_path / "m.txt"
    matrix_file.write_text(dump_matrix(random_orthogonal(f, seed, 2 * genus + 1).matrix))
    dec = tmp_path / "dec.txt"
    res = run_cli(["decompose", "--form", str(form_file), "--matrix", str(matrix_file)])
    assert res.returncode == 0
    dec.write_text(res.stdout)
    check = run_cli(["verify", "--form", str(form_file),
                     "--matrix", str(matrix_file), "--decomposition", str(dec)])
    assert check.returncode == 0
    assert check.stdout == "verify ok\n"
