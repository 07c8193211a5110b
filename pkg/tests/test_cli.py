"""End-to-end CLI behavior through main(argv), including exit codes."""

import pytest

from binomod2.cli import main
from binomod2.registry import builtin_entries, lookup
from binomod2.rulesys import format_system


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestScalarCommands:
    def test_parity(self, capsys):
        assert run(capsys, "parity", "8", "4") == (0, "0\n", "")
        assert run(capsys, "parity", "7", "3") == (0, "1\n", "")

    def test_f(self, capsys):
        assert run(capsys, "f", "--coeffs", "1,1,1,-1", "1", "0") == (0, "1\n", "")
        assert run(capsys, "f", "--coeffs", "1,-1,0,2", "4", "1") == (0, "0\n", "")

    def test_mu(self, capsys):
        assert run(capsys, "mu", "413") == (0, "3 29 7\n", "")

    def test_mu_rejects_even(self, capsys):
        code, out, err = run(capsys, "mu", "6")
        assert code == 2
        assert "error:" in err

    def test_bad_coeffs_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "f", "--coeffs", "1,2,3", "0", "0")
        assert exc.value.code == 2


class TestSeq:
    def test_three_methods_agree_bytewise(self, capsys):
        for e in builtin_entries():
            outs = set()
            for method in ("oracle", "rules", "rlt"):
                code, out, _ = run(capsys, "seq", "--entry", e.name,
                                   "--method", method, "--count", "256")
                assert code == 0
                outs.add(out)
            assert len(outs) == 1, e.name

    def test_bfile_format(self, capsys):
        code, out, _ = run(capsys, "seq", "--entry", "pow2", "--count", "4")
        assert code == 0
        assert out == "0 1\n1 2\n2 2\n3 4\n"

    def test_oracle_without_entry(self, capsys):
        code, out, _ = run(capsys, "seq", "--coeffs", "1,0,0,1",
                           "--method", "oracle", "--count", "8")
        assert code == 0
        assert out == "0 1\n1 2\n2 2\n3 4\n4 2\n5 4\n6 4\n7 8\n"

    def test_at_huge_index(self, capsys):
        n = (1 << 1000) | 0b110111
        code_r, out_r, _ = run(capsys, "seq", "--entry", "fib",
                               "--method", "rules", "--at", str(n))
        code_t, out_t, _ = run(capsys, "seq", "--entry", "fib",
                               "--method", "rlt", "--at", str(n))
        assert code_r == code_t == 0
        assert out_r == out_t
        assert out_r.startswith(str(n) + " ")

    def test_unknown_coefficients_need_an_entry(self, capsys):
        code, _, err = run(capsys, "seq", "--coeffs", "5,5,5,5", "--method", "rules")
        assert code == 2
        assert "error:" in err


class TestRlt:
    def test_file_base_with_comments(self, capsys, tmp_path):
        f = tmp_path / "base.txt"
        f.write_text("# fib prefix\n1\n1 # S(1)\n2\n3\n5\n")
        code, out, _ = run(capsys, "rlt", "--base", str(f), "--count", "16")
        assert code == 0
        _, want, _ = run(capsys, "seq", "--entry", "fib", "--method", "rlt",
                         "--count", "16")
        assert out == want

    def test_registry_name_base(self, capsys):
        code, out, _ = run(capsys, "rlt", "--base", "posint", "--count", "8")
        assert code == 0
        assert out == "0 1\n1 2\n2 2\n3 3\n4 2\n5 4\n6 3\n7 4\n"

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "rlt", "--base", "nosuch")
        assert code == 2 and "error:" in err

    def test_bad_file_content(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("1\nnot-a-number\n")
        code, _, err = run(capsys, "rlt", "--base", str(f))
        assert code == 2 and "error:" in err

    def test_short_base_exhausts(self, capsys, tmp_path):
        f = tmp_path / "short.txt"
        f.write_text("1\n1\n")
        code, _, err = run(capsys, "rlt", "--base", str(f), "--count", "16")
        assert code == 2 and "error:" in err


class TestVerify:
    def test_corpus_all_expected(self, capsys):
        code, out, _ = run(capsys, "verify", "--corpus", "--bound", "32")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "corpus: 431 pass, 7 fail, 0 unexpected (bound 32)"
        assert sum(1 for ln in lines if ln.startswith("FAIL")) == 7
        assert "[UNEXPECTED]" not in out

    def test_entry_and_aliases(self, capsys):
        code, out, _ = run(capsys, "verify", "--entry", "fib", "--bound", "128")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4  # main vector plus three aliases
        assert all(ln.startswith("PASS triple-equivalence fibonacci") for ln in lines)


class TestConjecture:
    def test_rediscovers_narayana(self, capsys):
        code, out, _ = run(capsys, "conjecture", "--coeffs", "1,-1,0,6",
                           "--max-mod", "3", "--bound", "2048")
        assert code == 0
        assert out == format_system(lookup("cows").rules)

    def test_reports_unfittable_residue(self, capsys):
        code, out, _ = run(capsys, "conjecture", "--coeffs", "1,1,1,-1",
                           "--max-mod", "1", "--bound", "512")
        assert code == 1
        assert "no rule found for residue 1 mod 2" in out


class TestOeis:
    def test_match(self, capsys, tmp_path):
        code, out, _ = run(capsys, "oeis", "compare", "--id", "A246028",
                           "--entry", "fib", "--count", "256",
                           "--offline", "--cache-dir", str(tmp_path))
        assert code == 0
        assert "256 terms match" in out

    def test_mismatch(self, capsys, tmp_path):
        code, out, _ = run(capsys, "oeis", "compare", "--id", "A106737",
                           "--entry", "pow2", "--count", "64",
                           "--offline", "--cache-dir", str(tmp_path))
        assert code == 1
        assert "mismatch at index 3 (4 vs 3)" in out

    def test_bad_id(self, capsys, tmp_path):
        code, _, err = run(capsys, "oeis", "compare", "--id", "junk",
                           "--entry", "fib", "--offline",
                           "--cache-dir", str(tmp_path))
        assert code == 2 and "error:" in err

    def test_offline_miss(self, capsys, tmp_path):
        code, _, err = run(capsys, "oeis", "compare", "--id", "A999999",
                           "--entry", "fib", "--offline",
                           "--cache-dir", str(tmp_path))
        assert code == 3 and "error:" in err


class TestTriangle:
    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "triangle", "--rows", "5")
        assert code == 0
        assert out == "1\n1 1\n1 0 1\n1 1 1 1\n1 0 0 0 1\n"

    def test_pbm(self, capsys):
        code, out, _ = run(capsys, "triangle", "--rows", "4", "--format", "pbm")
        assert code == 0
        assert out == ("P1\n4 4\n"
                       "1 0 0 0\n"
                       "1 1 0 0\n"
                       "1 0 1 0\n"
                       "1 1 1 1\n")
