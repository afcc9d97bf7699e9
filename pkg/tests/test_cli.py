import io
import json
import subprocess
import sys

import pytest

from gcdmorphic.cli import (
    EX_CHECK_FAILED,
    EX_DATAERR,
    EX_ENCODE_FAILED,
    EX_OK,
    EX_USAGE,
    main,
)

NATURALS_CODE_17 = (1, 2, 3, 2, 5, 1, 7, 2, 3, 1, 11, 1, 13, 1, 1, 2, 17)


def run(argv, input_text=""):
    out, err = io.StringIO(), io.StringIO()
    rc = main(argv, stdin=io.StringIO(input_text), stdout=out, stderr=err)
    return rc, out.getvalue(), err.getvalue()


def lines_of(text):
    return [ln for ln in text.splitlines() if ln and not ln.startswith("#")]


class TestEncodeDecode:
    def test_emit_pipe_encode_matches_reference_code(self):
        rc, seq, _ = run(["catalog", "emit", "naturals", "--length", "17"])
        assert rc == EX_OK
        rc, code, _ = run(["encode"], seq)
        assert rc == EX_OK
        assert tuple(int(v) for v in lines_of(code)) == NATURALS_CODE_17

    def test_decode_then_encode_is_identity(self):
        code_text = "\n".join(str(v) for v in NATURALS_CODE_17) + "\n"
        rc, seq, _ = run(["decode"], code_text)
        assert rc == EX_OK
        rc, back, _ = run(["encode"], seq)
        assert rc == EX_OK
        assert back == code_text

    def test_encode_failure_diagnostic(self):
        rc, out, err = run(["encode"], "1\n2\n3\n5\n")
        assert rc == EX_ENCODE_FAILED
        assert out == ""
        payload = json.loads(err)
        assert payload == {"kind": "encode", "n": 4, "numerator": "5", "denominator": "2"}

    def test_comments_and_blank_lines_ignored(self):
        rc, out, _ = run(["decode"], "# a comment\n\n1\n 2 \n# another\n3\n")
        assert rc == EX_OK
        assert lines_of(out) == ["1", "2", "3"]

    def test_json_output_uses_string_values(self):
        rc, out, _ = run(["encode", "--json"], "1\n1\n2\n3\n5\n8\n13\n21\n")
        assert rc == EX_OK
        payload = json.loads(out)
        assert payload["role"] == "code"
        assert payload["values"] == ["1", "1", "2", "3", "5", "4", "13", "7"]
        assert all(isinstance(v, str) for v in payload["values"])

    def test_json_survives_huge_values(self):
        rc, seq, _ = run(["catalog", "emit", "mersenne", "--length", "80", "--json"])
        assert rc == EX_OK
        values = json.loads(seq)["values"]
        assert int(values[-1]) == 2**80 - 1


class TestChecks:
    def test_check_c1_pass(self):
        code_text = "\n".join(str(v) for v in NATURALS_CODE_17) + "\n"
        rc, out, _ = run(["check", "c1"], code_text)
        assert rc == EX_OK
        assert out.strip() == '{"ok":true}'

    def test_check_c1_failure_witness(self):
        rc, out, _ = run(["check", "c1"], "1\n2\n6\n12\n120\n60\n")
        assert rc == EX_CHECK_FAILED
        assert out.strip() == '{"kind":"c1","n":3,"k":2,"g":"2"}'

    def test_check_morphic_witness_exact_bytes(self):
        rc, out, _ = run(["check", "morphic"], "1\n2\n6\n24\n120\n720\n")
        assert rc == EX_CHECK_FAILED
        assert out.strip() == '{"kind":"morphic","n":3,"m":2,"got":"2","expected":"1"}'

    def test_fibonacci_pipeline_passes_c1(self):
        rc, seq, _ = run(["catalog", "emit", "fibonacci", "--length", "12"])
        rc, code, _ = run(["encode"], seq)
        rc, out, _ = run(["check", "c1"], code)
        assert rc == EX_OK

    def test_certify_pass_and_fail(self):
        rc, out, _ = run(["check", "certify"], "1\n1\n2\n3\n5\n8\n")
        assert rc == EX_OK and out.strip() == '{"ok":true}'
        rc, out, _ = run(["check", "certify"], "1\n2\n6\n24\n120\n720\n")
        assert rc == EX_CHECK_FAILED
        assert json.loads(out)["kind"] == "morphic"


class TestGenCorrupt:
    def test_gen_decode_check_pipeline(self):
        for seed in (0, 1, 42, 9999):
            rc, code, _ = run(["gen", "--length", "64", "--seed", str(seed)])
            assert rc == EX_OK
            assert code.startswith("# rng=")
            rc, seq, _ = run(["decode"], code)
            assert rc == EX_OK
            rc, out, _ = run(["check", "morphic"], seq)
            assert rc == EX_OK, out

    def test_gen_deterministic(self):
        a = run(["gen", "--length", "32", "--seed", "7"])
        b = run(["gen", "--length", "32", "--seed", "7"])
        assert a == b

    def test_gen_rejects_bad_params(self):
        rc, _, err = run(["gen", "--length", "8", "--seed", "1", "--primes", "2", "--chains", "5"])
        assert rc == EX_USAGE
        rc, _, _ = run(["gen", "--length", "0", "--seed", "1"])
        assert rc == EX_USAGE

    def test_corrupt_pipeline_fails_c1(self):
        rc, code, _ = run(["gen", "--length", "48", "--seed", "5"])
        rc, bad, _ = run(["corrupt", "--seed", "6"], code)
        assert rc == EX_OK
        rc, out, _ = run(["check", "c1"], bad)
        assert rc == EX_CHECK_FAILED
        assert json.loads(out)["kind"] == "c1"

    def test_corrupt_short_input_is_data_error(self):
        rc, _, err = run(["corrupt", "--seed", "1"], "1\n2\n")
        assert rc == EX_DATAERR


class TestCatalogCommands:
    def test_list_shows_entries_and_patterns(self):
        rc, out, _ = run(["catalog", "list"])
        assert rc == EX_OK
        assert "fibonacci" in out
        assert "factorial" in out and "not-morphic" in out
        assert "primary:C:N" in out
        assert "constant:C" in out

    def test_emit_parameterized(self):
        rc, out, _ = run(["catalog", "emit", "primary:3:2", "--length", "6"])
        assert rc == EX_OK
        assert lines_of(out) == ["1", "3", "1", "3", "1", "3"]

    def test_emit_unknown_name_is_usage_error(self):
        rc, _, err = run(["catalog", "emit", "unobtainium", "--length", "4"])
        assert rc == EX_USAGE
        assert "unknown catalog name" in err


class TestRealProcess:
    def run_proc(self, args, input_text=""):
        return subprocess.run(
            [sys.executable, "-m", "gcdmorphic.cli", *args],
            input=input_text,
            capture_output=True,
            text=True,
        )

    def test_pipeline_through_os_pipes(self):
        emit = self.run_proc(["catalog", "emit", "fibonacci", "--length", "12"])
        assert emit.returncode == EX_OK
        enc = self.run_proc(["encode"], emit.stdout)
        assert enc.returncode == EX_OK
        chk = self.run_proc(["check", "c1"], enc.stdout)
        assert chk.returncode == EX_OK
        assert chk.stdout.strip() == '{"ok":true}'

    def test_exit_codes_cross_process(self):
        assert self.run_proc(["check", "morphic"], "1\n2\n6\n24\n120\n720\n").returncode == 1
        assert self.run_proc(["encode"], "1\n2\n3\n5\n").returncode == 2
        assert self.run_proc(["bogus"]).returncode == 64
        assert self.run_proc(["decode"], "zero\n").returncode == 65

    def test_help_exits_zero(self):
        assert self.run_proc(["--help"]).returncode == 0


class TestExitCodes:
    @pytest.mark.parametrize(
        "input_text",
        ["abc\n", "0\n", "-3\n", "1\n2\nx\n", "", "# only comments\n\n"],
    )
    def test_malformed_input_is_65(self, input_text):
        rc, _, err = run(["decode"], input_text)
        assert rc == EX_DATAERR
        assert err.startswith("error:")

    def test_usage_error_is_64(self):
        assert run(["frobnicate"])[0] == EX_USAGE
        assert run([])[0] == EX_USAGE
        assert run(["check"])[0] == EX_USAGE
        assert run(["gen", "--length", "8"])[0] == EX_USAGE  # missing --seed

    def test_check_failures_are_1(self):
        rc, _, _ = run(["check", "morphic"], "1\n2\n6\n24\n120\n720\n")
        assert rc == EX_CHECK_FAILED
