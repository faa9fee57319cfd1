import pytest

from cli.main import (
    EXIT_DEADLOCK,
    EXIT_OK,
    EXIT_RUNTIME_ERROR,
    EXIT_USAGE_ERROR,
    main,
)
from tests.helpers import GOLDEN, PROGRAMS

HELLO = str(PROGRAMS / "hello.lol")


def write_program(tmp_path, text):
    path = tmp_path / "prog.lol"
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.mark.parametrize(
    "path", sorted(GOLDEN.glob("*.lol")), ids=lambda path: path.stem
)
def test_golden_output(path, capsys):
    expected = path.with_suffix(".out").read_text(encoding="utf-8")
    assert main([str(path), "--per-pe"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out == expected
    assert captured.err == ""


def test_per_pe_output_has_headers(capsys):
    assert main([HELLO, "--np", "2", "--per-pe"]) == EXIT_OK
    assert capsys.readouterr().out == (
        "=== PE 0 ===\n"
        "O HAI ITZ 0 OF 2 FRENZ\n"
        "=== PE 1 ===\n"
        "O HAI ITZ 1 OF 2 FRENZ\n"
    )


def test_interleaved_output_keeps_every_line(capsys):
    assert main([HELLO, "--np", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert sorted(lines) == [f"O HAI ITZ {pe} OF 3 FRENZ" for pe in range(3)]


def test_missing_file(tmp_path, capsys):
    assert main([str(tmp_path / "nope.lol")]) == EXIT_USAGE_ERROR
    assert "cannot read" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["--frobnicate", HELLO],
        [HELLO, "--np", "zero"],
        [HELLO, "--dump-tokens", "--dump-ast"],
        [],
    ],
)
def test_bad_arguments(argv, capsys):
    assert main(argv) == EXIT_USAGE_ERROR


@pytest.mark.parametrize(
    "argv, message",
    [
        ([HELLO, "--np", "0"], "--np must be at least 1"),
        ([HELLO, "--seed", "-1"], "--seed must be in"),
        ([HELLO, "--max-barrier-wait", "0"], "--max-barrier-wait must be positive"),
    ],
)
def test_out_of_range_settings(argv, message, capsys):
    assert main(argv) == EXIT_USAGE_ERROR
    assert message in capsys.readouterr().err


def test_parse_error_exit_code(tmp_path, capsys):
    path = write_program(tmp_path, "HAI 1.2\nVISIBLE SUM OF 1 2\nKTHXBYE\n")
    assert main([path]) == EXIT_USAGE_ERROR
    err = capsys.readouterr().err
    assert err.startswith(f"{path}:2:")
    assert "parse error: missing AN between operands" in err


def test_lex_error_exit_code(tmp_path, capsys):
    path = write_program(tmp_path, "HAI 1.2\nVISIBLE @\nKTHXBYE\n")
    assert main([path]) == EXIT_USAGE_ERROR
    assert capsys.readouterr().err.startswith(f"{path}:2:9: lex error:")


def test_runtime_error_exit_code(tmp_path, capsys):
    path = write_program(
        tmp_path, 'HAI 1.2\nVISIBLE "BEFORE"\nVISIBLE QUOSHUNT OF 1 AN 0\nKTHXBYE\n'
    )
    assert main([path]) == EXIT_RUNTIME_ERROR
    captured = capsys.readouterr()
    assert captured.out == "BEFORE\n"
    assert captured.err == f"{path}:3:1: [pe 0] runtime error: division by zero\n"


def test_deadlock_exit_code(capsys):
    path = str(PROGRAMS / "barrier_skip.lol")
    assert main([path, "--np", "2", "--max-barrier-wait", "2"]) == EXIT_DEADLOCK
    err = capsys.readouterr().err
    assert f"{path}: deadlock: barrier can never complete" in err
    assert "pe 0: blocked-on-barrier at 5:3" in err
    assert "pe 1: finished" in err


def test_dump_tokens(capsys):
    assert main([HELLO, "--dump-tokens"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[:5] == [
        "HAI\tHAI\t1:1",
        "NUMBAR_LITERAL\t1.2\t1:5",
        "SEPARATOR\t\\n\t1:8",
        "CAN_HAS\tCAN HAS\t2:1",
        "IDENTIFIER\tSTDIO\t2:9",
    ]


def test_dump_tokens_does_not_need_a_valid_program(tmp_path, capsys):
    path = write_program(tmp_path, "VISIBLE SUM OF 1 2\n")
    assert main([path, "--dump-tokens"]) == EXIT_OK


def test_dump_ast_does_not_run_the_program(tmp_path, capsys):
    path = write_program(
        tmp_path, 'HAI 1.2\nCAN HAS STDIO?\nVISIBLE QUOSHUNT OF 1 AN 0\nKTHXBYE\n'
    )
    assert main([path, "--dump-ast"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "Program version=1.2",
        "  statements:",
        "    CanHas library='STDIO'",
        "    Visible",
        "      args:",
        "        BinOp op=QUOSHUNT",
        "          lhs: Literal value=NUMBR 1",
        "          rhs: Literal value=NUMBR 0",
    ]
