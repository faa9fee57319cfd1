import io

import pytest

from diagnostics import Span, SymmetryError
from pgas_runtime.sync import PeStatus
from tests import lcg_oracle
from tests.helpers import program, run_source


def only_error(result):
    assert result.deadlock is None
    assert result.failure is not None
    return result.failure


# --- single PE semantics -------------------------------------------------


def test_visible_joins_its_arguments():
    result = run_source(
        program('VISIBLE "O HAI ITZ " ME ", MAH PARTICLZ IZ:"'), n_pes=2
    )
    assert result.ok
    assert result.outputs[1] == ["O HAI ITZ 1, MAH PARTICLZ IZ:"]


def test_empty_program_finishes_on_every_pe():
    result = run_source(program(), n_pes=4)
    assert result.ok
    assert result.outputs == [[]] * 4
    assert all(state.status is PeStatus.FINISHED for state in result.pes)


def test_mah_frenz_is_the_pe_count():
    result = run_source(program("VISIBLE MAH FRENZ"), n_pes=16)
    assert result.outputs == [["16"]] * 16


def test_loop_counter_is_not_visible_after_the_loop():
    result = run_source(
        program(
            "IM IN YR l UPPIN YR i TIL BOTH SAEM i AN 32",
            "IM OUTTA YR l",
            "VISIBLE i",
        )
    )
    error = only_error(result)
    assert error.message == "unknown variable i"
    assert error.span == Span(4, 1)
    assert error.pe == 0


def test_loop_runs_until_its_condition_and_each_iteration_has_a_fresh_scope():
    result = run_source(
        program(
            "I HAS A count ITZ 0",
            "IM IN YR l UPPIN YR i TIL BOTH SAEM i AN 32",
            "  I HAS A seen ITZ i",
            "  count R SUM OF count AN 1",
            "IM OUTTA YR l",
            "VISIBLE count",
        )
    )
    assert result.ok
    assert result.outputs == [["32"]]


def test_assignment_to_undeclared_variable():
    error = only_error(run_source(program("y R 1")))
    assert error.message == "assignment to undeclared variable y"
    assert error.span == Span(2, 1)


def test_redeclaration_in_one_scope():
    error = only_error(run_source(program("I HAS A x", "I HAS A x")))
    assert "already declared" in error.message


def test_maek_parses_numeric_yarns():
    result = run_source(program('VISIBLE MAEK "3.5" A NUMBAR'))
    assert result.outputs == [["3.5"]]


def test_bad_cast_fails_the_pe():
    error = only_error(run_source(program('VISIBLE MAEK "abc" A NUMBR')))
    assert error.kind == "cast error"


def test_whatevar_plus_me_stays_in_the_pe_interval():
    result = run_source(program("VISIBLE SUM OF ME AN WHATEVAR"), n_pes=4, seed=7)
    for pe, lines in enumerate(result.outputs):
        value = float(lines[0])
        assert pe <= value < pe + 1
        assert value == pe + lcg_oracle.floats(7, pe, 1)[0]


def test_gimmeh_reads_a_line_on_one_pe():
    result = run_source(
        program("I HAS A name", "GIMMEH name", "VISIBLE name"),
        stdin=io.StringIO("KITTEH\n"),
    )
    assert result.outputs == [["KITTEH"]]


def test_gimmeh_is_single_pe_only():
    error = only_error(
        run_source(program("I HAS A name", "GIMMEH name"), n_pes=2)
    )
    assert "single-PE" in error.message


def test_srs_name_with_an_index():
    result = run_source(
        program(
            "I HAS A nums ITZ LOTZ A NUMBRS AN THAR IZ 2",
            "nums'Z 1 R 5",
            'I HAS A name ITZ "nums"',
            "VISIBLE SRS name'Z 1",
        )
    )
    assert result.ok
    assert result.outputs == [["5"]]


def test_recast_in_place():
    result = run_source(program("I HAS A x ITZ 12", "x IS NOW A YARN", "VISIBLE x"))
    assert result.outputs == [["12"]]


# --- remote references ---------------------------------------------------


def test_ur_outside_predication():
    error = only_error(run_source(program("WE HAS A x ITZ A NUMBR", "UR x R 1")))
    assert error.message == "UR x used outside TXT MAH BFF"


def test_ur_on_a_local_variable():
    error = only_error(
        run_source(program("I HAS A x ITZ 1", "TXT MAH BFF 0, UR x R 2"))
    )
    assert error.message == "remote reference to non-shared variable x"


def test_predication_target_out_of_range():
    error = only_error(run_source(program("TXT MAH BFF 5, VISIBLE 1"), n_pes=2))
    assert "outside [0, 2)" in error.message


def test_every_pe_reads_the_same_remote_value():
    result = run_source(
        program(
            "WE HAS A x ITZ A NUMBR AN ITZ SUM OF ME AN 40",
            "HUGZ",
            "TXT MAH BFF 2, VISIBLE UR x",
        ),
        n_pes=3,
    )
    assert result.outputs == [["42"]] * 3


def test_predicating_on_yourself_reads_the_local_slot():
    result = run_source(
        program(
            "WE HAS A x ITZ A NUMBR AN ITZ SUM OF ME AN 7",
            "TXT MAH BFF ME, VISIBLE UR x MAH x",
        ),
        n_pes=2,
    )
    assert result.outputs == [["77"], ["88"]]


def test_remote_store_converts_to_the_static_type():
    result = run_source(
        program(
            "WE HAS A x ITZ A NUMBR",
            "HUGZ",
            "BOTH SAEM ME AN 0, O RLY?",
            "YA RLY",
            "  TXT MAH BFF 1, UR x R 2.7",
            "OIC",
            "HUGZ",
            "VISIBLE x",
        ),
        n_pes=2,
    )
    assert result.outputs == [["0"], ["2"]]


def test_ring_copy(load_program):
    result = run_source(load_program("ring_copy.lol"), n_pes=4)
    assert result.ok
    for pe, lines in enumerate(result.outputs):
        neighbour = (pe + 1) % 4
        assert lines == [f"PE {pe} GOT {neighbour} FROM {neighbour}, ALL SAME: WIN"]


def check_barrier_sum(source, jitter_seed):
    result = run_source(source, n_pes=2, jitter=0.0005, jitter_seed=jitter_seed)
    assert result.outputs == [["PE 0 c IZ 30"], ["PE 1 c IZ 30"]]


@pytest.mark.parametrize("run", range(100))
def test_barrier_sum_under_jitter(load_program, run):
    check_barrier_sum(load_program("barrier_sum.lol"), run)


@pytest.mark.slow
@pytest.mark.parametrize("run", range(100, 1000))
def test_barrier_sum_under_jitter_many_runs(load_program, run):
    check_barrier_sum(load_program("barrier_sum.lol"), run)


@pytest.mark.parametrize("seed", range(20))
def test_barrier_sum_with_random_values(seed):
    source = program(
        "WE HAS A a ITZ SRSLY A NUMBR AN ITZ WHATEVR",
        "WE HAS A b ITZ SRSLY A NUMBR",
        "I HAS A k ITZ MOD OF SUM OF ME AN 1 AN MAH FRENZ",
        "HUGZ",
        "TXT MAH BFF k, UR b R MAH a",
        "HUGZ",
        "VISIBLE SUM OF a AN b",
    )
    result = run_source(source, n_pes=3, seed=seed, jitter=0.0002, jitter_seed=seed)
    a = [lcg_oracle.ints(seed, pe, 1)[0] for pe in range(3)]
    assert result.outputs == [[str(a[pe] + a[(pe - 1) % 3])] for pe in range(3)]


# --- locks ---------------------------------------------------------------


def check_locked_update(source, n_pes):
    result = run_source(source, n_pes=n_pes, max_barrier_wait=30.0)
    assert result.ok
    assert result.outputs[0] == [f"x IZ {1000 * n_pes}"]
    assert all(lines == [] for lines in result.outputs[1:])


@pytest.mark.parametrize("n_pes", [2, 4, 8])
@pytest.mark.parametrize("run", range(2))
def test_locked_updates_are_never_lost(load_program, n_pes, run):
    check_locked_update(load_program("locked_update.lol"), n_pes)


@pytest.mark.slow
@pytest.mark.parametrize("n_pes", [2, 4, 8])
@pytest.mark.parametrize("run", range(2, 100))
def test_locked_updates_are_never_lost_many_runs(load_program, n_pes, run):
    check_locked_update(load_program("locked_update.lol"), n_pes)


def test_try_lock_takes_the_other_branch_when_held():
    source = program(
        "WE HAS A x ITZ A NUMBR AN IM SHARIN IT",
        "HUGZ",
        "BOTH SAEM ME AN 0, O RLY?",
        "YA RLY",
        "  IM SRSLY MESIN WIF x",
        "OIC",
        "HUGZ",
        "BOTH SAEM ME AN 1, O RLY?",
        "YA RLY",
        "  IM MESIN WIF x, O RLY?",
        "  YA RLY",
        '    VISIBLE "GOT IT"',
        "  NO WAI",
        '    VISIBLE "BUSY"',
        "  OIC",
        "OIC",
        "HUGZ",
        "BOTH SAEM ME AN 0, O RLY?",
        "YA RLY",
        "  DUN MESIN WIF x",
        "OIC",
    )
    result = run_source(source, n_pes=2)
    assert result.ok
    assert result.outputs == [[], ["BUSY"]]


def test_bare_lock_test_does_not_wait_for_the_holder():
    source = program(
        "WE HAS A x ITZ A NUMBR AN IM SHARIN IT",
        "BOTH SAEM ME AN 0, O RLY?",
        "YA RLY",
        "  IM SRSLY MESIN WIF x",
        "OIC",
        "HUGZ",
        "BOTH SAEM ME AN 1, O RLY?",
        "YA RLY",
        "  IM MESIN WIF x",
        '  VISIBLE "NOT BLOCKED"',
        "OIC",
        "HUGZ",
        "BOTH SAEM ME AN 0, O RLY?",
        "YA RLY",
        "  DUN MESIN WIF x",
        "OIC",
    )
    result = run_source(source, n_pes=2)
    assert result.ok
    assert result.outputs == [[], ["NOT BLOCKED"]]


def test_bare_lock_test_takes_a_free_lock():
    source = program(
        "WE HAS A x ITZ A NUMBR AN IM SHARIN IT",
        "IM MESIN WIF x",
        "DUN MESIN WIF x",
        'VISIBLE "DONE"',
    )
    result = run_source(source)
    assert result.ok
    assert result.outputs == [["DONE"]]


def test_releasing_a_lock_held_elsewhere():
    source = program(
        "WE HAS A x ITZ A NUMBR AN IM SHARIN IT",
        "BOTH SAEM ME AN 0, O RLY?",
        "YA RLY",
        "  IM SRSLY MESIN WIF x",
        "OIC",
        "HUGZ",
        "BOTH SAEM ME AN 1, O RLY?",
        "YA RLY",
        "  DUN MESIN WIF x",
        "OIC",
    )
    error = only_error(run_source(source, n_pes=2))
    assert error.pe == 1
    assert "held by pe 0" in error.message


# --- failures and deadlocks ----------------------------------------------


def test_error_on_one_pe_aborts_the_run():
    source = program(
        "BOTH SAEM ME AN 1, O RLY?",
        "YA RLY",
        "  VISIBLE QUOSHUNT OF 1 AN 0",
        "OIC",
        "HUGZ",
    )
    result = run_source(source, n_pes=2)
    error = only_error(result)
    assert error.pe == 1
    assert error.span == Span(4, 3)
    assert result.pes[1].status is PeStatus.FAILED


def test_array_sizes_must_agree():
    source = program(
        "WE HAS A a ITZ SRSLY LOTZ A NUMBRS AN THAR IZ "
        "SUM OF 16 AN PRODUKT OF 16 AN MOD OF SUM OF ME AN 1 AN 2",
        "HUGZ",
    )
    error = only_error(run_source(source, n_pes=2))
    assert isinstance(error, SymmetryError)


def test_shared_declaration_missing_on_a_pe():
    source = program(
        "BOTH SAEM ME AN 0, O RLY?",
        "YA RLY",
        "  WE HAS A only ITZ SRSLY A NUMBR",
        "OIC",
        "HUGZ",
    )
    error = only_error(run_source(source, n_pes=2))
    assert isinstance(error, SymmetryError)
    assert "not declared on pe 1" in error.message


def test_skipped_barrier_is_a_deadlock(load_program):
    result = run_source(load_program("barrier_skip.lol"), n_pes=2)
    assert result.failure is None
    report = result.deadlock
    assert report.reason == "barrier can never complete"
    statuses = [state.status for state in report.states]
    assert statuses == [PeStatus.BLOCKED_ON_BARRIER, PeStatus.FINISHED]
    assert report.states[0].site == Span(5, 3)


def test_lock_cycle_is_a_deadlock(load_program):
    result = run_source(load_program("lock_cycle.lol"), n_pes=2)
    report = result.deadlock
    assert report is not None
    assert all(state.status is PeStatus.BLOCKED_ON_LOCK for state in report.states)


def test_runs_are_deterministic():
    source = program("VISIBLE ME WHATEVR", "HUGZ", "VISIBLE WHATEVAR")
    first = run_source(source, n_pes=3, seed=11)
    second = run_source(source, n_pes=3, seed=11)
    assert first.outputs == second.outputs
    assert first.outputs[2][0] == f"2{lcg_oracle.ints(11, 2, 1)[0]}"
