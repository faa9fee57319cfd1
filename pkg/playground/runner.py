"""Run editor text through the full pipeline without touching Streamlit."""

from dataclasses import dataclass, field

from diagnostics import LolError, format_diagnostic
from lexing.lexer import tokenize
from lexing.tokens import Token
from parsing.ast_nodes import Program
from parsing.parser import parse_program
from pgas_runtime.launcher import RunResult, spawn

EDITOR_FILENAME = "program.lol"


@dataclass
class RunOutcome:
    """What the playground shows after pressing Run.

    ``message`` is a one-line diagnostic when lexing, parsing or the run
    failed, and None otherwise.
    """

    tokens: list[Token] = field(default_factory=list)
    program: Program | None = None
    result: RunResult | None = None
    message: str | None = None

    @property
    def failed(self) -> bool:
        return self.message is not None


def execute(
    source: str, n_pes: int, seed: int = 0, max_barrier_wait: float = 5.0
) -> RunOutcome:
    """Tokenize, parse and run ``source``, stopping at the first failing stage.

    Parameters
    ----------
    source : str
        Program text from the editor.
    n_pes : int
        Number of PEs.
    seed : int, optional
        Seed of the WHATEVR/WHATEVAR streams.
    max_barrier_wait : float, optional
        Seconds of quiescence before a deadlock is reported.

    Returns
    -------
    RunOutcome
        Tokens, tree and run result as far as the pipeline got.
    """
    outcome = RunOutcome()
    try:
        outcome.tokens = tokenize(source)
        outcome.program = parse_program(outcome.tokens)
    except LolError as error:
        outcome.message = format_diagnostic(EDITOR_FILENAME, error)
        return outcome

    result = spawn(outcome.program, n_pes, seed, max_barrier_wait=max_barrier_wait)
    outcome.result = result
    if result.deadlock is not None:
        outcome.message = str(result.deadlock)
    elif result.failure is not None:
        outcome.message = format_diagnostic(EDITOR_FILENAME, result.failure)
    return outcome
