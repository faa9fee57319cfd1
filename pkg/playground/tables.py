"""DataFrame views of tokens and run results for the playground tables."""

import pandas as pd

from lexing.tokens import Token
from pgas_runtime.launcher import RunResult

TOKEN_COLUMNS = ["Kind", "Text", "Line", "Column"]
OUTPUT_COLUMNS = ["Order", "PE", "Line"]
SUMMARY_COLUMNS = ["PE", "Status", "Lines printed"]


def tokens_to_df(tokens: list[Token]) -> pd.DataFrame:
    """Convert a token list to one row per token.

    Parameters
    ----------
    tokens : list of Token
        Output of ``tokenize``.

    Returns
    -------
    pandas.DataFrame
        Columns ``Kind``, ``Text``, ``Line`` and ``Column``.
    """
    rows = [
        {
            "Kind": token.kind_name,
            "Text": token.text,
            "Line": token.span.line,
            "Column": token.span.column,
        }
        for token in tokens
    ]
    return pd.DataFrame(rows, columns=TOKEN_COLUMNS)


def output_to_df(result: RunResult) -> pd.DataFrame:
    """Every printed line in the order the PEs produced them."""
    rows = [
        {"Order": order, "PE": pe, "Line": line}
        for order, (pe, line) in enumerate(result.output_log)
    ]
    return pd.DataFrame(rows, columns=OUTPUT_COLUMNS)


def pe_summary_df(result: RunResult) -> pd.DataFrame:
    """Final status and output size of each PE.

    Parameters
    ----------
    result : RunResult
        Finished run.

    Returns
    -------
    pandas.DataFrame
        One row per PE, ordered by PE id.
    """
    rows = [
        {
            "PE": pe_result.pe,
            "Status": pe_result.status.value,
            "Lines printed": len(pe_result.output),
        }
        for pe_result in result.pes
    ]
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def lines_for_pe(output: pd.DataFrame, pe: int) -> list[str]:
    """Lines printed by one PE, taken from an ``output_to_df`` frame."""
    return output.loc[output["PE"] == pe, "Line"].tolist()
