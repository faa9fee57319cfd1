"""Run results: per-PE output, status table, tokens and syntax tree."""

import streamlit as st

from cli.config import OutputMode
from cli.main import format_output
from parsing.pretty import dump_tree
from playground.runner import RunOutcome
from playground.tables import (
    lines_for_pe,
    output_to_df,
    pe_summary_df,
    tokens_to_df,
)


def _render_pe_tabs(outcome: RunOutcome) -> None:
    output = output_to_df(outcome.result)
    pes = [pe_result.pe for pe_result in outcome.result.pes]
    for pe, tab in zip(pes, st.tabs([f"PE {pe}" for pe in pes])):
        with tab:
            lines = lines_for_pe(output, pe)
            if lines:
                st.code("\n".join(lines), language=None)
            else:
                st.caption("No output.")


def render_results() -> None:
    """Render everything known about the last run, if there was one."""
    outcome: RunOutcome | None = st.session_state.outcome
    if outcome is None:
        return

    if outcome.result is not None:
        _render_pe_tabs(outcome)

        with st.expander("PE status", expanded=False, type="compact"):
            st.dataframe(
                pe_summary_df(outcome.result), width="stretch", hide_index=True
            )

        with st.expander("Interleaved output", expanded=False, type="compact"):
            st.dataframe(
                output_to_df(outcome.result), width="stretch", hide_index=True
            )

        _, download_col, _ = st.columns([1, 1, 1])
        with download_col:
            st.download_button(
                label="Download output",
                data=format_output(outcome.result, OutputMode.PER_PE),
                file_name="output.txt",
                mime="text/plain",
                use_container_width=True,
            )

    if outcome.tokens:
        with st.expander("Tokens", expanded=False, type="compact"):
            st.dataframe(tokens_to_df(outcome.tokens), width="stretch", hide_index=True)

    if outcome.program is not None:
        with st.expander("Syntax tree", expanded=False, type="compact"):
            st.code(dump_tree(outcome.program), language=None)
