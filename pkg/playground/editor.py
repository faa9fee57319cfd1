"""Program editor and run settings."""

import streamlit as st

from playground.samples import list_samples
from playground.session import MAX_PES, load_selected_sample, run_current_program

EDITOR_HEIGHT = 360


def render_editor() -> None:
    """Render the sample picker, the source editor and the Run button."""
    st.selectbox(
        "Example program",
        options=list_samples(),
        key="sample_name",
        on_change=load_selected_sample,
    )
    st.text_area(
        "Program",
        key="source",
        height=EDITOR_HEIGHT,
        label_visibility="collapsed",
    )

    pes_col, seed_col, wait_col = st.columns(3)
    with pes_col:
        st.number_input("PEs", min_value=1, max_value=MAX_PES, step=1, key="n_pes")
    with seed_col:
        st.number_input("Seed", min_value=0, step=1, key="seed")
    with wait_col:
        st.number_input(
            "Deadlock timeout (s)",
            min_value=0.5,
            max_value=60.0,
            step=0.5,
            key="max_barrier_wait",
        )

    _, run_col, _ = st.columns([1, 1, 1])
    with run_col:
        st.button(
            "Run",
            type="primary",
            use_container_width=True,
            on_click=run_current_program,
        )
