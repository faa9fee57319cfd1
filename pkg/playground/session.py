"""Playground session-state defaults and the Run action."""

import streamlit as st

from playground.runner import execute
from playground.samples import DEFAULT_SAMPLE, load_sample

MAX_PES = 16


def init_session_state() -> None:
    """Fill in every session-state key the playground reads."""
    defaults = {
        "sample_name": DEFAULT_SAMPLE,
        "source": load_sample(DEFAULT_SAMPLE),
        "n_pes": 2,
        "seed": 0,
        "max_barrier_wait": 5.0,
        "outcome": None,
        "message": None,
    }
    for key, value in defaults.items():
        if key not in st.session_state:
            st.session_state[key] = value


def load_selected_sample() -> None:
    """Replace the editor text with the sample picked in the selectbox."""
    st.session_state.source = load_sample(st.session_state.sample_name)
    st.session_state.outcome = None


def run_current_program() -> None:
    """Run the editor text with the chosen settings and keep the outcome."""
    outcome = execute(
        st.session_state.source,
        int(st.session_state.n_pes),
        int(st.session_state.seed),
        float(st.session_state.max_barrier_wait),
    )
    st.session_state.outcome = outcome
    if outcome.failed:
        st.session_state.message = f"Error: {outcome.message}"
    else:
        st.session_state.message = (
            f"Ran on {st.session_state.n_pes} PE(s) with seed {st.session_state.seed}"
        )
