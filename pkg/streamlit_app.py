"""LOLCODE PGAS playground Streamlit app."""

import streamlit as st

from playground.editor import render_editor
from playground.results import render_results
from playground.session import init_session_state
from styling import inject_global_css

APP_NAME = "LOLCODE PGAS Playground"

st.set_page_config(page_title=APP_NAME, layout="centered")
inject_global_css()
init_session_state()

st.title(APP_NAME)
st.caption("Every PE runs the whole program; HUGZ waits for all of them.")

render_editor()

if st.session_state.message:
    if st.session_state.message.lower().startswith("error"):
        st.error(st.session_state.message)
    else:
        st.success(st.session_state.message)
    st.session_state.message = None

render_results()
