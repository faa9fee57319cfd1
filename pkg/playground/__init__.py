"""Streamlit playground for editing and running programs on several PEs."""
