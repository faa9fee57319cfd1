import pytest

from tests.helpers import PROGRAMS


@pytest.fixture
def load_program():
    def load(name: str) -> str:
        return (PROGRAMS / name).read_text(encoding="utf-8")

    return load
