import pytest

from binoidal.parser import parse_presentation, parse_term


@pytest.fixture
def pres():
    return parse_presentation


@pytest.fixture
def word():
    def build(text, presentation):
        return parse_term(text, presentation)

    return build
