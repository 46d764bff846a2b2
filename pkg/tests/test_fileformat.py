import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdd3 import build
from gdd3.fileformat import DesignFile, ParseError, parse, to_json, to_text

CASES = [(7, 3, 6), (13, 6, 5), (6, 1, 5), (9, 7, 4)]


@given(st.sampled_from(CASES), st.integers(0, 5))
def test_round_trip(t, seed):
    df = DesignFile(build(*t, seed=seed), seed)
    for text in (to_json(df), to_text(df)):
        assert parse(text) == df
        assert parse(text.encode()) == df


def test_json_is_canonical():
    df = DesignFile(build(7, 3, 6), 0)
    text = to_json(df)
    doc = json.loads(text)
    assert list(doc) == sorted(doc)
    assert doc["blocks"][0] == ["m0", "m1", "n0"]
    assert doc["labels"]["N"] == ["n0", "n1", "n2"]
    assert text == to_json(DesignFile(build(7, 3, 6), 0))


def test_text_layout():
    text = to_text(DesignFile(build(13, 6, 5), 0))
    lines = text.splitlines()
    assert lines[:4] == ["m=13", "n=6", "lambda=5", "seed=0"]
    assert lines[4].startswith("generator=")
    assert len(lines) - 5 == 223


@pytest.mark.parametrize(
    "bad",
    [
        b"\xff\xfe\x00garbage",
        "{not json",
        '{"m": 3}',
        "m=3\nn=1\nlambda=2\nseed=0\ngenerator=x\nm0 m1 q7\n",
        "m=3\nn=1\nlambda=2\nseed=0\ngenerator=x\nm0 m1 n5\n",
        "m=3\nn=1\nlambda=two\nseed=0\ngenerator=x\n",
        "hello\n",
    ],
)
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)
