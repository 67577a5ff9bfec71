"""
Tests for the persistence module.
"""

import json
import os
import pytest

from hirota.errors import ParseError
from hirota.exactpoly import MultiPoly
from hirota.fundsol import FundamentalFamily, build_family
from hirota.leading import Certificate, nonexistence_certificate
from hirota.persistence import (
    convert_result_data,
    dumps,
    load_poly,
    load_result,
    parse_poly,
    parse_result,
    result_exists,
    save_result
)
from hirota.solutions import RationalSolution, SolutionFamily, classify, log_derivative


@pytest.fixture
def cubic_family():
    return classify(3)


def test_convert_result_data(symbols):
    x, t, _ = symbols
    result = convert_result_data(x + t)
    assert result['vars'] == ['x', 't']
    assert len(result['terms']) == 2


def test_convert_rejects_unknown_objects():
    with pytest.raises(TypeError):
        convert_result_data(object())


def test_dumps_is_stable(cubic_family):
    assert dumps(cubic_family) == dumps(SolutionFamily.from_dict(json.loads(dumps(cubic_family))))


@pytest.mark.parametrize("make", [
    lambda: build_family(4),
    lambda: classify(4),
    lambda: nonexistence_certificate(7),
    lambda: log_derivative(classify(3).f),
    lambda: MultiPoly.var('x') ** 3 + 36 * MultiPoly.var('t'),
])
def test_parse_result_recognizes_kind(make):
    result = make()
    parsed = parse_result(dumps(result))
    assert type(parsed) is type(result)
    if isinstance(result, RationalSolution):
        assert parsed.equals(result)
    else:
        assert parsed == result


def test_parse_result_rejects():
    with pytest.raises(ParseError):
        parse_result("not json")
    with pytest.raises(ParseError):
        parse_result('{"unrelated": 1}')


def test_parse_poly_rejects():
    with pytest.raises(ParseError):
        parse_poly("[1, 2]")
    with pytest.raises(ParseError):
        parse_poly("{")


def test_save_and_load(tmp_path, cubic_family):
    """Test saving and loading a result."""
    save_dir = str(tmp_path)
    path = save_result(cubic_family, save_dir, 'cubic.json')

    assert os.path.exists(path)
    assert result_exists(save_dir, 'cubic.json')

    loaded = load_result(save_dir, 'cubic.json')
    assert isinstance(loaded, SolutionFamily)
    assert loaded == cubic_family


def test_save_creates_directory(tmp_path):
    save_dir = str(tmp_path / 'nested' / 'results')
    save_result(build_family(2), save_dir)
    loaded = load_result(save_dir)
    assert isinstance(loaded, FundamentalFamily)
    assert loaded.fbar == build_family(2).fbar


def test_certificate_file(tmp_path):
    cert = nonexistence_certificate(6, direct=True)
    save_result(cert, str(tmp_path), 'six.json')
    assert load_result(str(tmp_path), 'six.json') == cert
    assert isinstance(cert, Certificate)


def test_result_exists(tmp_path):
    """Test result_exists function."""
    assert not result_exists(str(tmp_path), 'missing.json')


def test_load_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_result(str(tmp_path), 'missing.json')


def test_load_poly(poly_file, symbols):
    x, t, _ = symbols
    path = poly_file(x ** 2 - t)
    assert load_poly(path) == x ** 2 - t


def test_load_poly_from_saved_family(tmp_path, cubic_family):
    """Test that a saved solution family loads as its polynomial."""
    path = save_result(cubic_family, str(tmp_path), 'cubic.json')
    assert load_poly(path) == cubic_family.f
    family_path = save_result(build_family(4), str(tmp_path), 'fbar.json')
    assert load_poly(family_path) == build_family(4).fbar


def test_load_poly_rejects_certificate(tmp_path):
    """Test that a certificate file carries no polynomial."""
    path = save_result(nonexistence_certificate(5), str(tmp_path), 'five.json')
    with pytest.raises(ParseError):
        load_poly(path)


def test_parse_result_rejects_non_objects():
    """Test that JSON arrays and scalars are not result documents."""
    for text in ("[1, 2]", "3", '"x"'):
        with pytest.raises(ParseError):
            parse_result(text)
