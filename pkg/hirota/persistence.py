"""
Persistence module for saving and loading computed objects.

This module handles saving and loading results to/from JSON files.
It provides functionality to:
- Convert polynomials, families, certificates and rational solutions to JSON-serializable data
- Save results to JSON files
- Load results back into objects
"""

import json
import os
from typing import Any, Dict, Union

from .errors import ParseError
from .exactpoly import MultiPoly
from .fundsol import FundamentalFamily
from .leading import Certificate
from .logging_config import get_logger
from .solutions import RationalSolution, SolutionFamily

logger = get_logger(__name__)

Result = Union[MultiPoly, FundamentalFamily, SolutionFamily, Certificate, RationalSolution]


def convert_result_data(result: Result) -> Dict[str, Any]:
    """
    Convert a result object to JSON-serializable format.

    Args:
        result: Any object exposing ``to_dict``

    Returns:
        Dict containing JSON-serializable data
    """
    if not hasattr(result, 'to_dict'):
        raise TypeError(f"cannot serialize {type(result).__name__}")
    return result.to_dict()


def dumps(result: Result) -> str:
    """Serialize a result to a JSON string with stable key order."""
    return json.dumps(convert_result_data(result), sort_keys=True)


def parse_poly(text: str) -> MultiPoly:
    """
    Parse a JSON polynomial document.

    Raises:
        ParseError: If the text is not valid JSON or not a polynomial.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ParseError("a polynomial document must be a JSON object")
    return MultiPoly.from_dict(data)


def parse_result(text: str) -> Result:
    """
    Parse any JSON document produced by :func:`dumps`.

    The kind is recognized from the keys present.

    Raises:
        ParseError: If the text is not a known document.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    try:
        if not isinstance(data, dict):
            raise ParseError("a result document must be a JSON object")
        if 'terms' in data:
            return MultiPoly.from_dict(data)
        if 'numerator' in data:
            return RationalSolution.from_dict(data)
        if 'fbar' in data:
            return FundamentalFamily.from_dict(data)
        if 'f' in data:
            return SolutionFamily.from_dict(data)
        if 'verdict' in data:
            return Certificate.from_dict(data)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed document: {e}") from e
    raise ParseError("unrecognized JSON document")


def save_result(result: Result, save_dir: str = 'results', filename: str = 'result.json') -> str:
    """Save a result object to a JSON file.

    Args:
        result: Polynomial, family, certificate or rational solution
        save_dir (str, optional): Directory to save in. Defaults to 'results'.
        filename (str, optional): Name of the file. Defaults to 'result.json'.

    Returns:
        str: Path of the written file
    """
    logger.info(f"Saving {type(result).__name__} to {filename}")

    if save_dir and not os.path.exists(save_dir):
        os.makedirs(save_dir)

    save_path = os.path.join(save_dir, filename)
    with open(save_path, 'w') as f:
        json.dump(convert_result_data(result), f, sort_keys=True, indent=2)

    logger.info("Result saved successfully")
    return save_path


def load_result(save_dir: str = 'results', filename: str = 'result.json') -> Result:
    """Load a result object from a JSON file.

    Args:
        save_dir (str, optional): Directory to load from. Defaults to 'results'.
        filename (str, optional): Name of the file. Defaults to 'result.json'.

    Returns:
        The reconstructed object

    Raises:
        FileNotFoundError: If the file doesn't exist
        ParseError: If the file is not a recognized document
    """
    logger.info(f"Loading result from {filename}")

    save_path = os.path.join(save_dir, filename)
    with open(save_path, 'r') as f:
        return parse_result(f.read())


def load_poly(path: str) -> MultiPoly:
    """
    Load a polynomial from a JSON file path.

    The file may hold a bare polynomial, a solution family (its ``f``) or a
    fundamental family (its ``fbar``).

    Raises:
        FileNotFoundError: If the file doesn't exist
        ParseError: If the document carries no polynomial
    """
    result = load_result(os.path.dirname(path), os.path.basename(path))
    if isinstance(result, MultiPoly):
        return result
    if isinstance(result, SolutionFamily):
        return result.f
    if isinstance(result, FundamentalFamily):
        return result.fbar
    raise ParseError(f"{path} holds a {type(result).__name__}, not a polynomial")


def result_exists(save_dir: str = 'results', filename: str = 'result.json') -> bool:
    """
    Check if a result file exists.

    Args:
        save_dir: Directory to check
        filename: Name of the file

    Returns:
        bool: True if the file exists, False otherwise
    """
    save_path = os.path.join(save_dir, filename)
    return os.path.exists(save_path)
