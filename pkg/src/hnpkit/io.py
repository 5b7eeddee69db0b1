"""Reading and writing algebras as versioned JSON documents.

All scalars are strings such as ``"3"``, ``"-1/2"``; floats are never used.
An algebra file looks like::

    {"format_version": 1, "dim": 2, "basis_names": ["1", "x"],
     "alpha": [["1", "0"], ["0", "1"]],
     "dot":  [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
     "star": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]}

``alpha[k][j]`` is the coefficient of ``e_k`` in ``alpha(e_j)`` and
``dot[i][j][k]`` the coefficient of ``e_k`` in ``e_i . e_j``.  A single linear
map (for example a twisting map handed to a construction) is stored as
``{"format_version": 1, "dim": n, "map": [[...]]}``.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from fractions import Fraction

from .core import DoubleHomAlgebra
from .linalg import BilinearOp, LinearMap, Vector

__all__ = [
    "FORMAT_VERSION",
    "FormatError",
    "parse_rational",
    "format_rational",
    "parse_vector",
    "algebra_to_dict",
    "algebra_from_dict",
    "map_to_dict",
    "map_from_dict",
    "dumps_algebra",
    "loads_algebra",
    "load_algebra",
    "save_algebra",
    "load_map",
    "save_map",
    "write_atomic",
]

FORMAT_VERSION = 1

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class FormatError(ValueError):
    """A document does not describe a valid algebra; the message names the field."""


def parse_rational(text, where: str = "value") -> Fraction:
    """Parse ``[sign]digits[/digits]`` with a nonzero denominator."""
    if not isinstance(text, str):
        raise FormatError(f"{where}: expected a rational string, got {type(text).__name__}")
    s = text.strip()
    if not _RATIONAL.match(s):
        raise FormatError(f"{where}: {text!r} is not a rational literal")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise FormatError(f"{where}: zero denominator")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_vector(text: str, dim: int | None = None, where: str = "vector") -> Vector:
    """Comma-separated rationals, e.g. ``"1,0,-1/2"``."""
    coords = [parse_rational(p, f"{where}[{i}]") for i, p in enumerate(text.split(","))]
    if dim is not None and len(coords) != dim:
        raise FormatError(f"{where}: expected {dim} coordinates, got {len(coords)}")
    return Vector(coords)


def _parse_array(data, dim: int, depth: int, where: str) -> list:
    if depth == 0:
        return parse_rational(data, where)
    if not isinstance(data, list) or len(data) != dim:
        got = len(data) if isinstance(data, list) else type(data).__name__
        raise FormatError(f"{where}: expected a list of length {dim}, got {got}")
    return [_parse_array(x, dim, depth - 1, f"{where}[{i}]") for i, x in enumerate(data)]


def _format_array(obj) -> list:
    return _format_nested(obj.tolist())


def _format_nested(x):
    if isinstance(x, list):
        return [_format_nested(y) for y in x]
    return format_rational(x)


def _header(data, required) -> int:
    if not isinstance(data, dict):
        raise FormatError("document: expected a JSON object")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise FormatError(f"format_version: unsupported value {version!r}")
    for key in required:
        if key not in data:
            raise FormatError(f"{key}: missing")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError(f"dim: expected a positive integer, got {dim!r}")
    return dim


def algebra_to_dict(A: DoubleHomAlgebra, basis_names=None, descriptor=None) -> dict:
    out = {"format_version": FORMAT_VERSION, "dim": A.dim}
    if basis_names:
        out["basis_names"] = list(basis_names)
    out["alpha"] = _format_array(A.alpha)
    out["dot"] = _format_array(A.dot)
    out["star"] = _format_array(A.star)
    if A.label:
        out["label"] = A.label
    if descriptor is not None:
        out["descriptor"] = descriptor.to_dict()
    return out


def algebra_from_dict(data) -> tuple[DoubleHomAlgebra, list[str] | None]:
    """The algebra and its basis names (``None`` when absent)."""
    dim = _header(data, ("dim", "alpha", "dot", "star"))
    names = data.get("basis_names")
    if names is not None:
        if not isinstance(names, list) or len(names) != dim or not all(isinstance(n, str) for n in names):
            raise FormatError(f"basis_names: expected {dim} strings")
    alpha = LinearMap(_parse_array(data["alpha"], dim, 2, "alpha"))
    dot = BilinearOp(_parse_array(data["dot"], dim, 3, "dot"))
    star = BilinearOp(_parse_array(data["star"], dim, 3, "star"))
    label = data.get("label", "")
    return DoubleHomAlgebra(dot, star, alpha, label if isinstance(label, str) else ""), names


def map_to_dict(f: LinearMap) -> dict:
    return {"format_version": FORMAT_VERSION, "dim": f.dim, "map": _format_array(f)}


def map_from_dict(data) -> LinearMap:
    dim = _header(data, ("dim", "map"))
    return LinearMap(_parse_array(data["map"], dim, 2, "map"))


def dumps_algebra(A: DoubleHomAlgebra, basis_names=None, descriptor=None) -> str:
    return json.dumps(algebra_to_dict(A, basis_names, descriptor), indent=1) + "\n"


def loads_algebra(text: str) -> tuple[DoubleHomAlgebra, list[str] | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"document: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return algebra_from_dict(data)


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_algebra(path) -> tuple[DoubleHomAlgebra, list[str] | None]:
    return algebra_from_dict(_read_json(path))


def load_map(path) -> LinearMap:
    return map_from_dict(_read_json(path))


def write_atomic(path, text: str) -> None:
    """Write through a temporary file in the same directory, then rename over ``path``."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_algebra(path, A: DoubleHomAlgebra, basis_names=None, descriptor=None) -> None:
    write_atomic(path, dumps_algebra(A, basis_names, descriptor))


def save_map(path, f: LinearMap) -> None:
    write_atomic(path, json.dumps(map_to_dict(f), indent=1) + "\n")
