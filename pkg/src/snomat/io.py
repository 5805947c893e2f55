"""File formats.

Codes::

    {"alphabet_size": 4, "codes": [{"length": 3, "words": ["110", "210"]}, ...]}

Words are digit strings when the alphabet has at most ten symbols and integer
lists otherwise.

Matrices, as JSON ``{"rows": m, "cols": n, "entries": [[...], ...]}`` or as
text: one row per line, symbols separated by single spaces, matrices
separated by blank lines.

Families::

    {"params": {"max_rows": m, "max_cols": n, "code": <code>,
                "selection": [{"length": s, "top": ..., "bottom": ...}]},
     "groups": [{"rows": h, "cols": s, "matrices": [<matrix>, ...]}]}
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .construction import FamilyParams, MatrixFamily, RowSelection
from .matrices import Matrix
from .words import VariableLengthCode, WordCode, format_word


class FormatError(ValueError):
    """Input does not follow one of the documented formats."""


def _word_from_json(x: Any, alphabet_size: int) -> tuple[int, ...]:
    if isinstance(x, str):
        if alphabet_size > 10 or not x.isdigit():
            raise FormatError(f"cannot read word {x!r} over an alphabet of {alphabet_size} symbols")
        return tuple(int(c) for c in x)
    if isinstance(x, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        return tuple(x)
    raise FormatError(f"bad word {x!r}")


def code_to_dict(code: WordCode | VariableLengthCode) -> dict:
    if isinstance(code, WordCode):
        codes = [code]
        k = code.alphabet_size
    else:
        codes = list(code.codes.values())
        k = code.alphabet_size
    return {
        "alphabet_size": k,
        "codes": [{"length": c.length, "words": [format_word(w, k) for w in c.words]} for c in codes],
    }


def code_from_dict(d: Any) -> VariableLengthCode:
    """Parse a code document.  Structural problems raise :class:`FormatError`."""
    try:
        k = d["alphabet_size"]
        entries = d["codes"]
        if not isinstance(k, int) or not isinstance(entries, list):
            raise FormatError("alphabet_size must be an integer and codes a list")
        codes = {}
        for e in entries:
            s = e["length"]
            if s in codes:
                raise FormatError(f"two codes of length {s}")
            words = tuple(_word_from_json(w, k) for w in e["words"])
            codes[s] = WordCode(k, s, words)
        return VariableLengthCode(k, codes)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad code document: {exc}") from exc


def word_codes_from_dict(d: Any) -> list[WordCode]:
    """Like :func:`code_from_dict` but keeps length-1 codes, which a
    variable-length code does not admit."""
    try:
        k = d["alphabet_size"]
        return [WordCode(k, e["length"], tuple(_word_from_json(w, k) for w in e["words"])) for e in d["codes"]]
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad code document: {exc}") from exc


def matrix_to_dict(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [list(r) for r in m.entries]}


def matrix_from_dict(d: Any) -> Matrix:
    try:
        m = Matrix(tuple(tuple(r) for r in d["entries"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad matrix: {exc}") from exc
    if (d.get("rows", m.rows), d.get("cols", m.cols)) != m.shape:
        raise FormatError(f"declared shape {d.get('rows')}x{d.get('cols')} does not match entries")
    return m


def format_matrices(matrices: Iterable[Matrix]) -> str:
    return "\n\n".join(str(m) for m in matrices) + "\n"


def parse_matrices(text: str) -> list[Matrix]:
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    out = []
    for b in blocks:
        try:
            out.append(Matrix(tuple(tuple(int(x) for x in line.split()) for line in b)))
        except ValueError as exc:
            raise FormatError(f"bad matrix block {b!r}: {exc}") from exc
    return out


def params_to_dict(p: FamilyParams) -> dict:
    k = p.code.alphabet_size
    sel = p.resolved_selection()
    return {
        "max_rows": p.max_rows,
        "max_cols": p.max_cols,
        "code": code_to_dict(p.code),
        "selection": [
            {"length": s, "top": format_word(t, k), "bottom": format_word(b, k)}
            for s, (t, b) in sel.rows.items()
        ],
    }


def params_from_dict(d: Any) -> FamilyParams:
    try:
        code = code_from_dict(d["code"])
        k = code.alphabet_size
        sel = RowSelection(
            {
                e["length"]: (_word_from_json(e["top"], k), _word_from_json(e["bottom"], k))
                for e in d.get("selection", [])
            }
        )
        return FamilyParams(int(d["max_rows"]), int(d["max_cols"]), code, sel)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad family parameters: {exc}") from exc


def family_to_dict(f: MatrixFamily) -> dict:
    return {
        "params": params_to_dict(f.params),
        "groups": [
            {"rows": h, "cols": s, "matrices": [matrix_to_dict(m) for m in ms]}
            for (h, s), ms in f.groups.items()
        ],
    }


def family_from_dict(d: Any) -> MatrixFamily:
    params = params_from_dict(d["params"]) if "params" in d else None
    try:
        groups = {
            (g["rows"], g["cols"]): tuple(matrix_from_dict(m) for m in g["matrices"]) for g in d["groups"]
        }
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad family groups: {exc}") from exc
    for (h, s), ms in groups.items():
        if any(m.shape != (h, s) for m in ms):
            raise FormatError(f"group {h}x{s} holds a matrix of another shape")
    return MatrixFamily(params, groups, tuple(params.warnings()) if params else ())


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_matrices(text: str) -> list[Matrix]:
    """Matrices from a family document, a JSON list of matrices, a single
    JSON matrix, or the text format."""
    stripped = text.lstrip()
    if not stripped or stripped[0] not in "[{":
        return parse_matrices(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if isinstance(doc, list):
        return [matrix_from_dict(m) for m in doc]
    if isinstance(doc, dict) and "groups" in doc:
        return family_from_dict(doc).matrices
    if isinstance(doc, dict) and "entries" in doc:
        return [matrix_from_dict(doc)]
    raise FormatError("expected a family, a matrix, or a list of matrices")
