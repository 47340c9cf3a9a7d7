"""Plain-text file formats.

``.sgp``   composition table: order ``n``, then ``n*n`` integers row-major,
           optional ``labels: a b c`` line.
``.gens``  generator set: degree ``p``, then one line of ``p`` integers per
           transformation.
``.fsa``   automaton: ``states n``, ``letters m``, then ``m`` lines of ``n``
           integers, optional ``letterlabels: ...`` line.
``.fn``    binary operation (associativity not required): size ``a``, then
           ``a*a`` integers row-major.

Lines starting with ``#`` are comments everywhere.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .automata import Automaton
from .errors import SemigroupError
from .table import CayleyTable, validate_table
from .transformations import GenSet, Transformation

__all__ = [
    "FormatError",
    "parse_sgp", "dump_sgp", "load_sgp", "save_sgp",
    "parse_gens", "dump_gens", "load_gens",
    "parse_fsa", "dump_fsa", "load_fsa",
    "parse_fn", "dump_fn", "load_fn",
]


class FormatError(SemigroupError, ValueError):
    """The text does not follow the file format."""


def _lines(text):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def _split_keyed(text, key):
    body, extra = [], None
    for line in _lines(text):
        if line.startswith(key + ":"):
            if extra is not None:
                raise FormatError(f"duplicate {key!r} line")
            extra = line[len(key) + 1:].split()
        else:
            body.append(line)
    return body, extra


def _ints(tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"expected integers: {exc}") from None


def parse_sgp(text: str, method: str = "naive") -> CayleyTable:
    """Parse and validate; range/associativity problems raise their own errors."""
    body, labels = _split_keyed(text, "labels")
    nums = _ints(" ".join(body).split())
    if not nums:
        raise FormatError("empty table file")
    n, entries = nums[0], nums[1:]
    if n < 1:
        raise FormatError("order must be positive")
    if len(entries) != n * n:
        raise FormatError(f"order {n} needs {n * n} entries, found {len(entries)}")
    if labels is not None and len(labels) != n:
        raise FormatError(f"expected {n} labels, found {len(labels)}")
    if labels is not None and len(set(labels)) != n:
        raise FormatError("labels must be distinct")
    return validate_table(n, entries, labels=labels, method=method)


def dump_sgp(t: CayleyTable, comment: str = None) -> str:
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(str(t.order))
    out += [" ".join(map(str, row)) for row in t.rows]
    out.append("labels: " + " ".join(t.labels))
    return "\n".join(out) + "\n"


def parse_gens(text: str) -> GenSet:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty generator file")
    head = _ints(lines[0].split())
    if len(head) != 1:
        raise FormatError("first line must hold only the degree")
    p = head[0]
    if p < 1:
        raise FormatError("degree must be positive")
    gens = []
    for line in lines[1:]:
        img = _ints(line.split())
        if len(img) != p:
            raise FormatError(f"transformation {img} does not have {p} points")
        if any(not 0 <= v < p for v in img):
            raise FormatError(f"transformation {img} leaves [0, {p})")
        gens.append(Transformation(tuple(img)))
    if not gens:
        raise FormatError("no transformations given")
    return GenSet(p, tuple(gens))


def dump_gens(g: GenSet) -> str:
    return "\n".join([str(g.degree)] + [" ".join(map(str, t.image)) for t in g.gens]) + "\n"


def parse_fsa(text: str) -> Automaton:
    body, labels = _split_keyed(text, "letterlabels")
    if len(body) < 2:
        raise FormatError("expected 'states n' and 'letters m' lines")
    header = {}
    for line in body[:2]:
        parts = line.split()
        if len(parts) != 2 or parts[0] not in ("states", "letters"):
            raise FormatError(f"bad header line {line!r}")
        header[parts[0]] = _ints(parts[1:])[0]
    if set(header) != {"states", "letters"}:
        raise FormatError("need both 'states' and 'letters'")
    n, m = header["states"], header["letters"]
    rows = body[2:]
    if n < 1 or m < 1 or len(rows) != m:
        raise FormatError(f"expected {m} letter lines, found {len(rows)}")
    delta = []
    for line in rows:
        img = _ints(line.split())
        if len(img) != n or any(not 0 <= v < n for v in img):
            raise FormatError(f"letter line {line!r} is not a map of {n} states")
        delta.append(Transformation(tuple(img)))
    if labels is not None and (len(labels) != m or len(set(labels)) != m):
        raise FormatError("letterlabels must be distinct, one per letter")
    return Automaton(n, tuple(delta), tuple(labels) if labels else None)


def dump_fsa(a: Automaton) -> str:
    out = [f"states {a.state_count}", f"letters {a.letter_count}"]
    out += [" ".join(map(str, t.image)) for t in a.delta]
    if a.letter_labels:
        out.append("letterlabels: " + " ".join(a.letter_labels))
    return "\n".join(out) + "\n"


def parse_fn(text: str) -> np.ndarray:
    nums = _ints(" ".join(_lines(text)).split())
    if not nums:
        raise FormatError("empty function file")
    a, entries = nums[0], nums[1:]
    if a < 1 or len(entries) != a * a:
        raise FormatError(f"size {a} needs {a * a} entries, found {len(entries)}")
    g = np.array(entries, dtype=np.int64).reshape(a, a)
    if ((g < 0) | (g >= a)).any():
        raise FormatError(f"function values must lie in [0, {a})")
    return g


def dump_fn(g) -> str:
    g = np.asarray(g)
    return "\n".join([str(g.shape[0])] + [" ".join(map(str, r)) for r in g.tolist()]) + "\n"


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def load_sgp(path, method: str = "naive") -> CayleyTable:
    return parse_sgp(_read(path), method=method)


def save_sgp(t: CayleyTable, path, comment: str = None):
    Path(path).write_text(dump_sgp(t, comment))


def load_gens(path) -> GenSet:
    return parse_gens(_read(path))


def load_fsa(path) -> Automaton:
    return parse_fsa(_read(path))


def load_fn(path) -> np.ndarray:
    return parse_fn(_read(path))
