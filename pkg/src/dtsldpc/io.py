"""Serialization: descriptor JSON with a content hash, matrix text dumps and
alist export."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from .construction import BaseMatrix, CodeDescriptor, to_polynomial, window
from .field import FieldMatrix


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def descriptor_hash(desc: CodeDescriptor) -> str:
    return hashlib.sha256(canonical_json(desc.to_dict()).encode()).hexdigest()


def load_descriptor(path: str | Path) -> CodeDescriptor:
    with open(path) as fh:
        data = json.load(fh)
    data.pop("hash", None)
    return CodeDescriptor.from_dict(data)


def dump_descriptor(desc: CodeDescriptor) -> str:
    data = desc.to_dict()
    data["hash"] = descriptor_hash(desc)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def parse_matrix_text(text: str, field) -> FieldMatrix:
    """Inverse of :meth:`FieldMatrix.to_text`."""
    rows = []
    for line in text.strip("\n").splitlines():
        rows.append([None if tok == "0" else int(tok[2:]) for tok in line.split()])
    return FieldMatrix.from_logs(field, rows)


def to_alist(M: FieldMatrix) -> str:
    """Nonzero pattern in alist form: ``cols rows``, maximum degrees, degree
    lists, then 1-based row indices per column and column indices per row,
    zero padded to the maximum degree."""
    P = M.vals != 0
    nrows, ncols = P.shape
    col_lists = [(np.flatnonzero(P[:, c]) + 1).tolist() for c in range(ncols)]
    row_lists = [(np.flatnonzero(P[r]) + 1).tolist() for r in range(nrows)]
    cmax = max((len(c) for c in col_lists), default=0)
    rmax = max((len(r) for r in row_lists), default=0)
    lines = [
        f"{ncols} {nrows}",
        f"{cmax} {rmax}",
        " ".join(str(len(c)) for c in col_lists),
        " ".join(str(len(r)) for r in row_lists),
    ]
    lines += [" ".join(str(x) for x in c + [0] * (cmax - len(c))) for c in col_lists]
    lines += [" ".join(str(x) for x in r + [0] * (rmax - len(r))) for r in row_lists]
    return "\n".join(lines) + "\n"


def alist_values(M: FieldMatrix) -> str:
    """Discrete logs of the nonzero entries, one matrix row per line, in the
    order of the alist row lists."""
    logs = M.logs()
    lines = [" ".join(str(int(e)) for e in row if e >= 0) for row in logs]
    return "\n".join(lines) + "\n"


def from_alist(text: str) -> np.ndarray:
    tokens = text.split("\n")
    ncols, nrows = map(int, tokens[0].split())
    P = np.zeros((nrows, ncols), dtype=bool)
    for c in range(ncols):
        for r in map(int, tokens[4 + c].split()):
            if r:
                P[r - 1, c] = True
    return P


def matrix_dumps(base: BaseMatrix) -> dict[str, str]:
    """Text dumps of the base matrix, the window and the coefficients of H(z)."""
    out = {"base.txt": base.matrix.to_text(), "window.txt": window(base).matrix.to_text()}
    for i, C in enumerate(to_polynomial(base).coeffs):
        out[f"H{i}.txt"] = C.to_text()
    return out
