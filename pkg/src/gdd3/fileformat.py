"""JSON and plain-text serialization of designs.

Points are written as labels: ``m0..m{m-1}`` for M and ``n0..n{n-1}`` for N.
Both formats parse back to the identical :class:`DesignFile`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import __version__
from .design import GddDesign, GroupedPointSet
from .feasibility import DesignParams

GENERATOR = f"gdd3 {__version__}"


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class DesignFile:
    design: GddDesign
    seed: int
    generator: str = GENERATOR

    def labels(self) -> tuple[list[str], list[str]]:
        return [f"m{i}" for i in range(self.design.m)], [f"n{j}" for j in range(self.design.n)]

    def labelled_blocks(self) -> list[list[str]]:
        names = self.design.points.labels()
        return [[names[x] for x in b] for b in self.design.blocks]


def to_json(df: DesignFile) -> str:
    M, N = df.labels()
    doc = {
        "m": df.design.m,
        "n": df.design.n,
        "lambda": df.design.lam,
        "seed": df.seed,
        "generator": df.generator,
        "labels": {"M": M, "N": N},
        "blocks": df.labelled_blocks(),
    }
    return json.dumps(doc, sort_keys=True) + "\n"


def to_text(df: DesignFile) -> str:
    d = df.design
    lines = [
        f"m={d.m}",
        f"n={d.n}",
        f"lambda={d.lam}",
        f"seed={df.seed}",
        f"generator={df.generator}",
    ]
    lines += [" ".join(b) for b in df.labelled_blocks()]
    return "\n".join(lines) + "\n"


_LABEL = re.compile(r"([mn])(\d+)\Z")


def _point(label, m: int, n: int) -> int:
    hit = _LABEL.match(label) if isinstance(label, str) else None
    if not hit:
        raise ParseError(f"bad point label {label!r}")
    i = int(hit.group(2))
    size = m if hit.group(1) == "m" else n
    if i >= size:
        raise ParseError(f"label {label!r} out of range")
    return i if hit.group(1) == "m" else m + i


def _assemble(m, n, lam, seed, generator, blocks) -> DesignFile:
    try:
        params = DesignParams(m, n, lam)
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ParseError(f"seed must be an integer, got {seed!r}")
    rows = []
    for b in blocks:
        if not isinstance(b, (list, tuple)):
            raise ParseError(f"block {b!r} is not a list of labels")
        rows.append(tuple(_point(x, m, n) for x in b))
    # blocks are kept as written (sorted per block) so malformed ones reach the verifier
    design = GddDesign.from_blocks(params, GroupedPointSet.canonical(m, n), rows)
    return DesignFile(design, seed, generator)


def _from_json(text: str) -> DesignFile:
    try:
        doc = json.loads(text)
        return _assemble(
            doc["m"], doc["n"], doc["lambda"], doc["seed"], doc["generator"], doc["blocks"]
        )
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"not a design JSON document: {exc}") from None


def _from_text(text: str) -> DesignFile:
    lines = text.splitlines()
    header = {}
    keys = ("m", "n", "lambda", "seed", "generator")
    if len(lines) < len(keys):
        raise ParseError("truncated header")
    for key, line in zip(keys, lines):
        name, sep, value = line.partition("=")
        if name != key or not sep:
            raise ParseError(f"expected header line '{key}=', got {line!r}")
        header[key] = value
    try:
        m, n, lam, seed = (int(header[k]) for k in keys[:4])
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    blocks = [line.split() for line in lines[len(keys):] if line.strip()]
    return _assemble(m, n, lam, seed, header["generator"], blocks)


def parse(data: str | bytes) -> DesignFile:
    """Parse either format; raises :class:`ParseError` on anything malformed."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError:
            raise ParseError("input is not UTF-8 text") from None
    if data.lstrip().startswith("{"):
        return _from_json(data)
    return _from_text(data)
