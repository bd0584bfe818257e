"""JSON interchange format for collections of bases (schema ``v1``).

Layout::

    {
      "schema": "v1",
      "dimension": 3,
      "representation": "exact" | "complex",
      "bases": [[vector, ...], ...],
      "metadata": {"method": ..., "labels": [[i, j] | null, ...], "version": ...}
    }

An exact vector is ``{"normalization": "1" | "1/sqrt(N)", "entries": [...]}``
with each entry ``{"zero": true}`` or ``{"exp": e}`` (phase ``omega_{2N}^e``).
A complex vector is a list of ``{"re": x, "im": y}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .errors import MubError
from .mub import ComplexBasis, MubCollection, PhaseBasis, PhaseVector
from .phasespace import ClassLabel
from .zmod import is_prime

SCHEMA_VERSION = "v1"


class BasisFileError(MubError):
    """The file does not follow the schema."""


@dataclass
class BasisFile:
    dimension: int
    representation: str
    bases: list[Any]
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.representation not in ("exact", "complex"):
            raise BasisFileError(f"unknown representation {self.representation!r}")
        if self.representation == "exact" and (self.dimension < 2 or not is_prime(self.dimension)):
            raise BasisFileError("exact representation requires a prime dimension")

    @classmethod
    def from_collection(cls, coll: MubCollection, representation: str | None = None) -> BasisFile:
        exact = all(isinstance(b, PhaseBasis) for b in coll.bases)
        if representation is None:
            representation = "exact" if exact else "complex"
        if representation == "exact" and not exact:
            raise BasisFileError("collection holds floating point bases; cannot write exact form")
        bases = coll.bases if representation == "exact" else coll.complex_bases()
        labels = [None if lab is None else list(lab.as_tuple()) for lab in coll.labels]
        meta = {"method": coll.method, "labels": labels, "version": __version__}
        return cls(coll.dimension, representation, list(bases), meta)

    def to_collection(self) -> MubCollection:
        labels = []
        for lab in self.metadata.get("labels") or [None] * len(self.bases):
            labels.append(None if lab is None else ClassLabel.of(self.dimension, *lab))
        coll = MubCollection(self.dimension, method=self.metadata.get("method", ""))
        for basis, lab in zip(self.bases, labels):
            coll.add(basis, lab)
        return coll

    def complex_bases(self) -> list[ComplexBasis]:
        return [b.to_complex(check=False) if isinstance(b, PhaseBasis) else b for b in self.bases]

    def to_json(self) -> dict:
        if self.representation == "exact":
            bases = [[_exact_vector_json(v) for v in b.vectors] for b in self.bases]
        else:
            bases = [[_complex_vector_json(b.columns[:, k]) for k in range(b.dimension)]
                     for b in self.bases]
        return {
            "schema": SCHEMA_VERSION,
            "dimension": self.dimension,
            "representation": self.representation,
            "bases": bases,
            "metadata": self.metadata,
        }

    @classmethod
    def from_json(cls, data: dict) -> BasisFile:
        try:
            if data.get("schema") != SCHEMA_VERSION:
                raise BasisFileError(f"unsupported schema {data.get('schema')!r}")
            n = int(data["dimension"])
            rep = data["representation"]
            raw = data["bases"]
            if not isinstance(raw, list):
                raise BasisFileError("'bases' must be a list")
            for idx, basis in enumerate(raw):
                if len(basis) != n:
                    raise BasisFileError(f"basis {idx} has {len(basis)} vectors, expected {n}")
            if rep == "exact":
                bases = [PhaseBasis(n, tuple(_exact_vector_from(v, n) for v in b)) for b in raw]
            elif rep == "complex":
                bases = [ComplexBasis(np.column_stack([_complex_vector_from(v, n) for v in b]),
                                      check=False) for b in raw]
            else:
                raise BasisFileError(f"unknown representation {rep!r}")
            return cls(n, rep, bases, dict(data.get("metadata") or {}))
        except BasisFileError:
            raise
        except (KeyError, TypeError, ValueError, MubError) as exc:
            raise BasisFileError(f"malformed basis file: {exc}") from exc


def _exact_vector_json(v: PhaseVector) -> dict:
    entries = [{"zero": True} if e is None else {"exp": e} for e in v.exps]
    return {"normalization": v.normalization, "entries": entries}


def _exact_vector_from(obj: dict, n: int) -> PhaseVector:
    entries = obj["entries"]
    if len(entries) != n:
        raise BasisFileError(f"vector has {len(entries)} entries, expected {n}")
    exps = []
    for e in entries:
        if e.get("zero"):
            exps.append(None)
        else:
            exp = e["exp"]
            if not isinstance(exp, int) or not 0 <= exp < 2 * n:
                raise BasisFileError(f"phase exponent {exp!r} not an integer in [0, {2 * n})")
            exps.append(exp)
    v = PhaseVector(n, tuple(exps))
    if obj.get("normalization") != v.normalization:
        raise BasisFileError(
            f"normalization {obj.get('normalization')!r} does not match vector form ({v.normalization})")
    return v


def _complex_vector_json(col: np.ndarray) -> list[dict]:
    # repr of a Python float is the shortest string that round-trips exactly
    return [{"re": float(z.real), "im": float(z.imag)} for z in col]


def _complex_vector_from(entries: list, n: int) -> np.ndarray:
    if len(entries) != n:
        raise BasisFileError(f"vector has {len(entries)} entries, expected {n}")
    return np.array([complex(float(e["re"]), float(e["im"])) for e in entries])


def write(bf: BasisFile, path: str | Path) -> None:
    Path(path).write_text(json.dumps(bf.to_json(), indent=1) + "\n", encoding="utf-8")


def read(path: str | Path) -> BasisFile:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise BasisFileError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise BasisFileError("top-level JSON value must be an object")
    return BasisFile.from_json(data)
