"""
AlgebraFile documents.

    {
      "name": "sl2",
      "dim": 3,
      "brackets": [
        [1, 2, [[3, "1"]]],
        [1, 3, [[1, "-2"]]],
        [2, 3, [[2, "2"]]]
      ]
    }

Indices are 1-based, coefficients are reduced rationals written "p/q".
"""
import json
from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from liecoh.core.linalg import format_rational, parse_rational


class BracketEntry(BaseModel):
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    coefficients: List[Tuple[int, str]]

    @field_validator("coefficients")
    @classmethod
    def coefficients_are_rationals(cls, v: List[Tuple[int, str]]) -> List[Tuple[int, str]]:
        seen = set()
        for k, text in v:
            if k < 1:
                raise ValueError(f"coefficient index {k} must be >= 1")
            if k in seen:
                raise ValueError(f"coefficient index {k} given twice")
            seen.add(k)
            parse_rational(text)
        return v

    @model_validator(mode="before")
    @classmethod
    def from_triple(cls, data):
        if isinstance(data, (list, tuple)):
            if len(data) != 3:
                raise ValueError("bracket entries are triples [i, j, coefficients]")
            return {"i": data[0], "j": data[1], "coefficients": data[2]}
        return data

    @model_validator(mode="after")
    def ordered_pair(self) -> "BracketEntry":
        if self.i >= self.j:
            raise ValueError(f"bracket indices need i < j, got ({self.i}, {self.j})")
        return self

    def vector(self) -> dict:
        """0-based sparse coefficient vector."""
        return {k - 1: parse_rational(text) for k, text in self.coefficients}


class AlgebraDocument(BaseModel):
    name: str = Field(..., min_length=1)
    dim: int = Field(..., ge=0)
    brackets: List[BracketEntry] = []

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def indices_in_range(self) -> "AlgebraDocument":
        seen = set()
        for pos, entry in enumerate(self.brackets):
            if entry.j > self.dim:
                raise ValueError(f"brackets.{pos}: index {entry.j} exceeds dim {self.dim}")
            for k, _ in entry.coefficients:
                if k > self.dim:
                    raise ValueError(f"brackets.{pos}: coefficient index {k} exceeds dim {self.dim}")
            if (entry.i, entry.j) in seen:
                raise ValueError(f"brackets.{pos}: duplicate bracket ({entry.i}, {entry.j})")
            seen.add((entry.i, entry.j))
        return self

    def bracket_table(self) -> dict:
        return {(e.i - 1, e.j - 1): e.vector() for e in self.brackets}

    def to_text(self) -> str:
        """Canonical text: brackets sorted by (i, j), coefficients by k, one bracket per line."""
        lines = ["{", f'  "name": {json.dumps(self.name, ensure_ascii=False)},', f'  "dim": {self.dim},']
        entries = sorted(self.brackets, key=lambda e: (e.i, e.j))
        if not entries:
            lines.append('  "brackets": []')
        else:
            lines.append('  "brackets": [')
            for pos, e in enumerate(entries):
                coeffs = ", ".join(f'[{k}, "{text}"]' for k, text in sorted(e.coefficients))
                comma = "," if pos < len(entries) - 1 else ""
                lines.append(f"    [{e.i}, {e.j}, [{coeffs}]]{comma}")
            lines.append("  ]")
        lines.append("}")
        return "\n".join(lines) + "\n"


def bracket_entry(i: int, j: int, vector: dict) -> BracketEntry:
    """1-based entry from a 0-based sparse vector."""
    return BracketEntry(
        i=i + 1,
        j=j + 1,
        coefficients=[(k + 1, format_rational(Fraction(v))) for k, v in sorted(vector.items())],
    )
