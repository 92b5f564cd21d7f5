"""Request and response models shared by the HTTP service and the CLI.

Every response carries the package version and the seed that produced it,
so identical requests replay byte-identically. Rationals travel as strings
to keep arithmetic exact across the wire.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from .. import __version__

TypeLabel = Literal["A", "B", "C", "D", "E", "F", "G"]

ACCEPTANCE_MATRIX: tuple[tuple[str, int], ...] = (
    ("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2),
)


# -- requests ---------------------------------------------------------------

class RootsRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)


class WeylScanRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)
    max_size: int = Field(default=1152, ge=1)


class RelationsRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)
    samples: int = Field(default=50, ge=1)
    seed: int = 0


class RgdCheckRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)
    prime: int = Field(default=2, ge=2)
    budget: int = Field(default=100, ge=1)
    seed: int = 0


class VrgdCheckRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)
    prime: int = Field(default=2, ge=2)
    budget: int = Field(default=100, ge=1)
    seed: int = 0


class TorsionRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)
    word: list[int] = Field(default_factory=list)  # empty -> Coxeter word 1..rank
    samples: int = Field(default=50, ge=1)
    seed: int = 0


class TorsionScanRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)
    max_size: int = Field(default=1152, ge=1)
    samples: int = Field(default=5, ge=1)
    seed: int = 0


class CongruenceProbeRequest(BaseModel):
    type_label: TypeLabel
    rank: int = Field(ge=1, le=8)
    prime: int = Field(default=2, ge=2)
    modulus: int = Field(default=3, ge=2)
    words: int = Field(default=200, ge=1)
    max_len: int = Field(default=8, ge=0)
    seed: int = 0
    strict: bool = True


class ApproxRequest(BaseModel):
    prime: int = Field(default=2, ge=2)
    modulus: int = Field(default=3, ge=2)
    lam: str = "7"
    precision: int = Field(default=4, ge=1)
    type_label: Optional[TypeLabel] = None
    rank: Optional[int] = Field(default=None, ge=1, le=8)
    root_index: int = Field(default=1, ge=1)


# -- responses --------------------------------------------------------------

class Provenance(BaseModel):
    version: str = __version__
    seed: int = 0


class RootEntry(BaseModel):
    coords: list[int]
    height: int


class RootsResponse(Provenance):
    type_label: str
    rank: int
    dimension: int
    root_count: int
    positive_count: int
    weyl_order: int
    coxeter_number: int
    cartan: list[list[int]]
    roots: list[RootEntry]


class WeylRow(BaseModel):
    word: list[int]
    order: int
    det_minus_one: str
    eigenvalue_one: bool


class WeylScanResponse(Provenance):
    type_label: str
    rank: int
    size: int
    rows: list[WeylRow]


class RelationRow(BaseModel):
    relation: str
    samples: int
    ok: bool
    detail: str
    counterexample: Optional[list[str]] = None


class RelationsResponse(Provenance):
    type_label: str
    rank: int
    samples: int
    all_ok: bool
    rows: list[RelationRow]


class AxiomRow(BaseModel):
    axiom: str
    samples: int
    status: str
    counterexample: Optional[dict[str, Any]] = None
    detail: str = ""


class RgdCheckResponse(Provenance):
    type_label: str
    rank: int
    prime: int
    budget: int
    all_ok: bool
    rows: list[AxiomRow]


class VrgdCheckResponse(Provenance):
    type_label: str
    rank: int
    prime: int
    budget: int
    all_ok: bool
    rows: list[AxiomRow]


class OrderCount(BaseModel):
    order: str  # decimal order, or "infinite"
    count: int


class TorsionResponse(Provenance):
    type_label: str
    rank: int
    word: list[int]
    weyl_order: int
    eigenvalue_one: bool
    orders: list[OrderCount]
    verdict: str
    samples: int
    power_identity_ok: bool
    ok: bool


class TorsionScanRow(BaseModel):
    word: list[int]
    weyl_order: int
    criterion: bool
    det_minus_one: str
    verdict: str


class TorsionScanResponse(Provenance):
    type_label: str
    rank: int
    size: int
    all_ok: bool
    rows: list[TorsionScanRow]


class CongruenceProbeResponse(Provenance):
    type_label: str
    rank: int
    prime: int
    modulus: int
    strict: bool
    words: int
    max_len: int
    checked: int
    skipped_identity: int
    verdict: str
    violating_word: Optional[list[Any]] = None
    violating_order: Optional[int] = None
    ok: bool


class ApproxGeneratorPart(BaseModel):
    type_label: str
    rank: int
    alpha: list[int]
    target: int
    achieved: str  # decimal valuation, or "infinite"


class ApproxResponse(Provenance):
    prime: int
    modulus: int
    lam: str
    mu: str
    nu_diff: str  # decimal valuation of lam - mu, or "infinite"
    precision: int
    generator: Optional[ApproxGeneratorPart] = None


class HealthResponse(BaseModel):
    version: str = __version__
    status: str = "ok"


class SweepResponse(Provenance):
    command: str
    budget_seconds: float
    truncated: bool
    results: list[dict[str, Any]]


RESPONSE_MODELS: dict[str, type[BaseModel]] = {
    "roots": RootsResponse,
    "weyl-scan": WeylScanResponse,
    "relations": RelationsResponse,
    "rgd-check": RgdCheckResponse,
    "vrgd-check": VrgdCheckResponse,
    "torsion": TorsionResponse,
    "torsion-scan": TorsionScanResponse,
    "congruence-probe": CongruenceProbeResponse,
    "approx": ApproxResponse,
    "sweep": SweepResponse,
    "health": HealthResponse,
}


def schema_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "schemas"


def generate_schemas(outdir: Optional[Path] = None) -> dict[str, dict]:
    """Write one JSON schema file per response model; returns the schemas."""
    outdir = schema_dir() if outdir is None else Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    out = {}
    for command, model in RESPONSE_MODELS.items():
        schema = model.model_json_schema()
        out[command] = schema
        path = outdir / f"{command}.json"
        path.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n")
    return out


def load_schema(command: str) -> dict:
    if command not in RESPONSE_MODELS:
        raise KeyError(command)
    return json.loads((schema_dir() / f"{command}.json").read_text())


if __name__ == "__main__":
    generate_schemas()
    print(f"wrote {len(RESPONSE_MODELS)} schemas to {schema_dir()}")
