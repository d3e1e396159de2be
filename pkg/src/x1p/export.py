"""Run configuration, verification reports and the equation export formats."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, Level, as_level
from .ideal import all_generators, canonical_triples, determine_kappa, eliminated_quadric
from .polys import ST, SparsePoly, poly_from_json, poly_to_json, to_text

__all__ = [
    "ConfigError",
    "RunConfig",
    "VerificationReport",
    "ReportLog",
    "export_equations",
    "export_json",
    "parse_export",
    "cas_script",
    "FORMATS",
]

FORMATS = ("text", "json", "cas-script")
KAPPA_MIN_ORDER = 10


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    p: int = 7
    q_order: int = 30
    z_order: int = 8
    max_degree: int = 3
    mode: str = "auto"  # auto | exact | numeric
    tau: complex | None = None
    output: str = "text"
    seed: int = 0
    kappa: Fraction | None = None  # None means: determine from the q-expansions

    def __post_init__(self):
        try:
            as_level(self.p)
        except (ValueError, TypeError) as e:
            raise ConfigError(str(e)) from None
        if self.q_order < 1:
            raise ConfigError("q-order must be positive")
        if self.z_order < 2:
            raise ConfigError("z-order must be at least 2")
        if self.max_degree < 0:
            raise ConfigError("max degree must be non-negative")
        if self.mode not in ("auto", "exact", "numeric"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.output not in FORMATS:
            raise ConfigError(f"unknown output format {self.output!r}")
        if self.tau is not None and complex(self.tau).imag <= 0:
            raise ConfigError("tau must lie in the upper half plane")

    @property
    def level(self) -> Level:
        return as_level(self.p)


@dataclass
class VerificationReport:
    claim: str
    passed: bool
    witness: dict = field(default_factory=dict)
    seconds: float = 0.0
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        d["witness"] = _jsonable(self.witness)
        return d

    def line(self) -> str:
        out = f"[{self.status.upper()}] {self.claim}"
        if self.detail:
            out += f": {self.detail}"
        if not self.passed and self.witness:
            out += "  witness=" + json.dumps(_jsonable(self.witness), sort_keys=True)
        return out


class ReportLog:
    """Append-only collection of reports; overall success is the conjunction."""

    def __init__(self):
        self._reports: list[VerificationReport] = []

    def add(self, report: VerificationReport) -> VerificationReport:
        self._reports.append(report)
        return report

    def run(self, claim: str, fn):
        """Time fn() -> (passed, witness, detail) and record it."""
        t0 = time.perf_counter()
        passed, witness, detail = fn()
        return self.add(VerificationReport(claim, bool(passed), witness or {}, time.perf_counter() - t0, detail))

    @property
    def reports(self) -> list[VerificationReport]:
        return sorted(self._reports, key=lambda r: r.claim)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self._reports)

    def __len__(self):
        return len(self._reports)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (Fraction, CyclotomicNumber, SparsePoly)):
        return str(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def export_equations(cfg: RunConfig) -> dict:
    """The generators and their t-free forms as a JSON-ready document."""
    lvl = cfg.level
    if cfg.kappa is None and cfg.q_order < KAPPA_MIN_ORDER:
        raise ConfigError(f"deciding kappa needs q-order at least {KAPPA_MIN_ORDER}")
    kappa = cfg.kappa if cfg.kappa is not None else determine_kappa(lvl, cfg.q_order)
    kappa = Fraction(kappa)
    gens = all_generators(lvl)
    return {
        "p": lvl.p,
        "kappa": str(kappa),
        "weighted_generators": [
            {"triple": list(g.triple), "terms": poly_to_json(g.poly)} for g in gens
        ],
        "eliminated_quadrics": [
            {"triple": list(tr), "terms": poly_to_json(eliminated_quadric(lvl, tr, kappa))}
            for tr in canonical_triples(lvl)
        ],
    }


def export_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_export(text: str) -> dict:
    """Inverse of export_json, with polynomials rebuilt as SparsePoly."""
    raw = json.loads(text)
    lvl = as_level(int(raw["p"]))
    return {
        "p": lvl.p,
        "kappa": Fraction(raw["kappa"]),
        "weighted_generators": [
            (tuple(g["triple"]), poly_from_json(lvl, ST, g["terms"])) for g in raw["weighted_generators"]
        ],
        "eliminated_quadrics": [
            (tuple(g["triple"]), poly_from_json(lvl, ST, g["terms"])) for g in raw["eliminated_quadrics"]
        ],
    }


def cas_script(doc: dict) -> str:
    """One eliminated quadric per line in s1..sm, after a comment header."""
    lvl = as_level(doc["p"])
    lines = [f"-- p={lvl.p}, kappa={doc['kappa']}, variables s1..s{lvl.m}"]
    for q in doc["eliminated_quadrics"]:
        f = poly_from_json(lvl, ST, q["terms"])
        lines.append(to_text(f) + ";")
    return "\n".join(lines) + "\n"
