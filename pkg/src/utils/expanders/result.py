from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from utils.spectra import SpectralReport

class FamilyTag(Enum):
    SELBERG = "selberg"
    LSV = "lsv"
    ABCC = "abcc"
    COVER = "cover"
    PRODUCT = "product"

CSV_COLUMNS = ["family", "p", "q", "d", "e", "seed", "n", "k", "classification",
               "lambda", "bound", "verdict", "runtime_ms"]

@dataclass
class FamilyResult:
    family: FamilyTag
    p: Optional[int] = None
    q: Optional[int] = None
    d: Optional[int] = None
    e: Optional[int] = None
    seed: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None
    classification: str = ""
    report: Optional[SpectralReport] = None
    bound: Optional[float] = None
    verdict: str = "recorded"
    verdicts: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)
    provenance: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    runtime_ms: float = 0.0

    @property
    def lambda_x(self) -> Optional[float]:
        return None if self.report is None else self.report.lambda_x

    @property
    def passed(self) -> bool:
        return self.verdict in ("pass", "recorded")

    def params(self) -> dict:
        return {k: getattr(self, k) for k in ("p", "q", "d", "e", "seed") if getattr(self, k) is not None}

    def to_row(self) -> dict:
        return {
            "family": self.family.value,
            "p": self.p,
            "q": self.q,
            "d": self.d,
            "e": self.e,
            "seed": self.seed,
            "n": self.n,
            "k": self.k,
            "classification": self.classification,
            "lambda": self.lambda_x,
            "bound": self.bound,
            "verdict": self.verdict,
            "runtime_ms": round(self.runtime_ms, 3),
        }

    def to_dict(self, include_spectrum: bool = False) -> dict:
        '''JSON form; timings are left out so equal runs serialize identically'''
        report = None
        if self.report is not None:
            report = self.report.to_dict(include_spectrum=include_spectrum)
            report.pop("runtime_ms", None)
        return {
            "family": self.family.value,
            "params": self.params(),
            "n": self.n,
            "k": self.k,
            "classification": self.classification,
            "lambda": self.lambda_x,
            "bound": self.bound,
            "verdict": self.verdict,
            "verdicts": dict(sorted(self.verdicts.items())),
            "details": self.details,
            "report": report,
            "provenance": self.provenance,
            "error": self.error,
        }
