"""Machine-readable report records.

Reports render as single-line JSON records with a fixed field order so CI
can diff them; the only nondeterministic field is ``elapsed``, which
consumers strip before byte comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


@dataclass
class VerificationReport:
    theorem: str
    algebra: str
    seed: int
    enumerated: int = 0
    random: int = 0
    checks: int = 0
    hypothesis_violations: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def fail(self, kind: str, module_text: str, detail: dict) -> None:
        self.failures.append(
            {"kind": kind, "module": module_text, "detail": detail}
        )

    def to_record(self) -> dict:
        return {
            "theorem": self.theorem,
            "algebra": self.algebra,
            "status": self.status,
            "checks": self.checks,
            "enumerated": self.enumerated,
            "random": self.random,
            "hypothesis_violations": self.hypothesis_violations,
            "failures": self.failures,
            "notes": self.notes,
            "seed": self.seed,
            "elapsed": round(self.elapsed, 6),
        }

    def to_json_line(self) -> str:
        return json_line(self.to_record())


@dataclass
class HypothesisCheck:
    name: str
    verdict: str  # yes | no | unknown
    evidence: str

    def to_record(self) -> dict:
        return {"name": self.name, "verdict": self.verdict, "evidence": self.evidence}


@dataclass
class PsiReport:
    dims: tuple
    phi: int
    psi: int
    rank_table: list
    indecomposables: list  # dims of distinct non-projective indecomposables
    syzygy_pd: list  # per level-phi summand: {"dims", "pd", "finite"}
    pd: dict  # pd of the input module, {"finite", "value"}
    pd_cap: int
    heuristic: bool = False

    def to_record(self) -> dict:
        return {
            "dims": list(self.dims),
            "phi": self.phi,
            "psi": self.psi,
            "rank_table": self.rank_table,
            "indecomposables": self.indecomposables,
            "tail": self.syzygy_pd,
            "pd": self.pd,
            "pd_cap": self.pd_cap,
            "heuristic": self.heuristic,
        }

    def to_json_line(self) -> str:
        return json_line(self.to_record())


@dataclass
class BoundReport:
    mode: str
    algebra: str
    simples: list
    ell: int | None
    hypotheses: list  # HypothesisCheck
    bound: int | None
    beta: int | None = None
    psi_dim: int | None = None
    flags: list = field(default_factory=list)
    brute_lower_bound: int | None = None
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        if any(h.verdict == "no" for h in self.hypotheses):
            return "hypothesis-failed"
        return "ok"

    def to_record(self) -> dict:
        return {
            "mode": self.mode,
            "algebra": self.algebra,
            "simples": self.simples,
            "ell": self.ell,
            "status": self.status,
            "hypotheses": [h.to_record() for h in self.hypotheses],
            "bound": self.bound,
            "beta": self.beta,
            "psi_dim": self.psi_dim,
            "flags": self.flags,
            "brute_findim_lower_bound": self.brute_lower_bound,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 6),
        }

    def to_json_line(self) -> str:
        return json_line(self.to_record())
