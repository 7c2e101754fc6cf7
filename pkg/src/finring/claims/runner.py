"""Run the claim registry over a corpus and collect a report."""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Sequence

from .. import analysis as an
from ..errors import RingError, SizeCapExceeded, UnknownClaim
from ..kernel import FiniteRing
from .corpus import RingCache
from .registry import COST_CAPS, REGISTRY, Claim, Context, Outcome

__all__ = ["STATUSES", "Cell", "ClaimReport", "run_claims", "corpus_digest", "report_schema"]

STATUSES = ("pass", "fail", "flagged", "inapplicable", "skipped")


@dataclass
class Cell:
    claim: str
    ring: str
    status: str
    witness: dict | None = None
    detail: str | None = None
    millis: float | None = None

    def as_dict(self) -> dict:
        out = {"claim": self.claim, "ring": self.ring, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        if self.millis is not None:
            out["millis"] = self.millis
        return out


@dataclass
class ClaimReport:
    seed: int
    config: dict
    corpus: list[dict]
    claims: list[dict]
    cells: list[Cell] = field(default_factory=list)

    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.cells:
            counts[c.status] += 1
        return counts

    def by_status(self, status: str) -> list[Cell]:
        return [c for c in self.cells if c.status == status]

    def cell(self, claim: str, ring: str) -> Cell:
        for c in self.cells:
            if c.claim == claim and c.ring == ring:
                return c
        raise KeyError((claim, ring))

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "config": self.config,
            "corpus": self.corpus,
            "corpus_digest": corpus_digest(self.corpus),
            "claims": self.claims,
            "cells": [c.as_dict() for c in self.cells],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        rings = [r["label"] for r in self.corpus]
        ids = [c["id"] for c in self.claims]
        mark = {"pass": ".", "fail": "F", "flagged": "!", "inapplicable": "-", "skipped": "s"}
        grid = {(c.claim, c.ring): mark[c.status] for c in self.cells}
        width = max([len(r) for r in rings] + [4])
        lines = [" " * width + "  " + " ".join(i[1:] for i in ids)]
        for r in rings:
            lines.append(r.ljust(width) + "  " + " ".join(grid.get((i, r), " ").rjust(2) for i in ids))
        lines.append("")
        lines.append("legend: . pass  F fail  ! flagged  - inapplicable  s skipped")
        lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in self.summary().items()))
        for c in self.cells:
            if c.status in ("fail", "flagged"):
                lines.append(f"{c.status.upper()} {c.claim} on {c.ring}: {c.detail}")
        return "\n".join(lines) + "\n"


def corpus_digest(corpus: Sequence[dict]) -> str:
    text = "\n".join(f"{r['label']}:{r['size']}" for r in corpus)
    return hashlib.sha256(text.encode()).hexdigest()


def _select(only: Iterable[str] | None) -> list[Claim]:
    if not only:
        return list(REGISTRY.values())
    out = []
    for cid in only:
        if cid not in REGISTRY:
            raise UnknownClaim(f"unknown claim {cid!r}")
        out.append(REGISTRY[cid])
    return sorted(out, key=lambda c: c.id)


def _run_cell(claim: Claim, ctx: Context, timings: bool) -> Cell:
    R = ctx.ring
    cap = COST_CAPS[claim.cost_class]
    if R.size > cap:
        return Cell(claim.id, R.label, "skipped", None, f"size {R.size} above the {claim.cost_class} cap {cap}")
    start = time.perf_counter()
    try:
        out = claim.check(ctx)
    except SizeCapExceeded as exc:
        out = Outcome("skipped", None, str(exc))
    except RingError as exc:
        out = Outcome("fail", None, f"{type(exc).__name__}: {exc}")
    millis = round((time.perf_counter() - start) * 1000, 1) if timings else None
    return Cell(claim.id, R.label, out.status, out.witness, out.detail, millis)


def run_claims(
    corpus: Sequence[FiniteRing],
    only: Iterable[str] | None = None,
    *,
    literal: bool = False,
    seed: int = 0,
    timings: bool = False,
    nstar_cap: int = an.NSTAR_CAP,
    jobs: int = 1,
    cache: RingCache | None = None,
    config: dict | None = None,
) -> ClaimReport:
    """Evaluate each selected claim on each ring; every (claim, ring) pair gets one cell.

    Profiles are computed once per ring before its cells run. With
    ``jobs > 1`` rings are processed on a thread pool; cell order in the
    report is fixed (ring order, then claim id) either way.
    """
    claims = _select(only)
    cache = cache or RingCache()

    def run_ring(R: FiniteRing) -> list[Cell]:
        profile = an.classify(R, nstar_cap)
        ctx = Context(R, profile, literal=literal, seed=seed, nstar_cap=nstar_cap, build=cache.get)
        return [_run_cell(c, ctx, timings) for c in claims]

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_ring = list(pool.map(run_ring, corpus))
    else:
        per_ring = [run_ring(R) for R in corpus]

    report = ClaimReport(
        seed=seed,
        config={"literal": literal, "nstar_cap": nstar_cap, **(config or {})},
        corpus=[{"label": R.label, "size": R.size, "backend": type(R).__name__} for R in corpus],
        claims=[{"id": c.id, "ref": c.ref, "statement": c.statement, "applicability": c.applicability,
                 "cost_class": c.cost_class} for c in claims],
    )
    report.cells = [cell for cells in per_ring for cell in cells]
    return report


def report_schema() -> dict:
    """The JSON schema reports validate against."""
    return json.loads(resources.files("finring.claims").joinpath("report_schema.json").read_text())
