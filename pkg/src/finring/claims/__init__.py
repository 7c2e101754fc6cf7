"""Executable claims, the ring corpus and the claims runner."""

from .corpus import Caps, CorpusEntry, RingCache, corpus_entries, default_corpus
from .registry import COST_CAPS, REGISTRY, Claim, Context, Outcome, explain, get_claim
from .runner import STATUSES, Cell, ClaimReport, corpus_digest, report_schema, run_claims

__all__ = [
    "Caps", "CorpusEntry", "RingCache", "corpus_entries", "default_corpus",
    "COST_CAPS", "REGISTRY", "Claim", "Context", "Outcome", "explain", "get_claim",
    "STATUSES", "Cell", "ClaimReport", "corpus_digest", "report_schema", "run_claims",
]
