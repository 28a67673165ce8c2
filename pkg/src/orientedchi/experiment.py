"""Seeded search over random hypercube orientations.

Each trial draws an orientation of Q_d from its own derived seed, colours it
greedily and, when Q_d has at most 16 vertices, solves it exactly. The best
certified lower bound across trials is compared with ``0.8007... * sqrt(2^d)``.
Records are emitted in trial order whatever the worker count, and wall-clock
timings are left out unless asked for, so output files are byte-stable.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from .bounds import lemma4_constant
from .chromatic import DEFAULT_BUDGET, is_oriented_colouring, ochi_exact, ochi_heuristic, oriented_clique_lower
from .diameter import is_oclique
from .graph import gen_hypercube, orient, random_orientation_mask
from .rng import derive_seed

EXACT_MAX_N = 16
CSV_COLUMNS = (
    "trial", "seed", "mask_digest", "heuristic_chi", "exact_chi", "is_oclique", "nodes", "millis",
)


@dataclass
class TrialRecord:
    trial: int
    seed: int
    mask_digest: str
    heuristic_chi: int
    exact_chi: int | None
    is_oclique: bool
    nodes: int
    millis: int | None
    certified_lower: int
    witness_ok: bool


@dataclass
class ExperimentRecord:
    d: int
    seed: int
    trials: int
    budget: int
    target: float
    best_lower: int
    best_seed: int
    records: list[TrialRecord]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            w.writerow([
                r.trial, r.seed, r.mask_digest, r.heuristic_chi,
                "" if r.exact_chi is None else r.exact_chi,
                int(r.is_oclique), r.nodes, "" if r.millis is None else r.millis,
            ])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "d": self.d,
            "seed": self.seed,
            "trials": self.trials,
            "budget": self.budget,
            "target": round(self.target, 6),
            "best": {"certified_lower": self.best_lower, "seed": self.best_seed},
            "records": [asdict(r) for r in self.records],
        }
        return json.dumps(doc, indent=2) + "\n"


def mask_digest(mask: int, m: int) -> str:
    raw = mask.to_bytes((m + 7) // 8 or 1, "little")
    return hashlib.sha256(raw).hexdigest()[:16]


def run_trial(d: int, trial: int, master_seed: int, budget: int, timing: bool = False) -> TrialRecord:
    start = time.perf_counter()
    Q = gen_hypercube(d)
    seed = derive_seed(master_seed, trial)
    mask = random_orientation_mask(Q, seed)
    D = orient(Q, mask)
    heur = ochi_heuristic(D, seed)
    ok = is_oriented_colouring(D, heur.witness)
    exact_chi = None
    nodes = heur.nodes
    if Q.n <= EXACT_MAX_N:
        ex = ochi_exact(D, budget, seed)
        nodes = ex.nodes
        ok = ok and is_oriented_colouring(D, ex.witness)
        certified = ex.value if ex.completed else ex.lower
        if ex.completed:
            exact_chi = ex.value
    else:
        certified = oriented_clique_lower(D)
    millis = round((time.perf_counter() - start) * 1000) if timing else None
    return TrialRecord(
        trial, seed, mask_digest(mask, Q.m), heur.value, exact_chi,
        is_oclique(D), nodes, millis, certified, ok,
    )


def run_experiment(
    d: int,
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    timing: bool = False,
) -> ExperimentRecord:
    gen_hypercube(d)  # validates d before spawning work
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    args = [(d, i, seed, budget, timing) for i in range(trials)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda a: run_trial(*a), args))
    else:
        records = [run_trial(*a) for a in args]
    best = max(records, key=lambda r: (r.certified_lower, -r.trial))
    return ExperimentRecord(
        d, seed, trials, budget, lemma4_constant() * 2 ** (d / 2),
        best.certified_lower, best.seed, records,
    )
