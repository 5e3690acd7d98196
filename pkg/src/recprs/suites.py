"""Seeded randomized verification runs shared by the CLI and the test-suite."""

import random
from collections import Counter
from dataclasses import dataclass, field

from .families import random_chain_pair
from .nested import in_theorem_range, verify_thm1
from .prs import DEFAULT_RULE, recursive_prs
from .reduced import proportionality_check, verify_thm2


def trial_rng(seed, index):
    """Per-trial generator derived deterministically from the master seed."""
    return random.Random(f"{seed}:{index}")


@dataclass
class SuiteResult:
    theorem: object
    seed: int
    trials: int
    reports: list = field(default_factory=list)

    @property
    def counts(self):
        return Counter(r.status for r in self.reports)

    @property
    def skip_reasons(self):
        return Counter(r.reason for r in self.reports if r.status == "skipped")

    @property
    def failures(self):
        return [r for r in self.reports if r.status == "fail"]

    def to_json(self, verbose=False):
        c = self.counts
        return {
            "theorem": self.theorem,
            "seed": self.seed,
            "trials": self.trials,
            "checked": len(self.reports),
            "pass": c.get("pass", 0),
            "fail": c.get("fail", 0),
            "skipped": c.get("skipped", 0),
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "reports": [r.to_json(verbose) for r in self.reports],
        }


def instances(seed, trials, max_deg=8):
    for i in range(trials):
        f, g = random_chain_pair(trial_rng(seed, i), max_deg=max_deg)
        yield i, f, g


def valid_pairs(f, g, rule=DEFAULT_RULE, levels=None):
    """All ``(k, j)`` with ``k >= 2`` inside the theorems' range for this instance."""
    r = recursive_prs(f, g, rule)
    chain = r.degree_chain
    for k in range(2, r.depth + 1):
        if levels is not None and k not in levels:
            continue
        for j in range(chain[k - 1] - 2, -1, -1):
            if in_theorem_range(chain, k, j, g.degree):
                yield k, j


def run_thm1(seed=42, trials=100, max_deg=8, levels=(2,), rule=DEFAULT_RULE):
    out = SuiteResult(1, seed, trials)
    for i, f, g in instances(seed, trials, max_deg):
        for k, j in valid_pairs(f, g, rule, levels):
            out.reports.append(verify_thm1(f, g, k, j, rule, seed=f"{seed}:{i}"))
    return out


def run_thm2(seed=42, trials=100, max_deg=8, levels=None, rule=DEFAULT_RULE):
    out = SuiteResult(2, seed, trials)
    for i, f, g in instances(seed, trials, max_deg):
        for k, j in valid_pairs(f, g, rule, levels):
            out.reports.append(verify_thm2(f, g, k, j, rule, seed=f"{seed}:{i}"))
    return out


def run_proportionality(seed=42, trials=100, max_deg=8, rule=DEFAULT_RULE):
    out = SuiteResult("prop", seed, trials)
    for i, f, g in instances(seed, trials, max_deg):
        out.reports.extend(proportionality_check(f, g, rule))
    return out
