"""Sequential analyzer chains: exact outcome distributions and Monte Carlo.

A scenario is an initial branch label followed by one or more analyzer
directions. The single-step law is the transition probability between
branch labels; chains use the projective collapse convention: after a stage
at direction d yields branch s, the photon's state is exactly the label
(d, s). The single-step law itself makes no statement about sequences; the
collapse convention is the standard completion and is an extension.

Outcome sequences are indexed big-endian: the first stage is the most
significant bit, Plus = 0 and Minus = 1, so sequence (+,-) of a two-stage
chain has index 0b01 = 1.

Randomness contract
-------------------
Sampling uses the counter-based Philox-4x64-10 generator (numpy), keyed by
the user seed, which is platform-independent and seedable. Trial ``i``
consumes exactly the ``i``-th double of that stream, so results are
deterministic in (scenario, seed, trials). Stream-split rule for parallel
or blocked execution: partition the trial index space into contiguous
ranges whose boundaries are multiples of 4 (the Philox output block is
four 64-bit words); a worker owning [lo, hi) reconstructs its uniforms by
advancing the counter ``lo / 4`` blocks. Counts are summed per sequence,
so the report is bit-identical for every partition, including none.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .amplitudes import probability
from .directions import Branch, BranchLabel, Direction

#: Default maximum number of stages (2^n outcome sequences bound memory).
DEFAULT_STAGE_CAP = 20


class StageCapError(ValueError):
    """Scenario has more stages than the configured cap allows."""


def sequence_to_index(sequence: tuple[Branch, ...]) -> int:
    """Index of an outcome sequence (first stage = most significant bit)."""
    index = 0
    for branch in sequence:
        index = (index << 1) | (branch is Branch.MINUS)
    return index


def index_to_sequence(index: int, n_stages: int) -> tuple[Branch, ...]:
    """Inverse of :func:`sequence_to_index`."""
    return tuple(
        Branch.MINUS if (index >> (n_stages - 1 - k)) & 1 else Branch.PLUS
        for k in range(n_stages)
    )


def sequence_to_str(sequence: tuple[Branch, ...]) -> str:
    return "".join(b.value for b in sequence)


def str_to_sequence(text: str) -> tuple[Branch, ...]:
    return tuple(Branch.from_token(ch) for ch in text)


@dataclass(frozen=True)
class MeasurementScenario:
    """An initial branch label followed by an ordered list of analyzers."""

    initial: BranchLabel
    stages: tuple[Direction, ...]

    def __post_init__(self):
        stages = tuple(self.stages)
        if not stages:
            raise ValueError("scenario needs at least one stage")
        object.__setattr__(self, "stages", stages)

    @property
    def n_stages(self) -> int:
        return len(self.stages)


@dataclass(frozen=True)
class OutcomeDistribution:
    """Probability of every outcome sequence of a scenario.

    Stored as a dense vector over sequence indices; behaves like a mapping
    from branch sequences to probabilities.
    """

    n_stages: int
    probs: np.ndarray = field(repr=False)

    def __getitem__(self, sequence: tuple[Branch, ...]) -> float:
        return float(self.probs[sequence_to_index(sequence)])

    def __len__(self) -> int:
        return len(self.probs)

    def items(self):
        for i, p in enumerate(self.probs):
            yield index_to_sequence(i, self.n_stages), float(p)

    def as_dict(self) -> dict[tuple[Branch, ...], float]:
        return dict(self.items())

    def total(self) -> float:
        return float(self.probs.sum())

    def marginal_dropping_last(self) -> "OutcomeDistribution":
        """Distribution of the first n-1 stages (sums out the final stage)."""
        if self.n_stages < 2:
            raise ValueError("nothing left after dropping the only stage")
        return OutcomeDistribution(
            n_stages=self.n_stages - 1,
            probs=self.probs.reshape(-1, 2).sum(axis=1),
        )


@dataclass(frozen=True)
class SampleReport:
    """Counts per outcome sequence from a seeded Monte Carlo run."""

    seed: int
    trials: int
    n_stages: int
    counts: np.ndarray = field(repr=False)
    max_abs_deviation_sigma: float

    def __getitem__(self, sequence: tuple[Branch, ...]) -> int:
        return int(self.counts[sequence_to_index(sequence)])

    def items(self):
        for i, c in enumerate(self.counts):
            yield index_to_sequence(i, self.n_stages), int(c)

    def as_dict(self) -> dict[tuple[Branch, ...], int]:
        return dict(self.items())


def _stage_transition(prev: Direction, stage: Direction) -> np.ndarray:
    """2x2 matrix T[s, t] = P(prev branch s -> stage branch t)."""
    t = np.empty((2, 2))
    for s, row in zip((Branch.PLUS, Branch.MINUS), (0, 1)):
        for u, col in zip((Branch.PLUS, Branch.MINUS), (0, 1)):
            t[row, col] = probability(BranchLabel(prev, s), BranchLabel(stage, u))
    return t


def exact_distribution(
    scenario: MeasurementScenario, stage_cap: int = DEFAULT_STAGE_CAP
) -> OutcomeDistribution:
    """Exact probability of every outcome sequence.

    The probability of (s_1 ... s_n) is the product of the stage-wise
    transition probabilities under the collapse convention. Refuses
    scenarios beyond ``stage_cap`` stages (2^n sequences).
    """
    n = scenario.n_stages
    if n > stage_cap:
        raise StageCapError(f"{n} stages exceeds the cap of {stage_cap} (2^n outcome blowup)")

    first = scenario.stages[0]
    probs = np.array(
        [
            probability(scenario.initial, BranchLabel(first, Branch.PLUS)),
            probability(scenario.initial, BranchLabel(first, Branch.MINUS)),
        ]
    )
    for k in range(1, n):
        t = _stage_transition(scenario.stages[k - 1], scenario.stages[k])
        last = np.arange(len(probs)) & 1
        grown = np.empty(2 * len(probs))
        grown[0::2] = probs * t[last, 0]
        grown[1::2] = probs * t[last, 1]
        probs = grown
    return OutcomeDistribution(n_stages=n, probs=probs)


def _uniform_block(seed: int, start: int, count: int) -> np.ndarray:
    """Doubles ``start .. start+count`` of the Philox(key=seed) stream.

    ``start`` must be a multiple of 4: Philox emits four 64-bit words per
    counter block and one double consumes one word.
    """
    if start % 4 != 0:
        raise ValueError("block start must be a multiple of 4 (Philox block alignment)")
    bg = np.random.Philox(key=seed)
    if start:
        bg.advance(start // 4)
    return np.random.Generator(bg).random(count)


def sample(
    scenario: MeasurementScenario,
    seed: int,
    trials: int,
    stage_cap: int = DEFAULT_STAGE_CAP,
    block_size: int | None = None,
) -> SampleReport:
    """Monte Carlo realization of :func:`exact_distribution`.

    Trial ``i`` draws its outcome sequence by inverse CDF from the exact
    distribution using the ``i``-th stream double (see the module docstring
    for the randomness contract). ``block_size`` (a multiple of 4) forces
    blocked execution; the counts are bit-identical for every block size.

    The report's ``max_abs_deviation_sigma`` is the largest per-sequence
    deviation from the expected count in binomial standard deviations.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= int(seed) < 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")

    dist = exact_distribution(scenario, stage_cap=stage_cap)
    cum = np.cumsum(dist.probs)
    n_seq = len(dist.probs)

    if block_size is None:
        block_size = trials
    elif block_size < 1 or block_size % 4 != 0:
        raise ValueError("block_size must be a positive multiple of 4")

    counts = np.zeros(n_seq, dtype=np.int64)
    for lo in range(0, trials, block_size):
        hi = min(lo + block_size, trials)
        u = _uniform_block(int(seed), lo, hi - lo)
        idx = np.searchsorted(cum, u, side="right")
        counts += np.bincount(np.minimum(idx, n_seq - 1), minlength=n_seq)

    expected = trials * dist.probs
    spread = np.sqrt(trials * dist.probs * (1.0 - dist.probs))
    deviation = np.abs(counts - expected)
    with np.errstate(divide="ignore", invalid="ignore"):
        sigma = np.where(
            spread > 0.0,
            deviation / np.where(spread > 0.0, spread, 1.0),
            np.where(deviation == 0.0, 0.0, np.inf),
        )
    return SampleReport(
        seed=int(seed),
        trials=int(trials),
        n_stages=dist.n_stages,
        counts=counts,
        max_abs_deviation_sigma=float(sigma.max()),
    )
