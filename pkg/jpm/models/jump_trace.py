from dataclasses import dataclass, field


@dataclass
class ProbeCounter:
    """Work counters filled in by an index while serving one search"""

    search_probes: int = 0  # row probes inside bounded binary searches
    lookups: int = 0  # constant-time row reads (firstfit, successor checks)
    node_visits: int = 0  # wavelet inner nodes touched
    firstfit_calls: int = 0
    prv_calls: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "search_probes": self.search_probes,
            "lookups": self.lookups,
            "node_visits": self.node_visits,
            "firstfit_calls": self.firstfit_calls,
            "prv_calls": self.prv_calls,
        }


@dataclass(frozen=True)
class LogicalStep:
    """One column of the (L_k, R_k, found) sequence used in the correctness argument"""

    left: int
    right: int
    found: bool


@dataclass
class JumpTrace:
    iterations: int = 0
    r_updates: int = 0
    l_updates: int = 0
    counters: ProbeCounter = field(default_factory=ProbeCounter)
    # R - L summed over R-updates that did not hit an occurrence
    gap_sum: int = 0
    gap_count: int = 0
    # recorded only when tracing is on
    pairs: list[tuple[int, int]] | None = None
    logical: list[LogicalStep] | None = None

    @property
    def mean_gap(self) -> float | None:
        return self.gap_sum / self.gap_count if self.gap_count else None


@dataclass
class JumpResult:
    occurrences: list[int]
    trace: JumpTrace

    @property
    def found(self) -> bool:
        return bool(self.occurrences)
