import logging
import sys
from argparse import Namespace
from dataclasses import dataclass, field

from rich.table import Table

from jpm.interval import IntervalIndex
from jpm.jumping import decide_jump, jump_search
from jpm.log import stderr_console
from jpm.models import JumpTrace, ParikhVector, QueryModeChoices, QuerySpec
from jpm.utils.index_store import StoredIndex, load_index

logger = logging.getLogger(__name__)


@dataclass
class QueryReport:
    """What a query prints: stdout lines, stderr summary lines and the found flag"""

    lines: list[str] = field(default_factory=list)
    summary: list[str] = field(default_factory=list)
    traces: dict[str, JumpTrace] = field(default_factory=dict)
    found: bool = False


def answer_query(
    stored: StoredIndex,
    q: ParikhVector,
    mode: QueryModeChoices,
    trace: bool = False,
) -> QueryReport:
    report = QueryReport()
    many = len(stored.indexes) > 1
    for name, index in stored:
        prefix = f"{name}\t" if many else ""
        if mode is QueryModeChoices.DECISION:
            hit = index.decide(q) if isinstance(index, IntervalIndex) else decide_jump(index, q)
            report.found |= hit
            report.lines.append(f"{prefix}{'yes' if hit else 'no'}")
            continue

        if isinstance(index, IntervalIndex):
            starts = index.occurrences(q)
            report.summary.append(f"{name}: {len(starts)} occurrence(s), {index.window_steps} window steps")
        else:
            result = jump_search(index, q, trace=trace)
            starts = result.occurrences
            counters = ", ".join(f"{k}={v}" for k, v in result.trace.counters.as_dict().items() if v)
            report.summary.append(
                f"{name}: {len(starts)} occurrence(s), J={result.trace.iterations}, {counters}"
            )
            if trace:
                report.traces[name] = result.trace
        report.found |= bool(starts)
        report.lines.extend(f"{prefix}{start}" for start in starts)
    return report


def _trace_table(name: str, jt: JumpTrace) -> Table:
    table = Table(title=f"{name}: logical trace", show_lines=False)
    table.add_column("k", justify="right")
    table.add_column("L", justify="right")
    table.add_column("R", justify="right")
    table.add_column("found")
    for k, step in enumerate(jt.logical, 1):
        table.add_row(str(k), str(step.left), str(step.right), "yes" if step.found else "no")
    return table


def query_command(args: Namespace) -> int:
    stored = load_index(args.index)
    spec = QuerySpec(text=args.query, mode=args.mode)
    q = spec.to_parikh(stored.header.get_alphabet())
    logger.info("Query %s (|q|=%d) in %s mode", q, q.length, spec.mode.value)

    report = answer_query(stored, q, spec.mode, args.trace)
    if report.lines:
        sys.stdout.write("\n".join(report.lines) + "\n")
    for line in report.summary:
        stderr_console.print(line, markup=False)
    for name, jt in report.traces.items():
        stderr_console.print(_trace_table(name, jt))

    if spec.mode is QueryModeChoices.DECISION:
        return 0 if report.found else 1
    return 0
