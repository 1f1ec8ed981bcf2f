"""Master/job-list scheduling of budgeted searches over one tree.

A run seeds the job list with the root, then repeatedly pops a start vertex,
searches it with budget b, and pushes every returned unexplored node as a
new job.  The list size is observed immediately after each pop, so a run
whose first call explores everything records the series (0,).  Restarts
R = total flag-True records; every non-start node is generated exactly once
across the whole run, so evaluations always sum to n - 1.  R depends only on
(tree, b): pop policy and worker count redistribute work without changing
which subtree roots exceed the budget.

Two interchangeable engines compute one search call:

  * "extent": closed form on the preorder layout.  The explored prefix of a
    call at s is the slots s+1 .. s+b-1; what remains of the subtree interval
    is tiled left to right by the unexplored subtrees, so flag-True nodes
    follow from repeated extent jumps.  O(restarts) per call.
  * "oracle": drives the two-stack search through tree.adj, node by node.

They produce identical statistics (property-tested); "extent" is the default
because it makes million-node sweeps cheap.

simulate_parallel replays the same job stream under W workers with a fixed
per-job start cost, at job granularity: node-level interleaving cannot change
any reported aggregate, so jobs execute atomically in sim time.
"""

from __future__ import annotations

import csv
import heapq
import math
from collections import deque
from dataclasses import dataclass, field

from .bdfs import bdfs
from .gwtree import PreorderTree

POLICIES = ("lifo", "fifo")


class JobList:
    """Pending start vertices; lifo pops newest first, fifo oldest first."""

    def __init__(self, policy: str = "lifo"):
        if policy not in POLICIES:
            raise ValueError(f"policy must be one of {POLICIES}")
        self.policy = policy
        self._items = deque()

    def push(self, items) -> None:
        self._items.extend(items)

    def pop(self):
        return self._items.pop() if self.policy == "lifo" else self._items.popleft()

    def __len__(self):
        return len(self._items)


@dataclass
class SearchStats:
    """Aggregates of one complete run over a tree."""

    n: int
    policy: str
    restarts: int
    calls: int
    evaluations: int
    list_sizes: list = field(repr=False)
    budgets: list = field(repr=False)


@dataclass(frozen=True)
class SimReport:
    """Timing aggregates of one simulated parallel run."""

    workers: int
    restart_cost: float
    jobs: int
    restarts: int
    evaluations: int
    makespan: float
    idle_time: float
    restart_overhead: float
    speedup: float


def _call_extent(ext, s: int, b: int):
    """(nodes generated, unexplored roots) for one call, from subtree extents."""
    m = int(ext[s])
    if m <= b:  # whole subtree fits: everything explored, nothing returned
        return m - 1, ()
    end = s + m
    w = s + b
    out = []
    while w < end:
        out.append(w)
        w += int(ext[w])
    return b - 1 + len(out), out


def _call_oracle(tree: PreorderTree, s: int, b: int):
    # max(..., 1): bdfs insists on probing at least j=1, fine for a lone leaf
    result = bdfs(tree.adj, s, max(tree.max_degree, 1), b)
    return result.generated, result.unexplored()


def _make_call(tree: PreorderTree, engine: str):
    if engine == "extent":
        ext = tree.extent
        return lambda s, b: _call_extent(ext, s, b)
    if engine == "oracle":
        return lambda s, b: _call_oracle(tree, s, b)
    raise ValueError("engine must be 'extent' or 'oracle'")


def run_single(tree: PreorderTree, budget: int, policy: str = "lifo",
               engine: str = "extent") -> SearchStats:
    """Run the master loop at a fixed budget until the job list drains."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    call = _make_call(tree, engine)
    jobs = JobList(policy)
    jobs.push((0,))
    restarts = calls = evaluations = 0
    sizes = []
    while len(jobs):
        s = jobs.pop()
        sizes.append(len(jobs))
        generated, unexplored = call(s, budget)
        calls += 1
        evaluations += generated
        restarts += len(unexplored)
        jobs.push(unexplored)
    return SearchStats(n=tree.n, policy=policy, restarts=restarts, calls=calls,
                       evaluations=evaluations, list_sizes=sizes,
                       budgets=[budget] * calls)


def run_adaptive(tree: PreorderTree, initial_budget: int, low_mark: float,
                 high_mark: float, scale_factor: float, policy: str = "lifo",
                 engine: str = "extent") -> SearchStats:
    """Fixed-budget run, except the budget reacts to job-list pressure.

    The decision uses the list size as the master sees it when assigning
    work, i.e. before the next start vertex is popped: below low_mark the
    budget divides by scale_factor (floored, never below 2), above high_mark
    it multiplies.  Marks (0, inf) reproduce run_single exactly.  The budget
    used by each call is reported in SearchStats.budgets.
    """
    if initial_budget < 1:
        raise ValueError("initial budget must be >= 1")
    if scale_factor <= 1:
        raise ValueError("scale_factor must be > 1")
    if not 0 <= low_mark < high_mark:
        raise ValueError("need 0 <= low_mark < high_mark")
    call = _make_call(tree, engine)
    jobs = JobList(policy)
    jobs.push((0,))
    budget = initial_budget
    restarts = calls = evaluations = 0
    sizes = []
    budgets = []
    while len(jobs):
        pressure = len(jobs)
        if pressure < low_mark:
            budget = max(2, math.floor(budget / scale_factor))
        elif pressure > high_mark:
            budget = math.floor(budget * scale_factor)
        s = jobs.pop()
        sizes.append(len(jobs))
        budgets.append(budget)
        generated, unexplored = call(s, budget)
        calls += 1
        evaluations += generated
        restarts += len(unexplored)
        jobs.push(unexplored)
    return SearchStats(n=tree.n, policy=policy, restarts=restarts, calls=calls,
                       evaluations=evaluations, list_sizes=sizes, budgets=budgets)


def simulate_parallel(tree: PreorderTree, budget: int, workers: int,
                      restart_cost=0, policy: str = "lifo",
                      engine: str = "extent") -> SimReport:
    """Discrete-event simulation of W workers sharing the job list.

    Each node evaluation takes one time unit and each job start costs
    restart_cost on top.  An idle worker takes the next job the moment the
    list is nonempty; simultaneous events resolve by ascending worker index.
    idle_time counts worker-units spent waiting on an empty list, including
    workers that never receive a job; speedup compares against the n - 1
    units a single uninterrupted traversal would need.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if restart_cost < 0:
        raise ValueError("restart_cost must be >= 0")
    call = _make_call(tree, engine)
    jobs = JobList(policy)
    jobs.push((0,))
    idle = list(range(workers))
    heapq.heapify(idle)
    busy = []  # (finish time, worker index, nodes to push on completion)
    now = 0  # stays integral for integral restart costs
    started = restarts = evaluations = 0
    while True:
        while len(jobs) and idle:
            w = heapq.heappop(idle)
            s = jobs.pop()
            generated, unexplored = call(s, budget)
            started += 1
            evaluations += generated
            restarts += len(unexplored)
            heapq.heappush(busy, (now + restart_cost + generated, w, unexplored))
        if not busy:
            break
        now = busy[0][0]
        while busy and busy[0][0] == now:
            _, w, unexplored = heapq.heappop(busy)
            jobs.push(unexplored)
            heapq.heappush(idle, w)
    makespan = now
    overhead = restart_cost * started
    idle_time = workers * makespan - evaluations - overhead
    speedup = evaluations / makespan if makespan > 0 else 1.0
    return SimReport(workers=workers, restart_cost=restart_cost, jobs=started,
                     restarts=restarts, evaluations=evaluations, makespan=makespan,
                     idle_time=idle_time, restart_overhead=overhead, speedup=speedup)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def series_export(stats: SearchStats, path=None):
    """Per-call (call, list_size, budget) rows; optionally written as CSV."""
    rows = [(i + 1, size, b)
            for i, (size, b) in enumerate(zip(stats.list_sizes, stats.budgets))]
    if path is not None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["call", "list_size", "budget"])
            writer.writerows(rows)
    return rows


def write_summary_csv(stats: SearchStats, path) -> None:
    """One-row summary: n,b,policy,R,calls,evaluations (b = first call's budget)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "b", "policy", "R", "calls", "evaluations"])
        writer.writerow([stats.n, stats.budgets[0] if stats.budgets else 0,
                         stats.policy, stats.restarts, stats.calls,
                         stats.evaluations])


def write_sim_csv(report: SimReport, path) -> None:
    """One-row simulation summary."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["workers", "restart_cost", "jobs", "makespan",
                         "idle_time", "restart_overhead", "speedup"])
        writer.writerow([report.workers, _fmt(report.restart_cost), report.jobs,
                         _fmt(report.makespan), _fmt(report.idle_time),
                         _fmt(report.restart_overhead), _fmt(report.speedup)])
