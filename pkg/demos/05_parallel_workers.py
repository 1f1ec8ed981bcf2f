"""What parallel workers and restart cost do to wall-clock time.

The simulation replays one master/job-list run on W workers: every node
evaluation takes one time unit and every job start costs r extra units.
Restart counts depend only on the tree and the budget, so adding workers
never changes R -- it only overlaps the work.  Two regimes show up: with
few jobs in flight the job list starves and extra workers idle; with many
jobs the speedup approaches min(W, work / critical path).
"""

from gwsearch import gwtree, offspring, scheduler


def main():
    dist = offspring.parse_spec("catalan")
    tree, _ = gwtree.sample_at_least(dist, 20_000, seed=3)
    n = len(tree)
    budget = 500
    serial = scheduler.run_single(tree, budget)
    print(f"tree n = {n}, budget = {budget}: "
          f"{serial.calls} jobs, R = {serial.restarts}")
    print()

    print(f"{'W':>3} {'r':>4} {'makespan':>9} {'idle':>8} {'overhead':>9} "
          f"{'speedup':>8}")
    for workers in (1, 2, 4, 8):
        for cost in (0, 5, 25):
            rep = scheduler.simulate_parallel(tree, budget, workers,
                                              restart_cost=cost)
            print(f"{workers:>3} {cost:>4} {rep.makespan:>9} "
                  f"{rep.idle_time:>8} {rep.restart_overhead:>9} "
                  f"{rep.speedup:>8.3f}")
    print()

    print("a lone oversized budget serializes everything: one job, no restarts,")
    print("and any extra worker just idles for the whole makespan:")
    rep = scheduler.simulate_parallel(tree, n, 4, restart_cost=10)
    print(f"  W=4, b=n: jobs={rep.jobs} makespan={rep.makespan} "
          f"idle={rep.idle_time} speedup={rep.speedup:.3f}")


if __name__ == "__main__":
    main()
