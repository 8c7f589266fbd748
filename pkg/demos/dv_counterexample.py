"""
Why the divide-and-conquer (fractional) solver cannot be patched for the
no-packet-splitting problem.

On the reference instance the fractional optimum is 13/3 with rates
(7/3, 4/3, 1/3, 1/3).  Rounding the sum up to 5 and rebuilding the rates over
the fractional maximizer gives (3, 2, 1, 1) — feasible but with sum 7 > 5 —
and trimming it back to sum 5, e.g. (1, 2, 1, 1), breaks a cut.  The integer
optimum needs its own search.
"""

from cdex import EvalContext, Instance, dv_solve, is_feasible, solve

REF1 = Instance(7, ({1, 3, 4, 6, 7}, {1, 2, 3, 5}, {1, 5, 6}, {3, 5, 6}))
REF2 = Instance(8, ({3, 4, 6, 7, 8}, {1, 4, 7, 8}, {3, 4, 5, 6, 7, 8}, {1, 2, 6}))


def main():
    res = dv_solve(REF1)
    print("fractional solve: rates=%s sum=%s integral=%s"
          % ([str(r) for r in res.rates], res.alpha_frac, res.integral))

    print("\nrebuilding integer rates at alpha=5 over the fractional maximizer:")
    ctx = EvalContext()
    rebuilt = tuple(5 - 7 + len(h) for h in REF1.has_sets)
    print("  (3,2,1,1) expected: %s, sum=%d (> 5: overshoots the optimum)"
          % (rebuilt, sum(rebuilt)))
    print("  feasibility: %s" % is_feasible(ctx, REF1, rebuilt).feasible)
    print("  dropping two transmissions, e.g. (1,2,1,1): %s"
          % (is_feasible(ctx, REF1, (1, 2, 1, 1)),))

    best = solve(REF1)
    print("\ninteger solver finds alpha=%d rates=%s" % (best.alpha, best.rates))

    print("\non a second instance the fractional answer happens to be integral:")
    res = dv_solve(REF2, excess_rule="prefer-singletons")
    print("  rates=%s integral=%s" % ([str(r) for r in res.rates], res.integral))
    print("  call tree:")

    def walk(call, depth=1):
        print("  " * depth + "mac(%s): alpha=%s budget=%s delta_r=%s"
              % (sorted(call.members), call.alpha_frac, call.budget, call.delta_r))
        for child in call.children:
            walk(child, depth + 1)

    walk(res.call_tree)


if __name__ == "__main__":
    main()
