"""
Walkthrough of the 4-client, 7-packet reference instance.

Shows the fractional optimum (13/3), why its ceiling (5) is the integer
optimum, the iterative-merging run that finds it (including the alpha
restart when seeded below the bound), and the oracle certificate.
"""

from cdex import (EvalContext, Instance, is_feasible, local_recovery,
                  lower_bound, prop1_allocate, solve, verify_optimal)

REF1 = Instance(7, ({1, 3, 4, 6, 7}, {1, 2, 3, 5}, {1, 5, 6}, {3, 5, 6}))


def main():
    ctx = EvalContext()
    print("instance: L=7")
    for j, h in enumerate(REF1.has_sets, start=1):
        print("  client %d holds %s" % (j, sorted(h)))

    res = local_recovery(ctx, REF1, REF1.clients)
    print("\nexhaustive optimum: alpha_frac = %s, alpha_star = %d"
          % (res.alpha_frac, res.alpha_star))
    print("lower bound used by the solver: %d" % lower_bound(ctx, REF1))

    print("\nlocal recovery in {1,2,3}:")
    sub = local_recovery(ctx, REF1, {1, 2, 3})
    print("  alpha_star=%d, minimizer=%s, delta_alpha=%d"
          % (sub.alpha_star, sorted(map(sorted, sub.minimizer_partition)),
             sub.delta_alpha))
    alloc = prop1_allocate(ctx, REF1, {1, 2, 3}, sub, {3})
    print("  allocation with the excess taken from client 3: %s"
          % {min(k): v for k, v in alloc.items()})

    print("\nsolver run seeded below the optimum (alpha0=4):")
    result = solve(REF1, alpha0=4)
    for line in result.trace.lines():
        print("  " + line)
    print("result: alpha=%d rates=%s (gamma=%d)"
          % (result.alpha, result.rates, result.gamma))

    cert = verify_optimal(EvalContext(), REF1, result.rates)
    print("oracle certificate: %s" % cert)
    print("cut check of the known-bad vector (1,2,1,1): %s"
          % (is_feasible(EvalContext(), REF1, (1, 2, 1, 1)),))


if __name__ == "__main__":
    main()
