"""Print certified sizes of PLI families against the positive-basis ceiling 2n.

    python scripts/cardinality_table.py [--max-n 8] [--lift 10,50,100]
"""

import argparse
import time
from math import comb

from posbasis import gen_binomial, gen_circle_lift, gen_maximal_basis, gen_minimal_basis
from posbasis import is_pli, is_positive_basis


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--lift", default="10,50,100")
    args = ap.parse_args()

    print(f"{'n':>3} {'n+1':>4} {'2n':>4} {'min ok':>7} {'max ok':>7} {'C(n,n//2)':>10} {'PLI':>5} {'secs':>6}")
    for n in range(2, args.max_n + 1):
        t = time.perf_counter()
        lo = is_positive_basis(gen_minimal_basis(n))[0]
        hi = is_positive_basis(gen_maximal_basis(n))[0]
        vs = gen_binomial(n)
        pli = is_pli(vs)[0]
        secs = time.perf_counter() - t
        assert len(vs) == comb(n, n // 2)
        print(f"{n:>3} {n + 1:>4} {2 * n:>4} {lo!s:>7} {hi!s:>7} {len(vs):>10} {pli!s:>5} {secs:>6.2f}")

    print()
    print(f"{'m':>5} {'dim':>4} {'PLI':>5} {'secs':>6}")
    for m in (int(x) for x in args.lift.split(",")):
        t = time.perf_counter()
        ok = is_pli(gen_circle_lift(m, 3))[0]
        print(f"{m:>5} {3:>4} {ok!s:>5} {time.perf_counter() - t:>6.2f}")


if __name__ == "__main__":
    main()
