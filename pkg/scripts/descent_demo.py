"""Run the pattern-search demo with several patterns and objectives.

Shows the final objective for positive-basis patterns next to a
non-spanning pattern that can stall.
"""

from posbasis import VecSet, gen_maximal_basis, gen_minimal_basis, is_positively_spanning, vec
from posbasis.dsdemo import OBJECTIVES, PollState, search

PATTERNS = {
    "maximal (2n)": gen_maximal_basis(2),
    "minimal (n+1)": gen_minimal_basis(2),
    "e1, e2 only": VecSet(2, (vec(1, 0), vec(0, 1))),
}


def main():
    x0 = (1.3, -0.7)
    print(f"x0 = {x0}, step0 = 1, shrink = 1/2, step_min = 1e-6, budget = 2000")
    print(f"{'pattern':<15} {'spanning':>8} {'objective':<18} {'final f':>11} {'evals':>6}")
    for pname, pattern in PATTERNS.items():
        spans = is_positively_spanning(pattern)[0]
        for oname in ("sphere", "shifted-quadratic", "abs-sum"):
            s = search(OBJECTIVES[oname], PollState(x0, 1.0, pattern), 0.5, 1e-6, 2000)
            print(f"{pname:<15} {spans!s:>8} {oname:<18} {s.value:>11.3e} {s.evals:>6}")


if __name__ == "__main__":
    main()
