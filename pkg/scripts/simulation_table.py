"""Summary statistics of C3/C5 for uniformly drawn response points.

Prints both samplers side by side so the flat-Dirichlet result can be
compared with the naive normalized-uniform draw.

    python3 scripts/simulation_table.py --n 10000 --seeds 42 0 1
"""
import argparse

from likert_consensus.simplex_mc import SAMPLERS, SimulationConfig, simulate_consensus, summary_stats

COLUMNS = ("mean", "std_dev", "min", "max", "range", "iqr")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--seeds", type=int, nargs="+", default=[42])
    args = ap.parse_args()
    print(f"{'sampler':20}{'seed':>6}{'':4}" + "".join(f"{c:>10}" for c in COLUMNS))
    for sampler in SAMPLERS:
        for seed in args.seeds:
            for k in (3, 5):
                s = summary_stats(simulate_consensus(SimulationConfig(k, args.n, seed, sampler))).as_dict()
                print(f"{sampler:20}{seed:>6}  C{k}" + "".join(f"{s[c]:10.3f}" for c in COLUMNS))


if __name__ == "__main__":
    main()
