"""Machine-readable verification reports and the command-line interface.

`run_verification` runs the entire pipeline on one operator and returns a
schema-validated report with one pass/fail/skip entry per identity; a
failure marks its stage and skips everything downstream. `run_sweep`
verifies every operator on every catalog group up to a chosen order, in
parallel, with deterministic output.

The same functionality is exposed as a console script:

    hopfrb groups-list
    hopfrb enumerate --group S3
    hopfrb verify --group Z6 --op 0,3,0,3,0,3 --json report.json
    hopfrb sweep --max-order 6 --jobs 4 --json sweep.json
"""

from hopfrb import run_sweep, run_verification
from hopfrb.cli import main as cli_main
from hopfrb.groups import catalog, make_cyclic


def main():
    g = make_cyclic(6)
    rep = run_verification(g, (0, 3, 0, 3, 0, 3))
    print(f"verification of the Z6 projector: ok={rep.ok}, "
          f"{len(rep.stages)} identities checked")
    doc = rep.to_json()
    print("first three stage records:")
    for s in doc["stages"][:3]:
        print(f"  {s}")

    print()
    sweep = run_sweep(catalog(), max_order=4, cap=12, jobs=2)
    print("sweep over all catalog groups of order <= 4:")
    print(f"  totals: {sweep['totals']}")

    print()
    print("the same sweep through the CLI entry point:")
    cli_main(["sweep", "--max-order", "4"])


if __name__ == "__main__":
    main()
