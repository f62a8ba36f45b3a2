"""Run the full verification battery through the CLI and summarize.

Usage: python scripts/run_verifications.py [--fast]
Exit status is nonzero if any check fails.
"""

import sys

from qtoda.cli import main as cli


def main():
    fast = "--fast" in sys.argv
    jobs = []
    for kind, ranks in (("A", (2, 3)), ("C", (2,) if fast else (2, 3))):
        for n in ranks:
            base = ["--type", kind, "--rank", str(n), "--all-words"]
            jobs.append(["verify", "--check", "oracle", *base])
            jobs.append(["verify", "--check", "alpha", *base])
            jobs.append(["verify", "--check", "commute", *base])
            jobs.append(["verify", "--check", "equivalence", *base])
            jobs.append(["verify", "--check", "mutation-equiv", *base])
    jobs.append(["verify", "--check", "rtt", "--rank", "2", "--all-words"])
    worst = 0
    for argv in jobs:
        print("::", " ".join(argv), file=sys.stderr)
        worst = max(worst, cli(argv))
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
