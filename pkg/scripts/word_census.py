"""Enumerate canonical double Coxeter words and time the census.

Usage: python scripts/word_census.py [max_rank]
"""

import sys
import time

from qtoda.words import enumerate_double_coxeter, quiver_vector_of


def main():
    max_rank = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    for n in range(1, max_rank + 1):
        t0 = time.time()
        words = enumerate_double_coxeter(n)
        dt = time.time() - t0
        print(f"rank {n}: {len(words)} words in {dt * 1000:.1f} ms")
        if n <= 3:
            for w in words:
                print(f"  {list(w.letters)}  Q={list(quiver_vector_of(w))}")


if __name__ == "__main__":
    main()
