#!/usr/bin/env python3
"""How fast do equivalence classes grow?

Samples random alphabets and step sequences, enumerates each class, and
tabulates class size, canonical length, and the compression ratio between the
longest and shortest member, separately for serializable-only alphabets and
for alphabets with interleaving pairs.  Handy for picking tractable bounds
before a brute-force experiment.
"""
from __future__ import annotations

import argparse
import random
import statistics
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from comtrace import canonicalize, enumerate_class, g_canonical
from comtrace.errors import ClassCapExceeded

from conftest import random_alphabet, random_stepseq


def sample(rng, events, allow_inl, max_len, cap):
    """One (size, shortest, longest, least-is-shortest) draw, or None if capped."""
    alph = random_alphabet(rng, events, allow_inl=allow_inl)
    s = random_stepseq(rng, alph, max_len=max_len)
    try:
        cls = enumerate_class(alph, s, cap=cap)
    except ClassCapExceeded:
        return None
    lengths = [len(m) for m in cls.members]
    least = g_canonical(alph, s) if allow_inl else canonicalize(alph, s)
    if not allow_inl:
        # for serializable alphabets the least member is provably shortest
        assert len(least) == min(lengths)
    return len(cls), min(lengths), max(lengths), len(least) == min(lengths)


def report(tag, rows, capped):
    sizes = [r[0] for r in rows]
    ratios = [r[2] / r[1] for r in rows if r[1]]
    shortest = sum(r[3] for r in rows)
    print(f"--- {tag} ({len(rows)} classes, {capped} draws over cap) ---")
    print(f"  class size   mean {statistics.mean(sizes):7.2f}   "
          f"median {statistics.median(sizes):5.1f}   max {max(sizes)}")
    print(f"  len spread   mean longest/shortest {statistics.mean(ratios):.3f}")
    print(f"  least member shortest in {shortest}/{len(rows)} classes")
    hist = Counter(min(s, 50) // 10 * 10 for s in sizes)
    for bucket in sorted(hist):
        label = f"{bucket:3d}-{bucket + 9}" if bucket < 50 else "  50+"
        print(f"  {label:8} {'#' * hist[bucket]}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--events", default="abcd", help="event names to draw from")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--cap", type=int, default=20_000, help="abort classes larger than this")
    ap.add_argument("--seed", type=int, default=2026)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for tag, allow_inl in (("serializable only", False), ("with interleaving", True)):
        rows, capped = [], 0
        while len(rows) < args.samples:
            drawn = sample(rng, args.events, allow_inl, args.max_len, args.cap)
            if drawn is None:
                capped += 1
                continue
            rows.append(drawn)
        report(tag, rows, capped)


if __name__ == "__main__":
    main()
