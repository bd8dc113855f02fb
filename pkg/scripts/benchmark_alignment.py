#!/usr/bin/env python3
"""Benchmark naive all-pairs property alignment against the cached aligner.

Prints one row per instance size with wall-clock seconds and the number of
embedding calls each strategy issued. The naive strategy re-embeds both
labels of every ordered pair, so its call count is 2*|P|^2; the cached
aligner embeds each distinct label once.
"""

import argparse
import random

from litcompare.alignment import (
    EmbeddingProvider,
    Property,
    align_properties,
    naive_align,
    symmetrize,
    timed,
)


def random_instance(rng, n_properties, vocab_size=40, dim=50):
    vocab = [f"term{i}" for i in range(vocab_size)]
    provider = EmbeddingProvider(
        {w: [rng.gauss(0.0, 1.0) for _ in range(dim)] for w in vocab}
    )
    properties = [
        Property(f"P{i + 1}", " ".join(rng.sample(vocab, rng.randrange(1, 4))))
        for i in range(n_properties)
    ]
    return properties, provider


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 10, 20, 40, 80])
    parser.add_argument("--threshold", type=float, default=0.9)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'|P|':>5} {'naive_s':>10} {'fast_s':>10} {'speedup':>9} {'naive_calls':>12} {'fast_calls':>11}")
    for size in args.sizes:
        properties, provider = random_instance(rng, size)

        provider.embed_calls = 0
        naive_pairs, naive_s = timed(naive_align, properties, args.threshold, provider)
        naive_calls = provider.embed_calls

        provider.embed_calls = 0
        fast_pairs, fast_s = timed(align_properties, properties, args.threshold, provider)
        fast_calls = provider.embed_calls

        assert fast_pairs == symmetrize(naive_pairs), "strategies disagree"
        speedup = naive_s / fast_s if fast_s else float("inf")
        print(f"{size:>5} {naive_s:>10.4f} {fast_s:>10.4f} {speedup:>8.1f}x {naive_calls:>12} {fast_calls:>11}")


if __name__ == "__main__":
    main()
