"""Benchmark harness: corpora, timed runs, summaries and plots."""
