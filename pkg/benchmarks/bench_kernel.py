"""Time the compiled and pure-Python oracle kernels on the same scopes.

    python benchmarks/bench_kernel.py
    python benchmarks/bench_kernel.py --scope 10,3,4 --repeat 3
"""
import argparse
import time

from anomcancel import kernel

DEFAULT_SCOPES = ["6,3,3", "10,2,3", "10,3,3", "16,2,3"]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--scope", action="append", help="base,num_digits,den_digits (repeatable)")
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    impls = ["python"] + (["cython"] if kernel.compiled_available() else [])
    print(f"{'scope':>10} {'pairs':>10} {'hits':>7} " + " ".join(f"{i + ' s':>10}" for i in impls) + "   speedup")
    for spec in args.scope or DEFAULT_SCOPES:
        b, d1, d2 = map(int, spec.split(","))
        lo, hi = b ** (d1 - 1), b**d1
        times, results = {}, {}
        for impl in impls:
            times[impl], results[impl] = best_of(lambda: kernel.scan(b, d1, d2, lo, hi, force=impl), args.repeat)
        hits, pairs = results["python"]
        if "cython" in results and sorted(results["cython"][0]) != sorted(hits):
            raise SystemExit(f"kernels disagree on scope {spec}")
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else "        -"
        print(f"{spec:>10} {pairs:>10} {len(hits):>7} " + " ".join(f"{times[i]:10.4f}" for i in impls) + "  " + speed)


if __name__ == "__main__":
    main()
