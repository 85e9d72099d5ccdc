#!/usr/bin/env python3
"""Plot a sweep CSV produced by `vortex_panel converge` on log-log axes."""
import argparse
import sys


def read_sweep(path):
    ns, errs, slope = [], [], None
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if line.startswith("# fitted_slope ="):
                tail = line.split("=", 1)[1].strip()
                slope = float(tail) if tail else None
                continue
            if not line or line.startswith("#") or line.startswith("n,"):
                continue
            cells = line.split(",")
            ns.append(int(cells[0]))
            errs.append(float(cells[1]))
    return ns, errs, slope


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv_path", help="output of: vortex_panel converge --out <csv>")
    ap.add_argument("-o", "--out", default="convergence.png", help="output image")
    args = ap.parse_args()

    ns, errs, slope = read_sweep(args.csv_path)
    if len(ns) < 2:
        sys.exit("need at least two data rows to plot")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is required: pip install matplotlib")

    fig, ax = plt.subplots(figsize=(5.5, 4.2))
    ax.loglog(ns, errs, "o-", label="sup error")
    guide = [errs[0] * (ns[0] / n) ** 2 for n in ns]
    ax.loglog(ns, guide, "--", color="gray", label=r"$N^{-2}$ guide")
    ax.set_xlabel("boundary vortices N")
    ax.set_ylabel("sup error on the evaluation set")
    title = "boundary point-vortex convergence"
    if slope is not None:
        title += f" (fitted slope {slope:.2f})"
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print("wrote", args.out)


if __name__ == "__main__":
    main()
