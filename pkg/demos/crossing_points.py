"""Where the quantumness curves meet the other quantifiers.

The Q_{alpha,1} curves sweep through the constant values of the comparison
quantifiers as alpha varies; this script locates every such intersection by
bisection, plus the one genuine curve-curve crossing (trine vs diagonal,
which swaps order at alpha* ~ 0.33). Optionally draws the per-ensemble
pictures with the curve and the constant levels.
"""

import pathlib

import numpy as np

from gramq import canonical, find_crossings, q_commutator, q_commutator_weighted, q_l1, reference_curve
from gramq.quantifiers import reference_constants

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

results, notes = find_crossings()

print("curve/curve crossing:")
for r in results:
    if r.ensemble == "trine,diag":
        print(f"  trine and diag curves cross at alpha* = {r.alpha_root:.4f}")
        print("  below alpha*: trine above diag; above alpha*: diag above trine")
        a_lo, a_hi = r.alpha_root - 0.1, r.alpha_root + 0.1
        print(f"  check at {a_lo:.2f}: trine - diag = "
              f"{reference_curve('trine', a_lo) - reference_curve('diag', a_lo):+.4f}")
        print(f"  check at {a_hi:.2f}: trine - diag = "
              f"{reference_curve('trine', a_hi) - reference_curve('diag', a_hi):+.4f}")

print("\ncurve/constant intersections (table constants and exact computed ones):")
print(f"{'ensemble':9s} {'constant':20s} {'value':>9s} {'alpha root':>11s}")
for r in results:
    if r.ensemble != "trine,diag":
        print(f"{r.ensemble:9s} {r.rhs:20s} {r.rhs_value:9.4f} {r.alpha_root:11.6f}")
for note in notes:
    print("note:", note)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    constants = {
        name: {
            "Ql1": q_l1(canonical(name)),
            "Qcomm": q_commutator(canonical(name)),
            "Q": q_commutator_weighted(canonical(name)),
            "QHol": reference_constants(name)["QHol"],
            "QFS": reference_constants(name)["QFS_ref"],
            "Qclon'": reference_constants(name)["Qclon_ref"],
        }
        for name in ("b92", "diag", "trine", "bb84", "tetrad", "six")
    }
    alphas = np.linspace(0.05, 2.0, 196)
    fig, axes = plt.subplots(2, 3, figsize=(13, 7), sharex=True)
    for ax, (name, consts) in zip(axes.ravel(), constants.items()):
        ax.plot(alphas, [reference_curve(name, a) for a in alphas], "k-",
                label=r"$Q_{\alpha,1}$")
        for label, value in consts.items():
            ax.axhline(value, lw=0.8, alpha=0.6)
            ax.annotate(label, (2.0, value), fontsize=7, ha="right", va="bottom")
        ax.set_title(name)
        ax.set_xlabel(r"$\alpha$")
    fig.tight_layout()
    fig.savefig(OUT / "crossing_points.png", dpi=150)
    print(f"\nplot saved to {OUT / 'crossing_points.png'}")
except ImportError:
    print("\nmatplotlib not installed; skipped the plot")
