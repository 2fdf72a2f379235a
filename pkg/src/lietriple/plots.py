"""Report figures rendered next to the trajectory data files."""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["render_trajectory_figures"]

plt.rcParams.update(
    {
        "figure.figsize": (8.0, 5.0),
        "font.size": 9,
        "axes.grid": True,
        "grid.alpha": 0.3,
        "lines.linewidth": 1.0,
    }
)


def _relative_drift(values):
    ref = values[0]
    scale = abs(ref) if abs(ref) > 0.0 else 1.0
    return np.abs(values - ref) / scale


def render_trajectory_figures(record, data_path):
    """Render component and invariant figures alongside a trajectory file.

    For a trajectory written to ``run.csv`` this produces
    ``run_components.png`` and ``run_invariants.png`` in the same
    directory and returns the figure paths.
    """
    data_path = Path(data_path)
    stem = data_path.with_suffix("")
    t = record.t
    n = record.A.shape[1]
    written = []

    fig, (ax_a, ax_x) = plt.subplots(2, 1, sharex=True)
    for i in range(n):
        ax_a.plot(t, record.A[:, i], label=f"A_{i + 1}")
        ax_x.plot(t, record.X[:, i], label=f"X_{i + 1}")
    ax_a.set_ylabel("momentum")
    ax_x.set_ylabel("velocity")
    ax_x.set_xlabel("t [s]")
    ax_a.legend(loc="upper right", ncol=min(n, 3))
    ax_x.legend(loc="upper right", ncol=min(n, 3))
    fig.suptitle("body-frame trajectory")
    fig.tight_layout()
    components = Path(f"{stem}_components.png")
    fig.savefig(components, dpi=150)
    plt.close(fig)
    written.append(components)

    panels = 3 if record.has_attitude else 2
    fig, axes = plt.subplots(panels, 1, sharex=True)
    axes[0].semilogy(t, np.maximum(_relative_drift(record.energy), 1e-18))
    axes[0].set_ylabel("|dE|/|E0|")
    axes[1].semilogy(t, np.maximum(_relative_drift(record.casimir), 1e-18))
    axes[1].set_ylabel("|dC|/|C0|")
    if record.has_attitude:
        spatial = np.einsum("kij,kj->ki", record.g, record.A)
        for i in range(spatial.shape[1]):
            axes[2].plot(t, spatial[:, i] - spatial[0, i], label=f"pi_{i + 1}")
        axes[2].set_ylabel("spatial momentum shift")
        axes[2].legend(loc="upper right", ncol=3)
    axes[-1].set_xlabel("t [s]")
    fig.suptitle("conserved quantities")
    fig.tight_layout()
    invariants = Path(f"{stem}_invariants.png")
    fig.savefig(invariants, dpi=150)
    plt.close(fig)
    written.append(invariants)

    return written
