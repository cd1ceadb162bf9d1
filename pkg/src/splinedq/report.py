"""Reference constants from the published result tables and comparison logic.

Unit note, established empirically and load-bearing for every comparison here:
the tables' "maximum error" column actually prints the interior sum of squared
errors (SSE) and the "average error" column the interior mean squared error
(MSE).  Our faithful reruns match those columns at the 1.0-2.5x level across
three independent tables, while no true max-abs reading comes within a factor
of 40.  ErrorReport carries both the true norms (linf, l2) and the table-unit
statistics (sse, mse); comparisons against reference rows use the latter.
"""

import csv
import hashlib
from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceRow:
    table: str          # table id, e.g. "T1-a0.05"
    method: str         # "trig" | "exp" | "ext" | baseline scheme name
    key: str            # row key within the table (N or h as printed)
    max_err: float | None       # table-units max-error column (SSE)
    avg_err: float | None = None  # table-units average-error column (MSE)
    roc: float | None = None


_ROWS = [
    # Convergence of the pulse benchmark, domain [1,2]^2, beta=0.8, dt=h^2.
    ReferenceRow("T1-a0.05", "trig", "5", 4.93e-4),
    ReferenceRow("T1-a0.05", "trig", "10", 4.86e-5, roc=3.34),
    ReferenceRow("T1-a0.05", "trig", "20", 4.70e-6, roc=3.37),
    ReferenceRow("T1-a0.05", "trig", "40", 4.51e-7, roc=3.38),
    ReferenceRow("T1-a0.05", "trig", "80", 4.58e-8, roc=3.30),
    ReferenceRow("T1-a0.005", "trig", "5", 2.91e-3),
    ReferenceRow("T1-a0.005", "trig", "10", 6.41e-4, roc=2.18),
    ReferenceRow("T1-a0.005", "trig", "20", 6.50e-5, roc=3.30),
    ReferenceRow("T1-a0.005", "trig", "40", 7.19e-6, roc=3.18),
    ReferenceRow("T1-a0.005", "trig", "80", 7.22e-7, roc=3.31),
    # Pulse benchmark on [0,2]^2, alpha=0.01, beta=0.8, h=0.025, dt=0.00625, t=1.25.
    ReferenceRow("T2", "trig", "h0.025", 4.327e-8, avg_err=8.026e-12),
    ReferenceRow("T2", "exp", "h0.025", 4.154e-8, avg_err=7.030e-12),
    ReferenceRow("T2", "ext", "h0.025", 3.343e-8, avg_err=4.504e-12),
    ReferenceRow("T2", "ext0", "h0.025", 4.388e-8, avg_err=8.269e-12),
    ReferenceRow("T2", "fd4-baseline", "h0.025", 2.477e-4, avg_err=9.431e-6),
    # Exponential-profile benchmark with Neumann edges, alpha=0.1, beta=1.
    ReferenceRow("T7-a0.1-b1", "trig", "h0.05", 1.4931e-5, avg_err=5.8044e-8),
    ReferenceRow("T7-a0.1-b1", "trig", "h0.025", 3.3009e-6, avg_err=1.0664e-8, roc=2.2),
    ReferenceRow("T7-a0.1-b1", "trig", "h0.0125", 4.5947e-7, avg_err=8.0780e-10, roc=2.8),
]

_DIGEST = "fd9ba25ca549cf83a8e44caca59cc6597aa27893af9d98bba92a3e0b4ce3bcd2"


def _canonical(rows) -> str:
    return "\n".join(
        f"{r.table}|{r.method}|{r.key}|{r.max_err!r}|{r.avg_err!r}|{r.roc!r}"
        for r in rows)


def reference_table():
    """The embedded rows, digest-checked so silent edits fail fast."""
    digest = hashlib.sha256(_canonical(_ROWS).encode()).hexdigest()
    if digest != _DIGEST:
        raise RuntimeError(
            f"reference table digest mismatch: {digest} (constants were altered)")
    return list(_ROWS)


def find_row(table: str, method: str, key: str):
    for r in reference_table():
        if (r.table, r.method, r.key) == (table, method, key):
            return r
    return None


@dataclass(frozen=True)
class RowComparison:
    table: str
    method: str
    key: str
    quantity: str       # "max_err" | "avg_err" | "roc"
    measured: float
    reference: float
    passed: bool


def compare_to_reference(measured_max: float | None, row: ReferenceRow,
                         measured_avg: float | None = None,
                         measured_roc: float | None = None,
                         err_factor: float = 3.0, roc_band: float = 0.5):
    """Per-quantity pass/fail against one reference row.

    Absolute-error entries pass within a factor ``err_factor`` either way
    (the tables carry 3-4 significant digits from an unspecified environment);
    convergence orders pass within ``+- roc_band``.
    """
    out = []
    if row.max_err is not None and measured_max is not None:
        ratio = measured_max / row.max_err
        out.append(RowComparison(row.table, row.method, row.key, "max_err",
                                 measured_max, row.max_err,
                                 1.0 / err_factor <= ratio <= err_factor))
    if row.avg_err is not None and measured_avg is not None:
        ratio = measured_avg / row.avg_err
        out.append(RowComparison(row.table, row.method, row.key, "avg_err",
                                 measured_avg, row.avg_err,
                                 1.0 / err_factor <= ratio <= err_factor))
    if row.roc is not None and measured_roc is not None:
        out.append(RowComparison(row.table, row.method, row.key, "roc",
                                 measured_roc, row.roc,
                                 abs(measured_roc - row.roc) <= roc_band))
    return out


def write_diff_markdown(comparisons, path: str) -> None:
    with open(path, "w") as f:
        f.write("| table | method | key | quantity | measured | reference | verdict |\n")
        f.write("|---|---|---|---|---|---|---|\n")
        for c in comparisons:
            f.write(f"| {c.table} | {c.method} | {c.key} | {c.quantity} "
                    f"| {c.measured:.6g} | {c.reference:.6g} "
                    f"| {'pass' if c.passed else 'FAIL'} |\n")


def write_diff_csv(comparisons, path: str) -> None:
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["table", "method", "key", "quantity", "measured",
                    "reference", "verdict"])
        for c in comparisons:
            w.writerow([c.table, c.method, c.key, c.quantity,
                        f"{c.measured:.6g}", f"{c.reference:.6g}",
                        "pass" if c.passed else "FAIL"])
