"""Readers for the experiment CSV schemas.

Both inputs carry a leading "# ..." schema comment, then a header row. The
aggregate file holds a round column plus a (<policy>_mean_cum_regret,
<policy>_se) pair per policy; the fairness file holds one row per policy
with six bin ratios and the Pareto-optimal selection total.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

MEAN_SUFFIX = "_mean_cum_regret"
SE_SUFFIX = "_se"
FAIRNESS_HEADER = ["policy", "bin1", "bin2", "bin3", "bin4", "bin5", "bin6",
                   "pareto_selections"]


class SchemaError(ValueError):
    """The CSV does not match the expected experiment schema."""


def _data_lines(path: str | Path) -> list[str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise SchemaError(f"{path} holds no rows")
    return lines


def read_aggregate(path: str | Path):
    """Parse an aggregate CSV into (rounds, {policy: {mean, se}})."""
    lines = _data_lines(path)
    header = lines[0].split(",")
    if header[0] != "t":
        raise SchemaError(f"{path}: first column must be 't', got {header[0]!r}")
    policies = [c[: -len(MEAN_SUFFIX)] for c in header if c.endswith(MEAN_SUFFIX)]
    if not policies:
        raise SchemaError(f"{path}: no <policy>{MEAN_SUFFIX} columns found")
    for p in policies:
        if f"{p}{SE_SUFFIX}" not in header:
            raise SchemaError(f"{path}: missing {p}{SE_SUFFIX} column")
    if not lines[1:]:
        raise SchemaError(f"{path}: no data rows")
    try:
        rows = np.asarray([[float(v) for v in ln.split(",")] for ln in lines[1:]])
    except ValueError as exc:
        raise SchemaError(f"{path}: non-numeric cell ({exc})") from exc
    if rows.ndim != 2 or rows.shape[1] != len(header):
        raise SchemaError(f"{path}: ragged rows")
    cols = {name: rows[:, i] for i, name in enumerate(header)}
    series = {p: {"mean": cols[f"{p}{MEAN_SUFFIX}"], "se": cols[f"{p}{SE_SUFFIX}"]}
              for p in policies}
    return cols["t"], series


def read_fairness(path: str | Path):
    """Parse a fairness CSV into [(policy, ratios[6], total)], header order."""
    lines = _data_lines(path)
    if lines[0].split(",") != FAIRNESS_HEADER:
        raise SchemaError(f"{path}: expected header {','.join(FAIRNESS_HEADER)}")
    if not lines[1:]:
        raise SchemaError(f"{path}: no data rows")
    out = []
    for ln in lines[1:]:
        cols = ln.split(",")
        if len(cols) != len(FAIRNESS_HEADER):
            raise SchemaError(f"{path}: ragged row {ln!r}")
        try:
            ratios = np.asarray([float(v) for v in cols[1:7]])
            total = int(cols[7])
        except ValueError as exc:
            raise SchemaError(f"{path}: non-numeric cell ({exc})") from exc
        out.append((cols[0], ratios, total))
    return out
