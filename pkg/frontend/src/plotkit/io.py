"""Readers for the experiment-harness CSV contracts.

matrix.csv:        defender,attacker,mean_fraction,std,runs
best_response.csv: defender,mean_fraction,std,ci95,runs

Errors always name the offending row so broken files are easy to fix.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

MATRIX_HEADER = ["defender", "attacker", "mean_fraction", "std", "runs"]
BARS_HEADER = ["defender", "mean_fraction", "std", "ci95", "runs"]


class ContractError(ValueError):
    """CSV input that does not match the harness contract."""


@dataclass
class MatrixData:
    defenders: list[str]      # row order as first seen in the file
    attackers: list[str]      # column order as first seen in the file
    values: dict[tuple[str, str], float]


@dataclass
class BarRow:
    defender: str
    mean: float
    ci95: float


def _read_rows(path: str, header: list[str]) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        rows = list(reader)
    if not rows:
        raise ContractError(f"{path}: empty file")
    if rows[0] != header:
        raise ContractError(
            f"{path} row 1: header must be {','.join(header)!r}, got {','.join(rows[0])!r}"
        )
    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ContractError(
                f"{path} row {lineno}: expected {len(header)} columns, got {len(row)}"
            )
        out.append(dict(zip(header, row)))
    if not out:
        raise ContractError(f"{path}: no data rows")
    return out


def _float(path: str, lineno: int, field: str, raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ContractError(
            f"{path} row {lineno}: {field} is not a number ({raw!r})"
        ) from None
    return value


def read_matrix(path: str) -> MatrixData:
    rows = _read_rows(path, MATRIX_HEADER)
    defenders: list[str] = []
    attackers: list[str] = []
    values: dict[tuple[str, str], float] = {}
    for lineno, row in enumerate(rows, start=2):
        d, a = row["defender"], row["attacker"]
        if d not in defenders:
            defenders.append(d)
        if a not in attackers:
            attackers.append(a)
        key = (d, a)
        if key in values:
            raise ContractError(f"{path} row {lineno}: duplicate cell {key}")
        values[key] = _float(path, lineno, "mean_fraction", row["mean_fraction"])
    for d in defenders:
        for a in attackers:
            if (d, a) not in values:
                raise ContractError(f"{path}: missing cell for ({d}, {a})")
    return MatrixData(defenders, attackers, values)


def read_bars(path: str) -> list[BarRow]:
    rows = _read_rows(path, BARS_HEADER)
    out = []
    for lineno, row in enumerate(rows, start=2):
        out.append(
            BarRow(
                defender=row["defender"],
                mean=_float(path, lineno, "mean_fraction", row["mean_fraction"]),
                ci95=_float(path, lineno, "ci95", row["ci95"]),
            )
        )
    return out
