"""Scheme files (versioned JSON) and sweep curve files (CSV)."""

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import ValidationError
from .fixtures import FIXTURE_TOL
from .metrics import SqueezeGridPoint
from .sharing import SharingScheme
from .symplectic import DEFAULT_TOL, PassiveInterferometer

PathLike = Union[str, Path]

SCHEME_FORMAT = "cvqss-scheme"
SCHEME_VERSION = 1
CURVE_HEADER = ["db", "r", "party", "nu_max", "fidelity", "class"]


def _check_suffix(filename: Path, suffix: str) -> None:
    if filename.suffix != suffix:
        raise ValidationError(f"Unknown file format {filename.suffix}")


def scheme_to_json(
    scheme: SharingScheme,
    provenance: Optional[Dict[str, Any]] = None,
    tolerance: float = DEFAULT_TOL,
) -> str:
    """Serialize a scheme; floats use the shortest repr that round-trips exactly."""
    record = {
        "format": SCHEME_FORMAT,
        "version": SCHEME_VERSION,
        "n": scheme.n,
        "m": scheme.m,
        "tolerance": float(tolerance),
        "X": [float(v) for v in scheme.interferometer.X.reshape(-1)],
        "Y": [float(v) for v in scheme.interferometer.Y.reshape(-1)],
        "provenance": provenance or {},
    }
    return json.dumps(record, indent=2) + "\n"


def scheme_from_json(text: str) -> Tuple[SharingScheme, Dict[str, Any]]:
    """Parse and validate a scheme; returns it with the full record."""
    try:
        record = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"Scheme file is not valid JSON: {err}")
    if not isinstance(record, dict) or record.get("format") != SCHEME_FORMAT:
        raise ValidationError("Not a cvqss scheme file")
    if record.get("version") != SCHEME_VERSION:
        raise ValidationError(f"Unsupported scheme file version {record.get('version')}")
    try:
        n, m = int(record["n"]), int(record["m"])
        n_tot = n + m
        X = np.asarray(record["X"], dtype=np.float64)
        Y = np.asarray(record["Y"], dtype=np.float64)
        tolerance = float(record.get("tolerance", DEFAULT_TOL))
    except (KeyError, TypeError, ValueError) as err:
        raise ValidationError(f"Malformed scheme file: {err}")
    if not (np.isfinite(tolerance) and 0 < tolerance <= FIXTURE_TOL):
        raise ValidationError(f"Scheme tolerance must lie in (0, {FIXTURE_TOL:g}], got {tolerance}")
    if X.shape != (n_tot * n_tot,) or Y.shape != (n_tot * n_tot,):
        raise ValidationError(f"X and Y must hold {n_tot * n_tot} entries each")
    interferometer = PassiveInterferometer(
        X.reshape(n_tot, n_tot), Y.reshape(n_tot, n_tot), tol=tolerance
    )
    return SharingScheme(n, m, interferometer), record


def write_scheme(
    filename: PathLike,
    scheme: SharingScheme,
    provenance: Optional[Dict[str, Any]] = None,
    tolerance: float = DEFAULT_TOL,
) -> None:
    filename = Path(filename)
    _check_suffix(filename, ".json")
    filename.write_text(scheme_to_json(scheme, provenance, tolerance))


def read_scheme(filename: PathLike) -> Tuple[SharingScheme, Dict[str, Any]]:
    filename = Path(filename)
    _check_suffix(filename, ".json")
    try:
        text = filename.read_text(encoding="utf-8")
    except UnicodeDecodeError as err:
        raise ValidationError(f"Scheme file is not UTF-8 text: {err}")
    return scheme_from_json(text)


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def curve_rows(points: Sequence[SqueezeGridPoint]) -> List[List[str]]:
    """One row per (grid point, party), ordered by db then party label."""
    rows = []
    for point in sorted(points, key=lambda point: point.db):
        for quality in sorted(point.parties, key=lambda quality: quality.party.label):
            rows.append(
                [
                    _fmt(point.db),
                    _fmt(point.r),
                    quality.party.label,
                    _fmt(quality.nu_max),
                    _fmt(quality.fidelity),
                    quality.channel_class.value,
                ]
            )
    return rows


def curves_to_csv(points: Sequence[SqueezeGridPoint]) -> str:
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CURVE_HEADER)
    writer.writerows(curve_rows(points))
    return stream.getvalue()


def write_curves(filename: PathLike, points: Sequence[SqueezeGridPoint]) -> None:
    filename = Path(filename)
    _check_suffix(filename, ".csv")
    filename.write_text(curves_to_csv(points))
