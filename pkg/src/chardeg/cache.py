"""On-disk cache of computed spectra.

One JSON file per (group, n), keyed by schema version.  Entries whose
schema does not match, that fail to parse, or that violate the spectrum
mass invariant are silently recomputed; the cache can speed things up but
must never change a result.  Writes go through a temp file and an atomic
rename.
"""

from __future__ import annotations

import json
import os
import time
from pathlib import Path

from . import __version__
from .serialize import SCHEMA_VERSION, spectrum_from_doc, spectrum_to_doc
from .spectrum import DegreeSpectrum


def cache_path(cache_dir: str | Path, group: str, n: int) -> Path:
    return Path(cache_dir) / f"{group.lower()}{n:03d}.json"


def load_spectrum(cache_dir: str | Path, group: str, n: int) -> DegreeSpectrum | None:
    path = cache_path(cache_dir, group, n)
    try:
        with open(path, encoding="utf-8") as fh:
            entry = json.load(fh)
        if entry.get("schema") != SCHEMA_VERSION:
            return None
        spec = spectrum_from_doc(entry["spectrum"])
        if spec.group != group.upper() or spec.n != n:
            return None
        return spec
    except (OSError, ValueError, KeyError, TypeError):
        return None


def store_spectrum(cache_dir: str | Path, spec: DegreeSpectrum) -> Path:
    directory = Path(cache_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = cache_path(directory, spec.group, spec.n)
    entry = {
        "schema": SCHEMA_VERSION,
        "producer": f"chardeg {__version__}",
        "created": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "spectrum": spectrum_to_doc(spec),
    }
    tmp = path.with_name(path.name + f".tmp{os.getpid()}")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(entry, fh, indent=2)
        fh.write("\n")
    os.replace(tmp, path)
    return path
