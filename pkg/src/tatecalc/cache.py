"""On-disk cache of exp and pi^-1 series, enabled by ``TATECALC_CACHE``.

Entries are series JSON files keyed by ring and order.  A loaded entry is
only used if it passes the same invariant check the constructors apply
(``log(exp(z)) = z``, ``pi * pi^-1 = 1``); anything else is recomputed and
rewritten.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from .errors import TatecalcError
from .fgl import FGLContext
from .gradedring import RingDescriptor
from .jsonio import ring_to_json, series_from_json, series_to_json
from .tate import TateModel, default_variable

log = logging.getLogger(__name__)

ENV_VAR = "TATECALC_CACHE"


def cache_dir() -> Path | None:
    root = os.environ.get(ENV_VAR)
    return Path(root) if root else None


def _ring_key(ring: RingDescriptor) -> str:
    form = ring_to_json(ring)
    if isinstance(form, str):
        return form
    blob = json.dumps(form, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _read(path: Path, ring: RingDescriptor):
    try:
        with open(path) as fh:
            return series_from_json(json.load(fh), ring)
    except FileNotFoundError:
        return None
    except (OSError, ValueError, TatecalcError, TypeError, KeyError) as exc:
        log.warning("discarding unreadable cache entry %s: %s", path, exc)
        return None


def _write(path: Path, series) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(series_to_json(series)))
        tmp.replace(path)
    except OSError as exc:
        log.warning("could not write cache entry %s: %s", path, exc)


def load_fgl_context(ring: RingDescriptor, order: int) -> FGLContext:
    root = cache_dir()
    if root is None:
        return FGLContext(ring, order)
    path = root / f"{_ring_key(ring)}-exp-{order}.json"
    ctx = FGLContext(ring, order, exp=_read(path, ring))
    if not ctx.exp_from_cache:
        _write(path, ctx.exp)
    return ctx


def load_tate_model(ring: RingDescriptor, order: int, variable: str | None = None) -> TateModel:
    root = cache_dir()
    if root is None:
        return TateModel(ring, order, variable)
    var = variable or default_variable(ring)
    path = root / f"{_ring_key(ring)}-piinv-{var}-{order}.json"
    model = TateModel(ring, order, var, pi_inverse=_read(path, ring))
    if not model.pi_inverse_from_cache:
        _write(path, model.pi_inverse)
    return model
