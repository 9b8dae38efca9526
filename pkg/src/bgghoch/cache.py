"""Persistent cache of cohomology records.

Layout: ``<root>/<namespace>/<type>/J<block>/j<j>_k<k>/<name>.json``.  The
namespace hashes the engine conventions, so changing the root order, the
structure-constant convention or the sign seed starts a fresh cache.  Every
file carries a checksum of its payload; writes go through a temporary file
and ``os.replace``.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from . import __version__
from .cohomology import CohomologyRecord

log = logging.getLogger(__name__)

ENV_VAR = "BGGHOCH_CACHE_DIR"

CONVENTIONS = {
    "engine": __version__,
    "root_order": "height, then reverse lexicographic",
    "structure_constants": "extraspecial N = -(p+1)",
    "parabolic": "negative Borel, V on psi-image keys",
}


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "bgghoch"


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def checksum(obj) -> str:
    return hashlib.sha256(_canonical(obj).encode()).hexdigest()


def atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class RecordCache:
    def __init__(self, root=None, seed=None):
        self.root = Path(root) if root is not None else default_cache_dir()
        conv = dict(CONVENTIONS, sign_seed=seed)
        self.namespace = checksum(conv)[:16]
        self.hits = 0
        self.misses = 0
        self.discarded = 0

    def _dir(self, blk, j, k) -> Path:
        J = "".join(map(str, blk.J)) or "0"
        return self.root / self.namespace / blk.rs.name / f"J{J}" / f"j{j}_k{k}"

    def _path(self, blk, j, k, name) -> Path:
        return self._dir(blk, j, k) / f"{name}.json"

    def _key(self, blk, j, k, extra):
        return {"type": blk.rs.name, "block": list(blk.J), "j": j, "k": k, "engine": __version__, **extra}

    def _read(self, path: Path, key):
        if not path.exists():
            self.misses += 1
            return None
        try:
            data = json.loads(path.read_text())
            if data["checksum"] != checksum(data["value"]) or data["key"] != key:
                raise ValueError("checksum or key mismatch")
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("discarding corrupt cache entry %s (%s)", path, exc)
            self.discarded += 1
            self.misses += 1
            try:
                path.unlink()
            except OSError:
                pass
            return None
        self.hits += 1
        return data["value"]

    def _write(self, path: Path, key, value) -> None:
        atomic_write_text(path, _canonical({"key": key, "value": value, "checksum": checksum(value)}))

    @staticmethod
    def _lam_name(lam, method):
        return "lam_" + "_".join(map(str, lam)) + f"_{method}"

    def get(self, blk, j, k, lam, method) -> CohomologyRecord | None:
        key = self._key(blk, j, k, {"lambda": list(lam), "method": method})
        value = self._read(self._path(blk, j, k, self._lam_name(lam, method)), key)
        return CohomologyRecord.from_json(value) if value is not None else None

    def put(self, blk, j, k, lam, method, rec: CohomologyRecord) -> None:
        key = self._key(blk, j, k, {"lambda": list(lam), "method": method})
        self._write(self._path(blk, j, k, self._lam_name(lam, method)), key, rec.to_json())

    def get_spectrum(self, blk, j, k):
        key = self._key(blk, j, k, {"what": "spectrum"})
        value = self._read(self._path(blk, j, k, "spectrum"), key)
        return [tuple(w) for w in value] if value is not None else None

    def put_spectrum(self, blk, j, k, spectrum) -> None:
        key = self._key(blk, j, k, {"what": "spectrum"})
        self._write(self._path(blk, j, k, "spectrum"), key, [list(w) for w in spectrum])
