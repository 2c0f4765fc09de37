"""
Run Logger Service - append-only JSONL record of CLI runs.

Enabled by setting MPC_RUN_LOG_PATH; entries are buffered and written to
runs_YYYY-MM-DD.jsonl in that directory.
"""

from typing import Any, Dict, List, Optional
from datetime import datetime, timezone
from pathlib import Path
import json
import logging
import uuid

from config import get_settings
from models.run_log import RunAction, RunLogEntry

logger = logging.getLogger(__name__)


class RunLogger:
    """Buffered writer and reader for run records."""

    def __init__(self, log_path: str, buffer_size: int = 10):
        self.log_path = Path(log_path)
        self.log_path.mkdir(parents=True, exist_ok=True)
        self._buffer: List[RunLogEntry] = []
        self._buffer_size = buffer_size

    def log(
        self,
        action: RunAction,
        spec_name: Optional[str] = None,
        spec_hash: Optional[str] = None,
        seed: Optional[int] = None,
        input_data: Optional[Any] = None,
        output_data: Optional[Any] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> str:
        """
        Record a run.

        Args:
            action: what the run did
            spec_name: code spec used, if any
            spec_hash: SHA-256 of the spec text
            seed: RNG seed, for simulations
            input_data: hashed, not stored
            output_data: hashed, not stored
            metadata: small JSON-friendly context

        Returns:
            The entry ID
        """
        entry = RunLogEntry(
            id=f"run-{uuid.uuid4().hex}",
            action=action,
            spec_name=spec_name,
            spec_hash=spec_hash,
            seed=seed,
            input_hash=RunLogEntry.compute_hash(input_data) if input_data is not None else None,
            output_hash=RunLogEntry.compute_hash(output_data) if output_data is not None else None,
            metadata=metadata or {},
        )
        self._buffer.append(entry)
        if len(self._buffer) >= self._buffer_size:
            self.flush()
        logger.debug(f"RUN: {action.value} on {spec_name or '-'}")
        return entry.id

    def flush(self) -> None:
        if not self._buffer:
            return
        date_str = datetime.now(timezone.utc).strftime("%Y-%m-%d")
        log_file = self.log_path / f"runs_{date_str}.jsonl"
        try:
            with open(log_file, "a") as f:
                for entry in self._buffer:
                    f.write(json.dumps(entry.model_dump(), default=str) + "\n")
            self._buffer.clear()
        except OSError as e:
            logger.error(f"Failed to write run log: {e}")

    def query(
        self,
        action: Optional[RunAction] = None,
        spec_name: Optional[str] = None,
        limit: int = 100,
    ) -> List[dict]:
        """Entries on disk, newest file first, filtered by action and spec."""
        results = []
        for log_file in sorted(self.log_path.glob("runs_*.jsonl"), reverse=True):
            with open(log_file) as f:
                for line in f:
                    if not line.strip():
                        continue
                    entry = json.loads(line)
                    if action and entry.get("action") != action.value:
                        continue
                    if spec_name and entry.get("spec_name") != spec_name:
                        continue
                    results.append(entry)
                    if len(results) >= limit:
                        return results
        return results

    def close(self) -> None:
        self.flush()


_run_logger: Optional[RunLogger] = None


def get_run_logger() -> Optional[RunLogger]:
    """The shared logger, or None when MPC_RUN_LOG_PATH is unset."""
    global _run_logger
    path = get_settings().run_log_path
    if path is None:
        return None
    if _run_logger is None or _run_logger.log_path != Path(path):
        _run_logger = RunLogger(path)
    return _run_logger
