import json

import pytest

from primelab.checkpoint import (
    Checkpoint,
    read_history,
    read_latest,
    write_checkpoint,
)
from primelab.errors import CheckpointError


def test_round_trip(tmp_path):
    path = str(tmp_path / "cp.jsonl")
    cp = Checkpoint("job@100", 40, {"total": "17", "sum": "1.25"})
    write_checkpoint(path, cp)
    got = read_latest(path)
    assert got == cp
    assert got.payload["sum"] == "1.25"  # strings, not floats


def test_history_appends(tmp_path):
    path = str(tmp_path / "cp.jsonl")
    for done in (10, 20, 30):
        write_checkpoint(path, Checkpoint("job@100", done, {}))
    hist = read_history(path)
    assert [c.range_done for c in hist] == [10, 20, 30]
    assert read_latest(path).range_done == 30


def test_monotone_progress_enforced(tmp_path):
    path = str(tmp_path / "cp.jsonl")
    write_checkpoint(path, Checkpoint("job@100", 50, {}))
    with pytest.raises(CheckpointError):
        write_checkpoint(path, Checkpoint("job@100", 40, {}))


def test_task_mismatch(tmp_path):
    path = str(tmp_path / "cp.jsonl")
    write_checkpoint(path, Checkpoint("job@100", 50, {}))
    with pytest.raises(CheckpointError):
        write_checkpoint(path, Checkpoint("other@100", 60, {}))


def test_missing_file_is_fresh_start(tmp_path):
    assert read_latest(str(tmp_path / "absent.jsonl")) is None
    assert read_history(str(tmp_path / "absent.jsonl")) == []


def test_corrupt_line_raises_and_preserves(tmp_path):
    path = tmp_path / "cp.jsonl"
    path.write_text('{"version": 1, "task_id": "j", "range_done": 5, '
                    '"payload": {}}\nnot json\n')
    with pytest.raises(CheckpointError):
        read_history(str(path))
    # the file was not rewritten or truncated by the failed read
    assert "not json" in path.read_text()


def test_version_mismatch(tmp_path):
    path = tmp_path / "cp.jsonl"
    line = json.dumps({"version": 99, "task_id": "j", "range_done": 5,
                       "payload": {}})
    path.write_text(line + "\n")
    with pytest.raises(CheckpointError):
        read_latest(str(path))


def test_malformed_fields(tmp_path):
    path = tmp_path / "cp.jsonl"
    path.write_text(json.dumps({"version": 1, "task_id": "j"}) + "\n")
    with pytest.raises(CheckpointError):
        read_latest(str(path))
