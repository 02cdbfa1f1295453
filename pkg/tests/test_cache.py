import json

import pytest

from davlab.cache import ResultRecord, cache_get, cache_path, cache_put


def test_roundtrip(tmp_path):
    path = tmp_path / "cache.jsonl"
    record = ResultRecord("q[8]", "D", 5, True, witness=["y", "y", "y", "x"],
                          elapsed_ms=12)
    cache_put(path, record)
    got = cache_get(path, "q[8]", "D")
    assert got is not None
    assert (got.descriptor, got.value, got.exact, got.witness, got.elapsed_ms) == \
        ("q[8]", 5, True, ["y", "y", "y", "x"], 12)


def test_get_on_missing_file(tmp_path):
    assert cache_get(tmp_path / "nope.jsonl", "q[8]", "D") is None


def test_get_on_empty_file(tmp_path):
    path = tmp_path / "cache.jsonl"
    path.write_text("")
    assert cache_get(path, "q[8]", "D") is None


def test_later_put_wins(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache_put(path, ResultRecord("q[8]", "D", 4, False))
    cache_put(path, ResultRecord("q[8]", "D", 5, True))
    got = cache_get(path, "q[8]", "D")
    assert got.value == 5 and got.exact


def test_key_includes_weights(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache_put(path, ResultRecord("c[5]", "DA", 3, True, weight_set=[1, 4]))
    cache_put(path, ResultRecord("c[5]", "DA", 5, True, weight_set=[1]))
    assert cache_get(path, "c[5]", "DA", [4, 1]).value == 3
    assert cache_get(path, "c[5]", "DA", [1]).value == 5
    assert cache_get(path, "c[5]", "DA") is None


def test_corrupted_lines_warn_and_skip(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache_put(path, ResultRecord("q[8]", "D", 5, True))
    with open(path, "a", encoding="utf-8") as fh:
        fh.write("{not json\n")
        fh.write(json.dumps({"unexpected": "shape"}) + "\n")
    with pytest.warns(UserWarning, match="corrupted"):
        got = cache_get(path, "q[8]", "D")
    assert got is not None and got.value == 5


def test_version_major_mismatch_skipped(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache_put(path, ResultRecord("q[8]", "D", 99, True, tool_version="9.0.0"))
    assert cache_get(path, "q[8]", "D") is None
    cache_put(path, ResultRecord("q[8]", "D", 5, True))
    assert cache_get(path, "q[8]", "D").value == 5


def test_unknown_invariant_rejected(tmp_path):
    with pytest.raises(ValueError):
        cache_get(tmp_path / "cache.jsonl", "q[8]", "bogus")


def test_cache_path_resolution(tmp_path, monkeypatch):
    monkeypatch.delenv("DAVLAB_CACHE", raising=False)
    assert str(cache_path(None)) == "davlab-cache.jsonl"
    monkeypatch.setenv("DAVLAB_CACHE", str(tmp_path / "env.jsonl"))
    assert cache_path(None) == tmp_path / "env.jsonl"
    assert cache_path(tmp_path / "x.jsonl") == tmp_path / "x.jsonl"


def test_put_unwritable_path(tmp_path):
    with pytest.raises(OSError):
        cache_put(tmp_path / "no" / "dir" / "cache.jsonl",
                  ResultRecord("q[8]", "D", 5, True))
