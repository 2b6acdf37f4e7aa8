import math
import random

import pytest

import palfm

INF = math.inf
FIXTURE = "abbabbcbc"


def test_encodings():
    assert palfm.lpal("babbbabb") == [1, 1, 3, 2, 3, 5, 7, 5]
    assert palfm.ssp("abbbabb") == [INF, INF, 2, 2, 5, 3, 2]
    assert palfm.sspg("babbbabb") == [INF, INF, 2, 1, 1, 2, 2, 1]
    assert palfm.group_counts("babbbabb") == [1, 2, 2, 2, 2, 2, 2, 2]
    assert palfm.pi(FIXTURE) == 2
    assert palfm.ssp("") == []


def test_fixture_columns():
    idx = palfm.PalFmIndex.build(FIXTURE, delta=1)
    rows = range(1, idx.rows + 1)
    assert [idx.sa_access(r) for r in rows] == [10, 9, 2, 5, 8, 1, 4, 7, 3, 6]
    assert [idx.f(r) for r in rows] == [0, INF, 1, 1, INF, 2, INF, 2, 2, 2]
    assert [idx.l(r) for r in rows] == [INF, INF, 2, INF, 2, 0, 2, 2, 1, 1]
    assert [idx.lf(r) for r in rows] == [2, 5, 6, 7, 8, 1, 9, 10, 3, 4]
    assert idx.max_group == 2


def test_queries():
    idx = palfm.PalFmIndex.build(FIXTURE, delta=3)
    assert idx.count("bb") == 2
    assert idx.locate("aba") == [3, 6, 7]
    assert idx.locate(b"cdc") == [3, 6, 7]
    assert idx.locate("xyz") == []
    assert idx.count("abcdefghijk") == 0
    with pytest.raises(ValueError):
        idx.count("")


def test_against_naive_search():
    rng = random.Random(3)
    for _ in range(50):
        text = "".join(rng.choice("abc") for _ in range(rng.randint(1, 60)))
        idx = palfm.PalFmIndex.build(text, delta=rng.randint(1, len(text)))
        pattern = "".join(rng.choice("abc") for _ in range(rng.randint(1, 6)))
        assert idx.locate(pattern) == palfm.naive_search(text, pattern)


def test_serialization(tmp_path):
    idx = palfm.PalFmIndex.build(FIXTURE, delta=2)
    image = idx.serialize()
    assert image[:8] == b"PALFMIX1"
    assert palfm.PalFmIndex.deserialize(image).serialize() == image

    path = tmp_path / "fixture.idx"
    idx.save(path)
    assert palfm.PalFmIndex.load(path).locate("bb") == [2, 5]

    broken = bytearray(image)
    broken[50] ^= 0xFF
    with pytest.raises(palfm.FormatError) as err:
        palfm.PalFmIndex.deserialize(bytes(broken))
    assert err.value.kind == "checksum mismatch"
    with pytest.raises(OSError):
        palfm.PalFmIndex.load(tmp_path / "missing.idx")


def test_verify_and_stats():
    idx = palfm.PalFmIndex.build(FIXTURE, delta=2)
    report = idx.verify(FIXTURE)
    assert report["ok"] and not report["violations"]
    bad = idx.verify("abbabbcbb")
    assert not bad["ok"]
    assert "definitional-lf" in {check for check, _ in bad["violations"]}
    stats = idx.stats()
    assert stats["n"] == 9 and stats["samples"] == 5


def test_build_errors():
    with pytest.raises(ValueError):
        palfm.PalFmIndex.build(FIXTURE, delta=0)
    with pytest.raises(IndexError):
        palfm.PalFmIndex.build(FIXTURE).sa_access(11)
