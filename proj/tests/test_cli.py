"""End-to-end checks of the palfm command-line tool.

The binary comes from $PALFM_CLI (set by ctest) or build/tools/palfm.
"""

import os
import pathlib
import random
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
CLI = os.environ.get("PALFM_CLI", str(ROOT / "build" / "tools" / "palfm"))

FIXTURE = b"abbabbcbc"


def run(*args, check=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True)
    if check is not None:
        assert proc.returncode == check, proc.stderr.decode()
    return proc


@pytest.fixture
def fixture_index(tmp_path):
    text = tmp_path / "fixture.txt"
    text.write_bytes(FIXTURE)
    index = tmp_path / "fixture.idx"
    run("build", text, index, "--delta", 2, check=0)
    return text, index


def test_build_reports_header(fixture_index, tmp_path):
    text, _ = fixture_index
    out = run("build", text, tmp_path / "again.idx", "--delta", 2, "--format", "tsv", check=0).stdout.decode()
    fields = dict(line.split("\t") for line in out.splitlines())
    assert fields["n"] == "9"
    assert fields["K"] == "2"
    assert float(fields["build_seconds"]) >= 0
    assert float(fields["bits_per_symbol"]) > 0


def test_image_header(fixture_index):
    _, index = fixture_index
    image = index.read_bytes()
    assert image[:8] == b"PALFMIX1"
    assert int.from_bytes(image[16:24], "little") == 9
    assert int.from_bytes(image[24:32], "little") == 2
    assert int.from_bytes(image[32:36], "little") == 2


def test_count_and_locate(fixture_index, tmp_path):
    _, index = fixture_index
    assert run("count", index, "bb", check=0).stdout == b"2\n"
    assert run("locate", index, "aba", check=0).stdout == b"3\n6\n7\n"
    assert run("count", index, "abcdefghijkl", check=0).stdout == b"0\n"
    assert run("locate", index, "aba", "--format", "tsv", check=0).stdout == b"1\t3\n2\t6\n3\t7\n"

    pattern = tmp_path / "pattern.bin"
    pattern.write_bytes(b"\x00\x01\x00")
    assert run("locate", index, f"@{pattern}", check=0).stdout == b"3\n6\n7\n"


def test_matches_library(tmp_path):
    palfm = pytest.importorskip("palfm")
    rng = random.Random(5)
    text = "".join(rng.choice("abcd") for _ in range(400)).encode()
    path = tmp_path / "t.txt"
    path.write_bytes(text)
    index = tmp_path / "t.idx"
    run("build", path, index, "--delta", 8, check=0)
    lib = palfm.PalFmIndex.build(text, delta=8)
    for _ in range(20):
        p = "".join(rng.choice("abcd") for _ in range(rng.randint(1, 8)))
        assert run("count", index, p, check=0).stdout == f"{lib.count(p)}\n".encode()
        expected = "".join(f"{x}\n" for x in lib.locate(p)).encode()
        assert run("locate", index, p, check=0).stdout == expected


def test_encode(tmp_path):
    a = tmp_path / "a.txt"
    a.write_bytes(b"abbbabb")
    assert run("encode", a, "ssp", check=0).stdout == b"inf\ninf\n2\n2\n5\n3\n2\n"
    b = tmp_path / "b.txt"
    b.write_bytes(b"babbbabb\n")
    assert run("encode", b, "lpal", "--strip-newlines", check=0).stdout == b"1\n1\n3\n2\n3\n5\n7\n5\n"
    assert run("encode", b, "sspg", "--strip-newlines", check=0).stdout.split() == [
        b"inf", b"inf", b"2", b"1", b"1", b"2", b"2", b"1"]
    assert run("encode", b, "g", "--strip-newlines", check=0).stdout.split() == [b"1"] + [b"2"] * 7
    empty = tmp_path / "empty.txt"
    empty.write_bytes(b"")
    assert run("encode", empty, "ssp", check=0).stdout == b""
    run("encode", a, "bogus", check=1)


def test_empty_text(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_bytes(b"")
    index = tmp_path / "empty.idx"
    out = run("build", empty, index, check=0).stdout.decode()
    assert "n: 0" in out
    assert run("count", index, "a", check=0).stdout == b"0\n"
    assert b"rows: 1" in run("stats", index, check=0).stdout


def test_stats(fixture_index):
    _, index = fixture_index
    out = run("stats", index, "--format", "tsv", check=0).stdout.decode()
    fields = dict(line.split("\t") for line in out.splitlines())
    assert fields["K"] == "2" and fields["delta"] == "2" and fields["samples"] == "5"


def test_verify(fixture_index, tmp_path):
    text, index = fixture_index
    out = run("verify", index, text, check=0).stdout.decode()
    assert "ok\toracle-queries" in out

    other = tmp_path / "other.txt"
    other.write_bytes(b"abbabbcbb")
    out = run("verify", index, other, check=3).stdout.decode()
    assert "FAIL\tdefinitional-lf" in out

    corrupt = tmp_path / "corrupt.idx"
    image = bytearray(index.read_bytes())
    image[50] ^= 0x10  # inside the L payload
    corrupt.write_bytes(bytes(image))
    proc = run("verify", corrupt, text, check=3)
    assert b"checksum" in proc.stderr


def test_exit_codes(fixture_index, tmp_path):
    text, index = fixture_index
    run("count", index, "", check=1)
    run("count", tmp_path / "missing.idx", "a", check=2)
    run("build", tmp_path / "missing.txt", tmp_path / "x.idx", check=2)
    run("build", text, tmp_path / "x.idx", "--delta", 0, check=1)
    run("build", text, tmp_path / "x.idx", "--delta", 10, check=1)
    run("build", text, tmp_path / "x.idx", "--format", "json", check=1)
    run(check=1)

    garbage = tmp_path / "garbage.idx"
    garbage.write_bytes(b"not an index at all")
    proc = run("count", garbage, "a", check=2)
    assert b"bad magic" in proc.stderr


def test_default_delta_is_clamped(tmp_path):
    text = tmp_path / "short.txt"
    text.write_bytes(b"abcab")
    index = tmp_path / "short.idx"
    out = run("build", text, index, "--format", "tsv", check=0).stdout.decode()
    assert "delta\t5" in out.splitlines()


def test_construction_guard(tmp_path):
    text = tmp_path / "big.txt"
    text.write_bytes(b"ab" * 25001)
    proc = run("build", text, tmp_path / "big.idx", check=1)
    assert b"--force-large" in proc.stderr
    run("build", text, tmp_path / "big.idx", "--force-large", check=0)
