import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rejsamp import aesprg
from oracles import aes128_decrypt_oracle, aes128_encrypt_oracle, keystream_oracle

KEY = bytes.fromhex("000102030405060708090a0b0c0d0e0f")
PT = bytes.fromhex("00112233445566778899aabbccddeeff")
CT = bytes.fromhex("69c4e0d86a7b0430d8cdb78070b4c55a")

# frozen from the independent oracle (OpenSSL cross-checked)
ZEROS_CT = bytes.fromhex("66e94bd4ef8a2c3b884cfa59ca342b2e")


def test_fips_known_answer():
    assert aesprg.aes128_encrypt_block(KEY, PT) == CT


def test_all_zero_known_answer():
    assert aesprg.aes128_encrypt_block(b"\x00" * 16, b"\x00" * 16) == ZEROS_CT


def test_encrypt_deterministic():
    blk = bytes(range(16, 32))
    assert aesprg.aes128_encrypt_block(KEY, blk) == aesprg.aes128_encrypt_block(KEY, blk)


def test_final_round_key_frozen():
    # last round key of the FIPS key schedule
    assert bytes(aesprg.expand_key(KEY)[10]).hex() == "13111d7fe3944a17f307a78b4d2b30c5"


def test_bad_lengths_rejected():
    with pytest.raises(ValueError):
        aesprg.aes128_encrypt_block(KEY[:-1], PT)
    with pytest.raises(ValueError):
        aesprg.aes128_encrypt_block(KEY, PT[:-1])
    with pytest.raises(ValueError):
        aesprg.keystream(KEY, b"\x00", 8)
    with pytest.raises(ValueError):
        aesprg.keystream(KEY, b"\x00\x00", 0)


def test_roundtrip_against_independent_decryptor():
    rng = random.Random(1)
    for _ in range(200):
        k = rng.randbytes(16)
        b = rng.randbytes(16)
        assert aes128_decrypt_oracle(k, aesprg.aes128_encrypt_block(k, b)) == b


def test_against_openssl():
    cryptography = pytest.importorskip("cryptography")
    from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

    rng = random.Random(2)
    for _ in range(100):
        k = rng.randbytes(16)
        b = rng.randbytes(16)
        enc = Cipher(algorithms.AES(k), modes.ECB()).encryptor()
        assert aesprg.aes128_encrypt_block(k, b) == enc.update(b) + enc.finalize()


def test_ctr_block_layout():
    blk = aesprg.ctr_block(b"\x11" * 8, b"\xab\xcd", 0x010203040506)
    assert blk == b"\x11" * 8 + b"\xab\xcd" + bytes([1, 2, 3, 4, 5, 6])
    with pytest.raises(ValueError):
        aesprg.ctr_block(b"\x11" * 8, b"\xab\xcd", 1 << 48)


def test_single_block_keystream_is_one_encryption():
    iv = b"\x00\x01"
    want = aesprg.aes128_encrypt_block(KEY, aesprg.ctr_block(aesprg.DEFAULT_NONCE, iv, 0))
    assert aesprg.keystream(KEY, iv, 16) == want


def test_block_consumption_count(monkeypatch):
    calls = []
    real = aesprg.encrypt_block_expanded

    def counting(rks, block):
        calls.append(block)
        return real(rks, block)

    monkeypatch.setattr(aesprg, "encrypt_block_expanded", counting)
    aesprg.keystream(KEY, b"\x00\x01", 2916)
    assert len(calls) == 183
    # no two counter blocks repeat within the request
    assert len(set(calls)) == 183


def test_matches_independent_ctr_oracle():
    assert aesprg.keystream(KEY, b"\xbe\xef", 333) == keystream_oracle(KEY, b"\xbe\xef", 333)


def test_nonce_changes_stream_and_is_honoured():
    a = aesprg.keystream(KEY, b"\x00\x01", 32)
    b = aesprg.keystream(KEY, b"\x00\x01", 32, nonce=b"\x01" * 8)
    assert a != b
    assert b == keystream_oracle(KEY, b"\x00\x01", 32, nonce=b"\x01" * 8)


@settings(max_examples=60, deadline=None)
@given(key=st.binary(min_size=16, max_size=16),
       iv=st.binary(min_size=2, max_size=2),
       n=st.integers(min_value=1, max_value=120),
       extra=st.integers(min_value=0, max_value=120))
def test_prefix_property(key, iv, n, extra):
    assert aesprg.keystream(key, iv, n + extra)[:n] == aesprg.keystream(key, iv, n)
