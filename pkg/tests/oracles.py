"""Independent oracles the production code is tested against.

Everything here is written from the underlying definitions on purpose and
must stay decoupled from the package: a literal 1-based transcription of
the rejection-sampling pseudocode, and a self-contained AES-128 with both
cipher directions for round-trip checks.
"""


def rej_samp_naive(raw, tau, n_prime, q):
    """Line-by-line 1-based transcription of the rejection sampler.

    v[0] is an unused sentinel so indices match the pseudocode exactly.
    """
    assert len(raw) == tau and tau >= n_prime >= 1
    v = [None] + [b & q for b in raw]          # lines 1-2: mask all tau bytes
    k = n_prime + 1                            # line 3
    while k < tau + 1 and v[k] == q:           # lines 4-5
        k = k + 1
    for j in range(1, n_prime + 1):            # lines 6-14
        if v[j] == q:
            if k < tau + 1:
                v[j] = v[k]
                k = k + 1
                while k < tau + 1 and v[k] == q:
                    k = k + 1
            else:
                v[j] = 0
    return v[1:n_prime + 1]


# ---------------------------------------------------------------------------
# Independent AES-128 (encrypt + decrypt), table-driven.

_SBOX = bytes.fromhex(
    "637c777bf26b6fc53001672bfed7ab76ca82c97dfa5947f0add4a2af9ca472c0"
    "b7fd9326363ff7cc34a5e5f171d8311504c723c31896059a071280e2eb27b275"
    "09832c1a1b6e5aa0523bd6b329e32f8453d100ed20fcb15b6acbbe394a4c58cf"
    "d0efaafb434d338545f9027f503c9fa851a3408f929d38f5bcb6da2110fff3d2"
    "cd0c13ec5f974417c4a77e3d645d197360814fdc222a908846eeb814de5e0bdb"
    "e0323a0a4906245cc2d3ac629195e479e7c8376d8dd54ea96c56f4ea657aae08"
    "ba78252e1ca6b4c6e8dd741f4bbd8b8a703eb5664803f60e613557b986c11d9e"
    "e1f8981169d98e949b1e87e9ce5528df8ca1890dbfe6426841992d0fb054bb16"
)
_INV_SBOX = bytes(256)
_INV_SBOX = bytearray(256)
for _i, _s in enumerate(_SBOX):
    _INV_SBOX[_s] = _i
_INV_SBOX = bytes(_INV_SBOX)

_RCON = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36]


def _gmul(a, b):
    p = 0
    for _ in range(8):
        if b & 1:
            p ^= a
        hi = a & 0x80
        a = (a << 1) & 0xFF
        if hi:
            a ^= 0x1B
        b >>= 1
    return p


def _key_schedule(key):
    w = [list(key[4 * i:4 * i + 4]) for i in range(4)]
    for i in range(4, 44):
        t = list(w[i - 1])
        if i % 4 == 0:
            t = t[1:] + t[:1]
            t = [_SBOX[x] for x in t]
            t[0] ^= _RCON[i // 4 - 1]
        w.append([a ^ b for a, b in zip(w[i - 4], t)])
    return [sum((w[4 * r + c] for c in range(4)), []) for r in range(11)]


def _add_round_key(state, rk):
    return [s ^ k for s, k in zip(state, rk)]


def _shift_rows(state, inv=False):
    out = [0] * 16
    for c in range(4):
        for r in range(4):
            src = (c + r) % 4 if not inv else (c - r) % 4
            out[4 * c + r] = state[4 * src + r]
    return out


def _mix_single(col, mat):
    return [
        _gmul(mat[0], col[0]) ^ _gmul(mat[1], col[1]) ^ _gmul(mat[2], col[2]) ^ _gmul(mat[3], col[3]),
        _gmul(mat[3], col[0]) ^ _gmul(mat[0], col[1]) ^ _gmul(mat[1], col[2]) ^ _gmul(mat[2], col[3]),
        _gmul(mat[2], col[0]) ^ _gmul(mat[3], col[1]) ^ _gmul(mat[0], col[2]) ^ _gmul(mat[1], col[3]),
        _gmul(mat[1], col[0]) ^ _gmul(mat[2], col[1]) ^ _gmul(mat[3], col[2]) ^ _gmul(mat[0], col[3]),
    ]


def _mix_columns(state, inv=False):
    mat = [14, 11, 13, 9] if inv else [2, 3, 1, 1]
    out = []
    for c in range(4):
        out += _mix_single(state[4 * c:4 * c + 4], mat)
    return out


def aes128_encrypt_oracle(key, block):
    rks = _key_schedule(key)
    s = _add_round_key(list(block), rks[0])
    for rnd in range(1, 10):
        s = [_SBOX[b] for b in s]
        s = _shift_rows(s)
        s = _mix_columns(s)
        s = _add_round_key(s, rks[rnd])
    s = [_SBOX[b] for b in s]
    s = _shift_rows(s)
    s = _add_round_key(s, rks[10])
    return bytes(s)


def aes128_decrypt_oracle(key, block):
    rks = _key_schedule(key)
    s = _add_round_key(list(block), rks[10])
    s = _shift_rows(s, inv=True)
    s = [_INV_SBOX[b] for b in s]
    for rnd in range(9, 0, -1):
        s = _add_round_key(s, rks[rnd])
        s = _mix_columns(s, inv=True)
        s = _shift_rows(s, inv=True)
        s = [_INV_SBOX[b] for b in s]
    s = _add_round_key(s, rks[0])
    return bytes(s)


def keystream_oracle(key, iv, n_bytes, nonce=b"\x00" * 8):
    """CTR keystream: nonce || iv || 6-byte big-endian block index."""
    out = bytearray()
    idx = 0
    while len(out) < n_bytes:
        out += aes128_encrypt_oracle(key, nonce + iv + idx.to_bytes(6, "big"))
        idx += 1
    return bytes(out[:n_bytes])
