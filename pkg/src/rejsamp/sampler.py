"""Golden functional model of the rejection sampler.

rej_samp turns a tau-byte pseudorandom string into n_prime field elements:
each byte is masked down to [0, q] with a bitwise AND (valid only because
q is Mersenne), values equal to q among the first n_prime positions are
rejected and replaced by the next unused valid value from the spare tail,
and positions whose tail ran out are zero-filled. rej_samp_prg feeds it
from the AES-CTR keystream.

The pseudocode is 1-based; this implementation stores 0-based, so the
replacement pointer starts at index n_prime (the pseudocode's n'+1) and
exhaustion is k == tau (the pseudocode's k = tau+1).
"""

from dataclasses import dataclass

from . import aesprg
from .packing import words_from_bytes, bytes_from_words
from .params import ParameterSet, is_mersenne


@dataclass(frozen=True)
class FieldVector:
    """Validated vector over F_q: every element in [0, modulus)."""
    elems: tuple
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(self.elems))
        bad = [e for e in self.elems if not 0 <= e < self.modulus]
        if bad:
            raise ValueError(f"{len(bad)} element(s) outside [0, {self.modulus})")

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def to_bytes(self) -> bytes:
        """One byte per element, in order."""
        return bytes(self.elems)

    def to_packed_words(self) -> list[int]:
        """8 one-byte elements per 64-bit word, element 0 in the MSB."""
        return words_from_bytes(self.to_bytes())

    def to_packed_bytes(self) -> bytes:
        """Packed binary artifact: the packed words serialized big-endian."""
        return b"".join(w.to_bytes(8, "big") for w in self.to_packed_words())

    @classmethod
    def from_packed_bytes(cls, data: bytes, n_elems: int, modulus: int) -> "FieldVector":
        words = words_from_bytes(data)
        return cls(tuple(bytes_from_words(words, n_elems)), modulus)

    def to_csv(self) -> str:
        """Decimal CSV for inspection, one element per line."""
        return "\n".join(str(e) for e in self.elems) + "\n"


def mask_bytes(raw: bytes, q: int) -> list[int]:
    """Mask every byte into [0, q] with a bitwise AND.

    Only sound for Mersenne q, where AND with q keeps the low log2(q+1)
    bits; anything else would need a real modular reduction.
    """
    if not is_mersenne(q):
        raise ValueError(f"unsupported modulus {q}: masking requires Mersenne q")
    return [b & q for b in raw]


def rej_samp(raw: bytes, tau: int, n_prime: int, q: int) -> FieldVector:
    """Rejection-sample n_prime field elements from a tau-byte string."""
    if len(raw) != tau:
        raise ValueError(f"raw has {len(raw)} bytes, expected tau={tau}")
    if not 1 <= n_prime <= tau:
        raise ValueError(f"insufficient input: need 1 <= n_prime <= tau, got "
                         f"n_prime={n_prime}, tau={tau}")
    masked = mask_bytes(raw, q)
    out = masked[:n_prime]
    k = n_prime
    while k < tau and masked[k] == q:
        k += 1
    for j in range(n_prime):
        if out[j] == q:
            if k < tau:
                out[j] = masked[k]
                k += 1
                while k < tau and masked[k] == q:
                    k += 1
            else:
                out[j] = 0
    return FieldVector(tuple(out), q)


def rej_samp_prg(seed: bytes, iv: bytes, p: ParameterSet,
                 nonce: bytes = aesprg.DEFAULT_NONCE) -> FieldVector:
    """Expand (seed, iv) with AES-CTR and rejection-sample the stream."""
    raw = aesprg.keystream(seed, iv, p.tau, nonce)
    return rej_samp(raw, p.tau, p.n_prime, p.q)


@dataclass(frozen=True)
class RejectionStats:
    """Bookkeeping for one sampling run, for reporting only."""
    tau: int
    n_prime: int
    masked_to_q: int      # bytes that masked to q anywhere in the stream
    replaced: int         # rejected head positions patched from the tail
    zero_filled: int      # rejected head positions left over after the tail

    @property
    def rejection_rate(self) -> float:
        return self.masked_to_q / self.tau


def rejection_stats(raw: bytes, tau: int, n_prime: int, q: int) -> RejectionStats:
    masked = mask_bytes(raw, q)
    head_rejects = sum(1 for v in masked[:n_prime] if v == q)
    tail_valid = sum(1 for v in masked[n_prime:] if v != q)
    replaced = min(head_rejects, tail_valid)
    return RejectionStats(
        tau=tau,
        n_prime=n_prime,
        masked_to_q=sum(1 for v in masked if v == q),
        replaced=replaced,
        zero_filled=head_rejects - replaced,
    )
