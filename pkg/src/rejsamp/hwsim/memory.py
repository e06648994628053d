"""Dual-port 64-bit word memory with a per-cycle access log.

One read and one write may land in the same cycle (independent ports);
two same-cycle writes to one address are a simulation fault. A written
word becomes visible to reads from the following cycle onward.
"""

from typing import NamedTuple

from .errors import SimulationFault

DEFAULT_DEPTH = 1024
WORD_BITS = 64


class Access(NamedTuple):
    cycle: int
    unit: str
    port: str
    kind: str  # "R" or "W"
    addr: int
    data: int


class MemoryModel:
    def __init__(self, depth: int = DEFAULT_DEPTH):
        if depth <= 0:
            raise ValueError("memory depth must be positive")
        self.depth = depth
        self.words = [0] * depth
        self.written: set[int] = set()
        self.log: list[Access] = []
        self._pending: list[tuple[int, int, int]] = []  # (cycle, addr, word)
        self._write_slots: set[tuple[int, int]] = set()  # (cycle, addr)

    def _check_addr(self, addr: int):
        if not 0 <= addr < self.depth:
            raise IndexError(f"address {addr} out of range for depth {self.depth}")

    def _commit_before(self, cycle: int):
        still_pending = []
        for wcycle, addr, word in self._pending:
            if wcycle < cycle:
                self.words[addr] = word
            else:
                still_pending.append((wcycle, addr, word))
        self._pending = still_pending

    def write(self, addr: int, word: int, cycle: int, port: str = "A",
              unit: str = "ctrl") -> "MemoryModel":
        self._check_addr(addr)
        if not 0 <= word < (1 << WORD_BITS):
            raise ValueError(f"word {word:#x} does not fit in {WORD_BITS} bits")
        if (cycle, addr) in self._write_slots:
            raise SimulationFault(
                f"write-write conflict at address {addr} in cycle {cycle}")
        self._write_slots.add((cycle, addr))
        self._pending.append((cycle, addr, word))
        self.written.add(addr)
        self.log.append(Access(cycle, unit, port, "W", addr, word))
        return self

    def read(self, addr: int, cycle: int, port: str = "B",
             unit: str = "ctrl") -> int:
        self._check_addr(addr)
        self._commit_before(cycle)
        word = self.words[addr]
        self.log.append(Access(cycle, unit, port, "R", addr, word))
        return word

    def peek(self, addr: int) -> int:
        """Untimed, unlogged view with all pending writes applied."""
        self._check_addr(addr)
        latest = None
        for wcycle, waddr, word in self._pending:
            if waddr == addr and (latest is None or wcycle >= latest[0]):
                latest = (wcycle, word)
        return latest[1] if latest else self.words[addr]

    def peek_range(self, start: int, count: int) -> list[int]:
        return [self.peek(a) for a in range(start, start + count)]
