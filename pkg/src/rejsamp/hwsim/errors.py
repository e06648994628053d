"""Simulator error types, kept distinct so the CLI can map exit codes."""


class HwSimError(Exception):
    """Base for all simulator errors."""


class InvalidInstructionError(HwSimError, ValueError):
    """Instruction word outside the encoding (unknown opcode, overwide word)."""


class ProgramError(HwSimError, ValueError):
    """Instruction sequence violates the required ordering rules."""


class UnsupportedLevelError(HwSimError, ValueError):
    """Security-level field value with no modeled parameter set."""


class CapacityError(HwSimError, RuntimeError):
    """Memory too small for the selected parameter set."""

    def __init__(self, message: str, required_words: int):
        super().__init__(message)
        self.required_words = required_words


class SimulationFault(HwSimError, RuntimeError):
    """Illegal same-cycle memory access pattern (write-write on one address)."""


class PreconditionFault(HwSimError, RuntimeError):
    """Functional unit started without its required memory region populated."""
