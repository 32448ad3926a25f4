"""Exception types shared across the package."""


class SeqSketchError(Exception):
    """Base class for all seqsketch errors."""


class ParameterError(SeqSketchError, ValueError):
    """A configuration value is out of its legal range (bad k, t, epsilon, ...)."""


class InputError(SeqSketchError, ValueError):
    """Input data violates a contract (duplicate ids, dimension mismatch, ...)."""


class OracleScaleError(SeqSketchError, ValueError):
    """A brute-force oracle was asked to run beyond its size guard."""


class FastaFormatError(SeqSketchError, ValueError):
    """Malformed FASTA content; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
