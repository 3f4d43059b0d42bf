"""Exception types shared across the package."""


class SchemaError(ValueError):
    """A required column or key is missing from an input file."""

    def __init__(self, column: str, path: str = ""):
        self.column = column
        self.path = path
        super().__init__(f"missing required column/key {column!r}" + (f" in {path}" if path else ""))


class DuplicateIdError(ValueError):
    """Two documents share the same id."""

    def __init__(self, doc_id: str):
        self.doc_id = doc_id
        super().__init__(f"duplicate document id {doc_id!r}")


class RowValidationError(ValueError):
    """A single input row violates a document invariant."""

    def __init__(self, row: int, reason: str):
        self.row = row
        self.reason = reason
        super().__init__(f"row {row}: {reason}")


class EmptyVocabularyError(ValueError):
    """Every term was filtered out; thresholds are too strict for the corpus."""


class EmptySeedSetError(ValueError):
    """Seed construction produced no usable seed terms."""


class TransportError(RuntimeError):
    """The remote QA service could not be reached or timed out."""


class SpanIntegrityError(RuntimeError):
    """A remote QA answer does not match the claimed token span."""

    def __init__(self, start: int, end: int, message: str):
        self.start = start
        self.end = end
        super().__init__(f"span [{start}, {end}): {message}")


class PipelineStageError(RuntimeError):
    """A pipeline stage failed; carries the stage name for error surfacing."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage!r} failed: {cause}")
