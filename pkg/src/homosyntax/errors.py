"""Exception hierarchy shared by all homosyntax modules."""


class HomosyntaxError(Exception):
    """Base class for all errors raised by this package."""


class IngestError(HomosyntaxError):
    """Raw document could not be read or decoded."""


class ConfigError(HomosyntaxError):
    """Invalid configuration or parameter combination."""


class TagError(HomosyntaxError):
    """Malformed POS tag."""


class BuildError(HomosyntaxError):
    """A statistical resource could not be built from the given corpus."""


class GenerationError(HomosyntaxError):
    """Sequence generation failed (e.g. dead-end state, retries exhausted)."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class TemplateError(HomosyntaxError):
    """Sentence cannot be turned into a template (no content-word slots)."""


class StoreError(HomosyntaxError):
    """Template store is empty or inconsistent."""


class FormatError(HomosyntaxError):
    """Malformed resource file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TrainError(HomosyntaxError):
    """Embedding training preconditions not met."""


class OovError(HomosyntaxError):
    """Word not present in the embedding vocabulary."""

    def __init__(self, word):
        super().__init__(f"out-of-vocabulary word: {word!r}")
        self.word = word


class DictError(HomosyntaxError):
    """Function-word dictionary has no entry for a tag."""

    def __init__(self, tag):
        super().__init__(f"no function-word entry for tag {tag!r}")
        self.tag = tag


class RelaxationError(HomosyntaxError):
    """Query relaxation exhausted its hop budget without finding a fit."""

    def __init__(self, message, visited=()):
        super().__init__(message)
        self.visited = tuple(visited)


class TableError(HomosyntaxError):
    """Associative table has no entry for a tag."""


class EmptyRankError(HomosyntaxError):
    """No in-vocabulary candidate available for a slot."""


class DegenerateScoreError(HomosyntaxError):
    """Cosine scoring hit a zero similarity or zero mean."""


class ResourceError(HomosyntaxError):
    """A required resource file is missing or unreadable."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path
