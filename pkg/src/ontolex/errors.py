"""Exception hierarchy shared by all ontolex modules."""

from __future__ import annotations


class OntolexError(Exception):
    """Base class for every error raised by this package."""


class UnknownId(OntolexError):
    """An operation referenced a concept or individual id that does not exist."""


class DuplicateId(OntolexError):
    """An id was inserted twice, or collided with another id space."""


class CycleError(OntolexError):
    """A parent assignment would create a directed cycle."""


class MultipleParentError(OntolexError):
    """A child already has a different parent and reparenting was not requested."""


class CyclicInputError(OntolexError):
    """An audit that requires acyclic input was given a cyclic hierarchy."""


class UncoveredConcept(OntolexError):
    """A model-based check was asked about a concept the model does not cover."""


class UnknownParent(OntolexError):
    """A gloss lint was run on a concept whose parent cannot be resolved."""


class ParseError(OntolexError):
    """Malformed interchange input. Carries a (line, column) position when known."""

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        if position is not None:
            message = f"{message} (line {position[0]}, column {position[1]})"
        super().__init__(message)
        self.position = position


class DanglingReference(OntolexError):
    """A record referenced an id that is absent from the document or store."""


class NotFound(OntolexError):
    """A lookup (sense, concept, route target) produced no record."""


class DuplicateLexicon(OntolexError):
    """A lexicon id was registered twice."""


class RangeError(OntolexError):
    """A percentage or threshold fell outside [0, 100]."""


class UnknownRelation(OntolexError):
    """A relation code is not part of the accepted inventory for the operation."""


class DuplicateMapping(OntolexError):
    """The same (e1, e2, relation, annotator) correspondence was added twice."""


class TargetMismatch(OntolexError):
    """Two mapping sets being compared do not target the same resource."""


class UnresolvedTarget(OntolexError):
    """A mapping target does not resolve to a node of the given taxonomy."""
