"""Error taxonomy.

Every failure mode of the library is one of the classes below, all rooted at
ComtraceError so callers (and the CLI) can catch domain errors in one place
without swallowing programming errors.
"""

from __future__ import annotations


class ComtraceError(Exception):
    """Base class for all domain errors raised by this package."""


# --- alphabet validation ---------------------------------------------------

class SerNotInSim(ComtraceError):
    """A serializability pair is not a simultaneity pair (ser must be in sim)."""


class SimInlOverlap(ComtraceError):
    """A pair is declared both simultaneous and interleaving (sim and inl must be disjoint)."""


class ReflexivePair(ComtraceError):
    """A relation that must be irreflexive contains (a, a)."""


class UnknownEvent(ComtraceError):
    """An undeclared event name, or malformed alphabet/sequence/structure text."""


class NotAStep(ComtraceError):
    """A braced group contains events that may not occur simultaneously."""


class NotTraceAlphabet(ComtraceError):
    """An operation restricted to lifted trace alphabets got sim != ser."""


class InlNotEmpty(ComtraceError):
    """An operation restricted to comtrace alphabets (inl = empty) got a genuine g-comtrace alphabet."""


# --- resource guards -------------------------------------------------------

class UniverseTooLarge(ComtraceError):
    """The step universe exceeds the configured cap."""


class ClassCapExceeded(ComtraceError):
    """Equivalence-class enumeration hit the member cap before closing."""


class CarrierTooLarge(ComtraceError):
    """Extension enumeration refused a carrier above the configured size cap."""


class BoundExceeded(ComtraceError):
    """A language operation materialized more sequences than the configured cap."""


# --- order structures ------------------------------------------------------

class NotStratified(ComtraceError):
    """A relation expected to be a stratified order is not one."""


class AxiomViolation(ComtraceError):
    """An order-structure axiom fails; carries the axiom tag and a witness."""

    def __init__(self, axiom: str, witness: tuple | None = None):
        self.axiom = axiom
        self.witness = witness
        detail = f" witness={witness}" if witness is not None else ""
        super().__init__(f"{axiom} violated{detail}")


class EmptyZ(ComtraceError):
    """The structural canonicalization found no admissible next step
    (the input structure is not generated by any step sequence)."""
