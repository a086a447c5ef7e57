"""Exception types.

Input problems derive from :class:`ValueError`; failures of the
reconstruction pipeline derive from :class:`ReconstructionError`.  Every
exception carries a short machine-readable ``code`` used by the CLI reports.
"""

from __future__ import annotations


class GraphError(ValueError):
    """A graph violates a structural precondition."""

    code = "invalid-graph"


class EdgeNotPresent(GraphError):
    code = "edge-not-present"


class NotConnected(GraphError):
    code = "not-connected"


class NotUnicyclic(GraphError):
    code = "not-unicyclic"


class NotATree(GraphError):
    code = "not-a-tree"


class HasCycle(GraphError):
    code = "has-cycle"


class FormatError(ValueError):
    """Malformed edge-list, graph object or deck document."""

    code = "malformed-input"


class SizeGuardError(ValueError):
    code = "size-guard"


class BudgetInfeasible(ValueError):
    code = "budget-infeasible"


class ReconstructionError(Exception):
    code = "reconstruction-failed"

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class HypothesesViolated(ReconstructionError):
    code = "hypotheses-violated"


class NoUniqueBranch(ReconstructionError):
    code = "no-unique-branch-found"


class NoSuchPair(ReconstructionError):
    code = "no-such-pair"


class NoAlignment(ReconstructionError):
    code = "no-alignment"


class InconsistentMultisets(ReconstructionError):
    code = "inconsistent-multisets"


class NotReconstructable(ReconstructionError):
    code = "not-reconstructable"


class AmbiguousDeck(ReconstructionError):
    """Two non-isomorphic graphs share the deck. Never resolved silently."""

    code = "ambiguous"

    def __init__(self, reason: str, candidates=()):
        super().__init__(reason)
        self.candidates = tuple(candidates)
