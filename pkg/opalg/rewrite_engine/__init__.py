# opalg/rewrite_engine/__init__.py

from opalg.rewrite_engine.engine import (
    RewriteEngine,
    find_instability,
    orient,
    reduce_instance,
    rewrite_pattern_mode,
)
from opalg.rewrite_engine.models import (
    ContextStrategy,
    OutcomeKind,
    ReductionMode,
    ReductionTrace,
    RewriteRule,
    RuleOrigin,
)
from opalg.rewrite_engine.oracle import MembershipStatus, OracleBounds, ideal_membership_oracle

__all__ = [
    "ContextStrategy",
    "MembershipStatus",
    "OracleBounds",
    "OutcomeKind",
    "ReductionMode",
    "ReductionTrace",
    "RewriteEngine",
    "RewriteRule",
    "RuleOrigin",
    "find_instability",
    "ideal_membership_oracle",
    "orient",
    "reduce_instance",
    "rewrite_pattern_mode",
]
