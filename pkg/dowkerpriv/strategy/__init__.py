from .strategies import (
    maximal_strategies,
    strategy_names,
    strategy_complex,
    action_relation,
    source_relation,
    source_complex,
    strategy_goals,
    is_acyclic_strategy,
    is_complete_strategy,
    fully_controllable,
)
from .obfuscation import strategy_iars, goal_delay_sequence, hamiltonian_iars
