class BudgetExceeded(RuntimeError):
    """A search hit its node budget before reaching a decision."""

    def __init__(self, what: str, nodes: int):
        super().__init__(f"{what}: node budget exhausted after {nodes} nodes")
        self.nodes = nodes


class NotAutomorphismError(ValueError):
    def __init__(self, perm, message="permutation is not an automorphism"):
        super().__init__(f"{message}: {perm}")
        self.perm = perm
