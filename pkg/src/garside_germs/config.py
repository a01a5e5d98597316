from dataclasses import dataclass

DEFAULT_ENUMERATE_LIMIT = 200_000


@dataclass
class Config:
    """Configuration for analysis and normal-form computations.

    Attributes:
        verify_laws: When True (default), a yes-verdict re-verifies the sharp
                    J-law on every composable triple before the J-table is handed
                    to the category engine. A failure there is logged as an error
                    and turns the verdict into a law-violation.
        step_budget_factor: Multiplier on the normal-form step budget, which is
                    (number of input entries) x |S| x step_budget_factor. A Garside
                    germ never comes close; the budget only stops runaway loops on
                    germs whose verdict was wrong.
        enumerate_limit: Maximum number of normal forms kept by
                    GermCategory.enumerate_normal_forms() across all levels before it raises
                    EnumerationLimitError.
        cross_check: When True, GermCategory also runs the Noetherian/lcm criteria
                    on construction and logs a warning if they disagree with the
                    maximum-J verdict.

    Example:
        from garside_germs import Config, GermCategory, classical_germ, CoxeterSpec

        table = classical_germ(CoxeterSpec(family="A", rank=4))
        category = GermCategory(table, Config(enumerate_limit=10_000), debug=True)
    """
    verify_laws: bool = True
    step_budget_factor: int = 1
    enumerate_limit: int = DEFAULT_ENUMERATE_LIMIT
    cross_check: bool = False
