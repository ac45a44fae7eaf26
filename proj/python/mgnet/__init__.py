from ._mgnet import (
    PreconditionError,
    closed_form,
    figure,
    figure_csv,
    figure_ids,
    loads,
    model_constants,
    region,
    region_cases,
    validate,
)

__all__ = [
    "PreconditionError",
    "closed_form",
    "figure",
    "figure_csv",
    "figure_ids",
    "loads",
    "model_constants",
    "region",
    "region_cases",
    "validate",
]
