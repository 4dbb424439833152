"""Geometric consensus for Likert-scale survey responses and forecast evaluation."""
__version__ = "0.1.0"

from .consensus_core import (BarycentricPoint, FiveCategoryShares, SurveyDistribution,
                             barycentric_coordinates, consensus, group_five_to_three,
                             make_five, validate_distribution)
from .simplex_mc import SimulationConfig, SummaryStats, simulate_consensus, summary_stats

__all__ = [
    "BarycentricPoint", "FiveCategoryShares", "SimulationConfig", "SummaryStats",
    "SurveyDistribution", "barycentric_coordinates", "consensus", "group_five_to_three",
    "make_five", "simulate_consensus", "summary_stats", "validate_distribution",
]
