"""Decode-failure mapping shared by archloom's readers. Not public API."""

from archloom._internal.mapper import ExceptionMapper, MappingStrategy
from archloom._internal.registry import StrategyRegistry

__all__ = [
    "ExceptionMapper",
    "MappingStrategy",
    "StrategyRegistry",
]
