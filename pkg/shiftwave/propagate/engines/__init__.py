# shiftwave/propagate/engines/__init__.py

"""
Propagation engines.
"""

from shiftwave.propagate.engines.base import PropagationEngine
from shiftwave.propagate.engines.bfs import BfsEngine
from shiftwave.propagate.engines.wavefront import WavefrontEngine

__all__ = ["BfsEngine", "PropagationEngine", "WavefrontEngine"]
