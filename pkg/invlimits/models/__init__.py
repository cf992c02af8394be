"""
The invlimits data model is split up into the value types of the
different layers, each represented by a Python class:
directed sets, words, inverse systems of sets, induced group systems
and finite group systems with their relational model.
Reports are pydantic models and can be dumped to JSON directly.

"""
from .poset import DirectedSet, GameTranscript, GameStrategy, Verdict
from .words import Word, AbelianVector
from .system import InverseSystem, Thread, Tree, GoodnessReport
from .grouplimit import GroupSystem, LimitElement, Decomposition, FreeLimitReport
from .structure import FiniteGroup, FiniteGroupSystem, Structure, Automorphism, PhiReport
