"""so42pt: exact so(4,2) boson-bilinear algebra, its truncated Fock-space
representation, and the SO(4,2)xSU(2) periodic chart with its quantum-number
address model."""

__version__ = "0.1.0"
