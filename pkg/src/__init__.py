"""vmreg - regularized 1D Coulomb potentials and effective strong-field atomic models"""

__version__ = "0.1.0"
