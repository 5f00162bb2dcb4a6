"""Kinematics, analysis and design of degree-4 origami vertex strips."""

__version__ = "0.1.0"
