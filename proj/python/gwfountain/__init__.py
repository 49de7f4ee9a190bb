"""Strain sensitivity and configuration optimization for differential
multi-diamond atom-interferometer gravitational-wave detectors."""

from ._core import *  # noqa: F401,F403
