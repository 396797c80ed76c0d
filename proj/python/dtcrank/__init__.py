"""Tier rankings of colleges from assignment data via delayed trading cycles."""

from ._core import *  # noqa: F401,F403
