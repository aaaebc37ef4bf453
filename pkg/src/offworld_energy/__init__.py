"""Energy budgets for robotic and crewed mining bases on the Moon and Mars."""

__version__ = "0.1.0"
