"""
Centralized version definition for OneCenter.
"""

__version__ = "1.0.0"
__app_name__ = "OneCenter"
