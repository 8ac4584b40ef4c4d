"""
Fighting Fish Bijection Engine
Fighting fish, ternary trees and the bijections between them
"""

__version__ = "1.0.0"
