"""zetaform - exact linear forms in zeta values from cube integrals"""
__version__ = "0.1.0"
