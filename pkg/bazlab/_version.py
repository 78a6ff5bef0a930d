__title__ = "bazlab"
__version__ = "0.1.0"
