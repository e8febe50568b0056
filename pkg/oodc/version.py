# __version__ is set by CI based on release tag on GitHub
__version__ = '0.1.0'
