try:
    from ._braceforge import *  # wheel layout: extension lives inside the package
except ImportError:
    from _braceforge import *  # in-tree build: extension sits on sys.path
