try:
    from ._dla import *  # noqa: F401,F403
except ImportError:  # in-tree test runs find the module beside this package
    from _dla import *  # noqa: F401,F403
