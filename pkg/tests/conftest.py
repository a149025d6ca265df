import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from atilde.quiver import Quiver  # noqa: E402

A2 = Quiver(3, "-++")
A4 = Quiver(5, "-+-++")
KRONECKER = Quiver(2, "-+")
