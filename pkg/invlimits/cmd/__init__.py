from ._util import welcome, empty
from .validate import validate
from .threads import threads
from .decompose import decompose
from .model import model
from .game import game
from .good import good
