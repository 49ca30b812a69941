from .errors import *
from .monomials import *
from .basep import *
from .oracle import *
from .critical import *
from .fractal import *
from .plotters import *
from .tools import *
