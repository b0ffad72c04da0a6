from orbitsieve_apollonian.exceptions import *
from orbitsieve_cli.exceptions import *
from orbitsieve_core.exceptions import *
from orbitsieve_dt3m.exceptions import *
from orbitsieve_orbits.exceptions import *
from orbitsieve_sieve.exceptions import *
from orbitsieve_spectral.exceptions import *
