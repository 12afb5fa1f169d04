from .equivalence import sim_sl, sim_sp, sim_weyl
from .finiteness import (
    cone_of,
    is_cuspidal,
    is_finite_dim,
    is_finite_dim_Xsl,
    is_integrable,
    locally_finite_roots_Xsl,
    locally_finite_roots_Xsp,
    root_closure_ok,
)
from .highest_weight import HwCertificate, epsilon_weight, hw_test_Xsl, hw_test_Xsp, sp_borel_data
from .isomorphism import iso_Xsl, iso_Xsp, normalize_to_mu
from .labels import (
    CentralCharLabel,
    SymPowerLabel,
    central_char_Xsl,
    central_char_Xsp,
    finite_dim_identify_Xsl,
)
from .twisted import twisted_loc_support

__ALL__ = (
    'sim_weyl',
    'sim_sl',
    'sim_sp',
    'locally_finite_roots_Xsl',
    'locally_finite_roots_Xsp',
    'central_char_Xsl',
    'central_char_Xsp',
    'iso_Xsl',
    'iso_Xsp',
    'normalize_to_mu',
    'hw_test_Xsl',
    'hw_test_Xsp',
    'finite_dim_identify_Xsl',
    'twisted_loc_support',
    'cone_of',
)
