#pragma once

#include "landau_paraxial/cli.hpp"
#include "landau_paraxial/config.hpp"
#include "landau_paraxial/errors.hpp"
#include "landau_paraxial/fixtures.hpp"
#include "landau_paraxial/gouy.hpp"
#include "landau_paraxial/io_format.hpp"
#include "landau_paraxial/keyvalue.hpp"
#include "landau_paraxial/modes.hpp"
#include "landau_paraxial/phase_unwrap.hpp"
#include "landau_paraxial/propagator.hpp"
#include "landau_paraxial/radial_grid.hpp"
#include "landau_paraxial/special_functions.hpp"
#include "landau_paraxial/spectrum.hpp"
#include "landau_paraxial/transverse_operator.hpp"
#include "landau_paraxial/units.hpp"
#include "landau_paraxial/validate.hpp"
