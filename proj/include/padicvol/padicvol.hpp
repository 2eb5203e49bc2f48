#pragma once

// Umbrella header. JSON helpers live separately in padicvol/io.hpp.

#include "padicvol/branching.hpp"
#include "padicvol/cartan.hpp"
#include "padicvol/errors.hpp"
#include "padicvol/germs.hpp"
#include "padicvol/invariants.hpp"
#include "padicvol/lfactors.hpp"
#include "padicvol/orbital.hpp"
#include "padicvol/qring.hpp"
#include "padicvol/random.hpp"
#include "padicvol/rational.hpp"
#include "padicvol/verify.hpp"
#include "padicvol/volumes.hpp"
