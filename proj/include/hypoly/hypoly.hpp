#pragma once

#include "hypoly/bridge.hpp"
#include "hypoly/cohomology.hpp"
#include "hypoly/combinatorics.hpp"
#include "hypoly/core_geometry.hpp"
#include "hypoly/eps.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/index_set.hpp"
#include "hypoly/intersection.hpp"
#include "hypoly/phb.hpp"
#include "hypoly/poly.hpp"
#include "hypoly/rational.hpp"
#include "hypoly/wallcross.hpp"
#include "hypoly/weights.hpp"
