#pragma once

#include "decimation/errors.hpp"
#include "decimation/number_theory.hpp"
#include "decimation/big_count.hpp"
#include "decimation/group.hpp"
#include "decimation/multiset.hpp"
#include "decimation/units_lattice.hpp"
#include "decimation/multiplier.hpp"
#include "decimation/adjacency.hpp"
#include "decimation/orbits_counting.hpp"
#include "decimation/decimation_count.hpp"
#include "decimation/oracle.hpp"
