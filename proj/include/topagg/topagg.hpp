// Umbrella header.

#pragma once

#include "topagg/algorithms.hpp"
#include "topagg/bench.hpp"
#include "topagg/distance.hpp"
#include "topagg/errors.hpp"
#include "topagg/exact.hpp"
#include "topagg/io.hpp"
#include "topagg/matching.hpp"
#include "topagg/profile.hpp"
#include "topagg/rational.hpp"
#include "topagg/rng.hpp"
#include "topagg/top_list.hpp"
