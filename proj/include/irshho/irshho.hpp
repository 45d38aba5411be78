#pragma once

#include "irshho/baselines.hpp"
#include "irshho/beamforming.hpp"
#include "irshho/benchmarks.hpp"
#include "irshho/channel.hpp"
#include "irshho/experiment.hpp"
#include "irshho/levy.hpp"
#include "irshho/optimizer.hpp"
#include "irshho/rng.hpp"
#include "irshho/serialization.hpp"
#include "irshho/types.hpp"
#include "irshho/units.hpp"
