#pragma once

#include "specdist/distance.hpp"
#include "specdist/error.hpp"
#include "specdist/graph.hpp"
#include "specdist/limits.hpp"
#include "specdist/spectrum.hpp"
