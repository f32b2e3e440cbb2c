#pragma once

#include "rankcorr/bandwidth.hpp"
#include "rankcorr/errors.hpp"
#include "rankcorr/estimators.hpp"
#include "rankcorr/inference.hpp"
#include "rankcorr/normal.hpp"
#include "rankcorr/random.hpp"
#include "rankcorr/ranking.hpp"
#include "rankcorr/sample.hpp"
#include "rankcorr/samplers.hpp"
#include "rankcorr/scores.hpp"
#include "rankcorr/simulation.hpp"
