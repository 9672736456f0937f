/// @file hobo.hpp
/// @brief Umbrella header: pulls in the whole toolkit.

#pragma once

#include "hobo/annealer.hpp"
#include "hobo/compressor.hpp"
#include "hobo/evaluator.hpp"
#include "hobo/json_io.hpp"
#include "hobo/oracle.hpp"
#include "hobo/polynomial.hpp"
#include "hobo/svd.hpp"
#include "hobo/tensor.hpp"
