#pragma once
#ifndef SYLVESTER_SYLVESTER_HPP
#define SYLVESTER_SYLVESTER_HPP

#include "sylvester/number.hpp"
#include "sylvester/exponents.hpp"
#include "sylvester/dp_oracle.hpp"
#include "sylvester/periodic_table.hpp"
#include "sylvester/bernoulli.hpp"
#include "sylvester/quasipoly.hpp"
#include "sylvester/interpolation.hpp"
#include "sylvester/recursion.hpp"
#include "sylvester/properties.hpp"
#include "sylvester/serialize.hpp"
#include "sylvester/coxeter.hpp"
#include "sylvester/lcm_growth.hpp"

#endif  // SYLVESTER_SYLVESTER_HPP
