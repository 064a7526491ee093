#ifndef WNL_WNL_HPP
#define WNL_WNL_HPP

#include "wnl/error.hpp"
#include "wnl/optimize.hpp"
#include "wnl/space.hpp"
#include "wnl/polynomial.hpp"
#include "wnl/constants.hpp"
#include "wnl/norms.hpp"
#include "wnl/counterexamples.hpp"
#include "wnl/bollobas.hpp"
#include "wnl/sampling.hpp"
#include "wnl/io.hpp"
#include "wnl/verify.hpp"

#endif  // WNL_WNL_HPP
