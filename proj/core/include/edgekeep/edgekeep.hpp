#ifndef EDGEKEEP_EDGEKEEP_HPP
#define EDGEKEEP_EDGEKEEP_HPP

#include "edgekeep/filters.hpp"
#include "edgekeep/image.hpp"
#include "edgekeep/kernels.hpp"
#include "edgekeep/metrics.hpp"
#include "edgekeep/noise.hpp"
#include "edgekeep/pnm.hpp"
#include "edgekeep/texture.hpp"

#endif  // EDGEKEEP_EDGEKEEP_HPP
