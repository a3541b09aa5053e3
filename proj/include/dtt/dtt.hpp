#ifndef DTT_DTT_HPP
#define DTT_DTT_HPP

#include "dtt/matrix.hpp"
#include "dtt/tchebichef.hpp"
#include "dtt/approx.hpp"
#include "dtt/fast.hpp"
#include "dtt/image.hpp"
#include "dtt/codec.hpp"
#include "dtt/metrics.hpp"
#include "dtt/experiment.hpp"

#endif // DTT_DTT_HPP
