#pragma once

#include "sonc/barycentric.hpp"
#include "sonc/bound.hpp"
#include "sonc/circuit.hpp"
#include "sonc/dual_cone.hpp"
#include "sonc/lp.hpp"
#include "sonc/oracle.hpp"
#include "sonc/support.hpp"
