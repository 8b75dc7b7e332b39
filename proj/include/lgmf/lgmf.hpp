#pragma once

// Umbrella header.
#include "lgmf/errors.hpp"
#include "lgmf/exterior.hpp"
#include "lgmf/homotopy.hpp"
#include "lgmf/io.hpp"
#include "lgmf/linsolve.hpp"
#include "lgmf/matfac.hpp"
#include "lgmf/matrix.hpp"
#include "lgmf/polynomial.hpp"
#include "lgmf/rational.hpp"
#include "lgmf/tensor.hpp"
#include "lgmf/unit.hpp"
