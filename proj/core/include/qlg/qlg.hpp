#pragma once

#include "qlg/analytic.hpp"
#include "qlg/dirac.hpp"
#include "qlg/errors.hpp"
#include "qlg/gates.hpp"
#include "qlg/numerics.hpp"
#include "qlg/path_kernel.hpp"
#include "qlg/statevector.hpp"
#include "qlg/version.hpp"
