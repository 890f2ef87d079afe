#pragma once

#include "g2kit/casimir.hpp"
#include "g2kit/catalog.hpp"
#include "g2kit/error.hpp"
#include "g2kit/invariants.hpp"
#include "g2kit/matrix.hpp"
#include "g2kit/poly.hpp"
#include "g2kit/rational.hpp"
#include "g2kit/report.hpp"
#include "g2kit/roots.hpp"
#include "g2kit/scalar.hpp"
#include "g2kit/suites.hpp"
#include "g2kit/tensor.hpp"
#include "g2kit/tensor_io.hpp"
#include "g2kit/verifier.hpp"
