#pragma once

#include "monoq/cocycle.hpp"
#include "monoq/errors.hpp"
#include "monoq/fd.hpp"
#include "monoq/lie_poisson.hpp"
#include "monoq/linalg.hpp"
#include "monoq/operators.hpp"
#include "monoq/pauli.hpp"
#include "monoq/poincare.hpp"
#include "monoq/probe.hpp"
#include "monoq/quaternion.hpp"
#include "monoq/report.hpp"
#include "monoq/sampling.hpp"
#include "monoq/suites.hpp"
#include "monoq/vec3.hpp"
#include "monoq/weyl.hpp"
