#pragma once

#include "landen/agm.hpp"
#include "landen/convergence.hpp"
#include "landen/degree6.hpp"
#include "landen/error.hpp"
#include "landen/quadratic.hpp"
#include "landen/quadrature.hpp"
#include "landen/real.hpp"
#include "landen/scaling.hpp"
