#pragma once

#include "thetaval/acceleration.hpp"
#include "thetaval/approx.hpp"
#include "thetaval/epstein.hpp"
#include "thetaval/form.hpp"
#include "thetaval/format.hpp"
#include "thetaval/integrals.hpp"
#include "thetaval/kronecker.hpp"
#include "thetaval/modular.hpp"
#include "thetaval/number_theory.hpp"
#include "thetaval/qseries.hpp"
#include "thetaval/quadrature.hpp"
#include "thetaval/report.hpp"
#include "thetaval/special_values.hpp"
#include "thetaval/upper_half_plane.hpp"
#include "thetaval/verification.hpp"
