#pragma once

#include "quotmotive/algebra/integer.hpp"
#include "quotmotive/algebra/motive_class.hpp"
#include "quotmotive/algebra/poly.hpp"
#include "quotmotive/algebra/series.hpp"
#include "quotmotive/algebra/substitute.hpp"
#include "quotmotive/curve_spec.hpp"
#include "quotmotive/error.hpp"
#include "quotmotive/motive/classes.hpp"
#include "quotmotive/motive/composition.hpp"
#include "quotmotive/motive/poincare.hpp"
#include "quotmotive/motive/point_count.hpp"
#include "quotmotive/oracle/budget.hpp"
#include "quotmotive/oracle/curve.hpp"
#include "quotmotive/oracle/finite_field.hpp"
#include "quotmotive/oracle/hermite.hpp"
#include "quotmotive/oracle/submodules.hpp"
