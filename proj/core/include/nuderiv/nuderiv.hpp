#pragma once

#include "nuderiv/combinatorics.hpp"
#include "nuderiv/compensated_sum.hpp"
#include "nuderiv/errors.hpp"
#include "nuderiv/gamma_recip.hpp"
#include "nuderiv/oracle.hpp"
#include "nuderiv/order_derivative.hpp"
#include "nuderiv/pochhammer.hpp"
