#ifndef ALTRAT_ALTRAT_HPP_
#define ALTRAT_ALTRAT_HPP_

#include "altrat/approximation.hpp"
#include "altrat/audit.hpp"
#include "altrat/error.hpp"
#include "altrat/families.hpp"
#include "altrat/jacobi.hpp"
#include "altrat/params.hpp"
#include "altrat/quadrature.hpp"
#include "altrat/rational.hpp"
#include "altrat/special.hpp"

#endif  // ALTRAT_ALTRAT_HPP_
