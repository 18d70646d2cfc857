#ifndef APOLAR_APOLAR_HPP
#define APOLAR_APOLAR_HPP

#include "apolar/exactlin.hpp"
#include "apolar/gradedness.hpp"
#include "apolar/hvectors.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/rational.hpp"
#include "apolar/report.hpp"

#endif  // APOLAR_APOLAR_HPP
