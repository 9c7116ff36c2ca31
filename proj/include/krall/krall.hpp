#ifndef KRALL_KRALL_HPP
#define KRALL_KRALL_HPP

#include "krall/rational.hpp"
#include "krall/poly.hpp"
#include "krall/rational_fn.hpp"
#include "krall/log_germ.hpp"
#include "krall/endpoint_fn.hpp"
#include "krall/params.hpp"
#include "krall/krall_operator.hpp"
#include "krall/kappa_space.hpp"
#include "krall/test_functions.hpp"
#include "krall/concomitant.hpp"
#include "krall/frobenius.hpp"
#include "krall/gkn_em.hpp"
#include "krall/report.hpp"
#include "krall/suites.hpp"

#endif  // KRALL_KRALL_HPP
