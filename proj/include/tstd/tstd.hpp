#ifndef TSTD_TSTD_HPP
#define TSTD_TSTD_HPP

#include "tstd/division.hpp"
#include "tstd/field.hpp"
#include "tstd/idealops.hpp"
#include "tstd/io.hpp"
#include "tstd/ordering.hpp"
#include "tstd/poly.hpp"
#include "tstd/ring.hpp"
#include "tstd/session.hpp"
#include "tstd/stdbasis.hpp"
#include "tstd/syzygy.hpp"
#include "tstd/tropical.hpp"

#endif
