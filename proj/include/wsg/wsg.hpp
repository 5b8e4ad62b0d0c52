#ifndef WSG_WSG_HPP
#define WSG_WSG_HPP

#include "wsg/errors.hpp"
#include "wsg/series.hpp"
#include "wsg/onepoint.hpp"
#include "wsg/twopoint.hpp"
#include "wsg/oracle.hpp"
#include "wsg/verification.hpp"

#endif  // WSG_WSG_HPP
