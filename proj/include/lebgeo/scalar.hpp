#pragma once

#include <boost/math/constants/constants.hpp>

namespace lebgeo {

template <typename Scalar>
Scalar pi_value() {
  return boost::math::constants::pi<Scalar>();
}

}  // namespace lebgeo
