#pragma once

#include "trifold/diffalg/matrix3.hpp"

namespace trifold {

using OmegaMatrix = Matrix3;

}  // namespace trifold
