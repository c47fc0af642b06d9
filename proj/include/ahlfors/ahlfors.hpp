#pragma once

#include "ahlfors/errors.hpp"
#include "ahlfors/evaluate.hpp"
#include "ahlfors/geometry.hpp"
#include "ahlfors/kernels.hpp"
#include "ahlfors/nystrom.hpp"
#include "ahlfors/szego.hpp"
#include "ahlfors/zerofinder.hpp"
