#pragma once

#include "rootcomb/affine_weyl.hpp"
#include "rootcomb/classify.hpp"
#include "rootcomb/golden.hpp"
#include "rootcomb/root_system.hpp"
#include "rootcomb/weight.hpp"
#include "rootcomb/weyl_dims.hpp"
#include "rootcomb/weyl_group.hpp"
