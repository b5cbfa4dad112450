#pragma once

#include "ultraword/consequence.hpp"
#include "ultraword/error.hpp"
#include "ultraword/hyperreal.hpp"
#include "ultraword/language.hpp"
#include "ultraword/numerics.hpp"
#include "ultraword/order_time.hpp"
#include "ultraword/paradigm.hpp"
#include "ultraword/signatures.hpp"
