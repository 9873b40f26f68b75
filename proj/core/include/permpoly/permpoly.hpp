#pragma once

#include "permpoly/exceptional.hpp"
#include "permpoly/field.hpp"
#include "permpoly/json.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/words.hpp"
