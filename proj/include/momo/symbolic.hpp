#pragma once

#include "momo/symbolic/language.hpp"
#include "momo/symbolic/morse.hpp"
#include "momo/symbolic/odometer.hpp"
#include "momo/symbolic/substitution.hpp"
#include "momo/symbolic/word.hpp"
