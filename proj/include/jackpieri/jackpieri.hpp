#pragma once

#include "jackpieri/cache.hpp"
#include "jackpieri/combinatorics.hpp"
#include "jackpieri/error.hpp"
#include "jackpieri/field.hpp"
#include "jackpieri/identities.hpp"
#include "jackpieri/interpjack.hpp"
#include "jackpieri/jack.hpp"
#include "jackpieri/kernel.hpp"
#include "jackpieri/linsolve.hpp"
#include "jackpieri/operators.hpp"
#include "jackpieri/polyring.hpp"
#include "jackpieri/report.hpp"
