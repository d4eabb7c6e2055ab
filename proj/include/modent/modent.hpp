// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "modent/algebra.hpp"
#include "modent/entropy.hpp"
#include "modent/error.hpp"
#include "modent/frames.hpp"
#include "modent/json_io.hpp"
#include "modent/module_space.hpp"
#include "modent/report_io.hpp"
#include "modent/rng.hpp"
#include "modent/verify.hpp"
