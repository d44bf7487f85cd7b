// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Umbrella header.

#pragma once

#include "hofa/budget.hpp"
#include "hofa/error.hpp"
#include "hofa/field.hpp"
#include "hofa/freiman.hpp"
#include "hofa/harmonic.hpp"
#include "hofa/io.hpp"
#include "hofa/lab.hpp"
#include "hofa/multiaffine.hpp"
#include "hofa/polynomial.hpp"
#include "hofa/random.hpp"
