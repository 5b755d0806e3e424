// SPDX-License-Identifier: Apache-2.0
//
// irsee - energy-efficiency analysis of IRS-aided links under statistical QoS
// Copyright (C) 2026 The irsee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSEE_IRSEE_HPP
#define IRSEE_IRSEE_HPP

#include "channel.hpp"
#include "ee.hpp"
#include "effcap.hpp"
#include "irs.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "sampler.hpp"
#include "scenario.hpp"
#include "stats.hpp"
#include "sweep.hpp"
#include "validate.hpp"

#endif
