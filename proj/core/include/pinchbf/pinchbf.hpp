// SPDX-License-Identifier: Apache-2.0
//
// pinchbf - pinching-antenna multiuser downlink beamforming
// Copyright (C) 2026 The pinchbf Authors
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

#pragma once

#include "pinchbf/baselines.hpp"
#include "pinchbf/channel.hpp"
#include "pinchbf/fpbcd.hpp"
#include "pinchbf/geometry.hpp"
#include "pinchbf/harness.hpp"
#include "pinchbf/io.hpp"
#include "pinchbf/metrics.hpp"
#include "pinchbf/rng.hpp"
#include "pinchbf/types.hpp"
