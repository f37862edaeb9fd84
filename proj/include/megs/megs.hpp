// Copyright 2026 The megs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Umbrella header.
 */
#pragma once

#include "megs/class_operators.hpp"
#include "megs/concurrence.hpp"
#include "megs/errors.hpp"
#include "megs/labels.hpp"
#include "megs/megs_catalog.hpp"
#include "megs/multilinear.hpp"
#include "megs/phase_povm.hpp"
#include "megs/state_file.hpp"
#include "megs/states.hpp"
