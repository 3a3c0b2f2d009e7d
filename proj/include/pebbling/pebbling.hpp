// Copyright 2026 The Pebbling Toolkit Authors
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

#pragma once

#include "pebbling/configuration.hpp"
#include "pebbling/families.hpp"
#include "pebbling/flow.hpp"
#include "pebbling/formulas.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/homomorphism.hpp"
#include "pebbling/io.hpp"
#include "pebbling/simplex.hpp"
#include "pebbling/smv.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/weight_function.hpp"
#include "pebbling/zero_sum.hpp"
